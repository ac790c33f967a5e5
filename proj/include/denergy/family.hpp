#pragma once

#include "denergy/graph.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace denergy {

namespace family {

struct Complete {
    std::size_t n;
};
struct Cycle {
    std::size_t n;
};
/// Kneser graph K(5,2).
struct Petersen {};
struct CompleteBipartite {
    std::size_t a;
    std::size_t b;
};
/// Connected simple r-regular graph from the configuration model.
struct RandomRegular {
    std::size_t n;
    std::size_t r;
    std::uint64_t seed;
};
/// Connected simple biregular bipartite graph; vertices 0..n1-1 have degree
/// r1, vertices n1..n1+n2-1 have degree r2.
struct RandomBiregular {
    std::size_t n1;
    std::size_t n2;
    std::size_t r1;
    std::size_t r2;
    std::uint64_t seed;
};

} // namespace family

using FamilySpec = std::variant<family::Complete, family::Cycle, family::Petersen, family::CompleteBipartite,
                                family::RandomRegular, family::RandomBiregular>;

/// Whole-sample rejection cap for the random families.
inline constexpr int kMaxResamples = 1000;

Graph generate(const FamilySpec& spec);

/// Canonical text form; parse_family_specs(label(s)) yields {s}.
std::string label(const FamilySpec& spec);

/// Parses the family mini-grammar:
///
///   list   := item (';' item)*
///   item   := name [':' param (',' param)*]
///   param  := [key '='] value
///   value  := int | int '..' int
///
/// Names: complete(n), cycle(n), petersen, complete_bipartite(a,b),
/// random_regular(n,r,seed), random_biregular(n1,n2,r1,r2,seed), standard.
/// Unkeyed values bind positionally in the order listed. Ranges expand to the
/// cartesian product in parameter order. A missing seed takes default_seed.
/// "standard" expands to standard_suite().
std::vector<FamilySpec> parse_family_specs(std::string_view text, std::uint64_t default_seed = 1);

/// Kn (n=3..7), Cn (n=3..10), Petersen, 5 random 3-regular graphs on 12
/// vertices, 5 random 4-regular graphs on 10 vertices, K2,3, K2,4, K3,4 and 3
/// random (3,2)-biregular graphs with parts of size 4 and 6.
std::vector<FamilySpec> standard_suite();

} // namespace denergy
