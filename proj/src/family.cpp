#include "denergy/family.hpp"

#include "denergy/error.hpp"
#include "denergy/rng.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <set>

namespace denergy {

namespace {

using PairList = std::vector<std::pair<Vertex, Vertex>>;

[[noreturn]] void infeasible(const std::string& why)
{
    throw Error(Errc::InfeasibleSpec, why);
}

// Returns the pairing if it is simple, otherwise nullopt.
std::optional<PairList> simple_pairing(const std::vector<Vertex>& left, const std::vector<Vertex>& right)
{
    std::set<std::pair<Vertex, Vertex>> seen;
    PairList pairs;
    pairs.reserve(left.size());
    for (std::size_t k = 0; k < left.size(); ++k) {
        const Vertex a = std::min(left[k], right[k]);
        const Vertex b = std::max(left[k], right[k]);
        if (a == b || !seen.emplace(a, b).second) {
            return std::nullopt;
        }
        pairs.emplace_back(a, b);
    }
    return pairs;
}

Graph random_regular(const family::RandomRegular& spec)
{
    if (spec.r >= spec.n) {
        infeasible("random_regular needs r < n");
    }
    if ((spec.n * spec.r) % 2 != 0) {
        infeasible("random_regular needs n*r even");
    }

    SplitMix64 rng(spec.seed);
    std::vector<Vertex> stubs;
    stubs.reserve(spec.n * spec.r);
    for (Vertex v = 0; v < spec.n; ++v) {
        stubs.insert(stubs.end(), spec.r, v);
    }

    std::vector<Vertex> left(stubs.size() / 2);
    std::vector<Vertex> right(stubs.size() / 2);
    for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
        rng.shuffle(stubs);
        for (std::size_t k = 0; k < left.size(); ++k) {
            left[k] = stubs[2 * k];
            right[k] = stubs[2 * k + 1];
        }
        if (auto pairs = simple_pairing(left, right)) {
            Graph g = from_edge_list(spec.n, *pairs);
            if (is_connected(g)) {
                return g;
            }
        }
    }
    throw Error(Errc::GenerationExhausted, label(FamilySpec{spec}) + " after " + std::to_string(kMaxResamples) +
                                               " resamples");
}

Graph random_biregular(const family::RandomBiregular& spec)
{
    if (spec.n1 * spec.r1 != spec.n2 * spec.r2) {
        infeasible("random_biregular needs n1*r1 == n2*r2");
    }
    if (spec.r1 > spec.n2 || spec.r2 > spec.n1) {
        infeasible("random_biregular needs r1 <= n2 and r2 <= n1");
    }

    SplitMix64 rng(spec.seed);
    std::vector<Vertex> left;
    std::vector<Vertex> right;
    for (Vertex v = 0; v < spec.n1; ++v) {
        left.insert(left.end(), spec.r1, v);
    }
    for (Vertex v = 0; v < spec.n2; ++v) {
        right.insert(right.end(), spec.r2, spec.n1 + v);
    }

    for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
        rng.shuffle(right);
        if (auto pairs = simple_pairing(left, right)) {
            Graph g = from_edge_list(spec.n1 + spec.n2, *pairs);
            if (is_connected(g)) {
                return g;
            }
        }
    }
    throw Error(Errc::GenerationExhausted, label(FamilySpec{spec}) + " after " + std::to_string(kMaxResamples) +
                                               " resamples");
}

struct GenerateVisitor {
    Graph operator()(const family::Complete& s) const
    {
        if (s.n == 0) {
            infeasible("complete needs n >= 1");
        }
        PairList pairs;
        for (Vertex u = 0; u < s.n; ++u) {
            for (Vertex v = u + 1; v < s.n; ++v) {
                pairs.emplace_back(u, v);
            }
        }
        return from_edge_list(s.n, pairs);
    }

    Graph operator()(const family::Cycle& s) const
    {
        if (s.n < 3) {
            infeasible("cycle needs n >= 3");
        }
        PairList pairs;
        for (Vertex u = 0; u < s.n; ++u) {
            pairs.emplace_back(u, (u + 1) % s.n);
        }
        return from_edge_list(s.n, pairs);
    }

    Graph operator()(const family::Petersen&) const
    {
        // Vertices are the 2-subsets of {0..4} in lexicographic order;
        // adjacent iff disjoint.
        std::vector<std::pair<int, int>> subsets;
        for (int a = 0; a < 5; ++a) {
            for (int b = a + 1; b < 5; ++b) {
                subsets.emplace_back(a, b);
            }
        }
        PairList pairs;
        for (Vertex i = 0; i < subsets.size(); ++i) {
            for (Vertex j = i + 1; j < subsets.size(); ++j) {
                const auto [a, b] = subsets[i];
                const auto [c, d] = subsets[j];
                if (a != c && a != d && b != c && b != d) {
                    pairs.emplace_back(i, j);
                }
            }
        }
        return from_edge_list(subsets.size(), pairs);
    }

    Graph operator()(const family::CompleteBipartite& s) const
    {
        if (s.a == 0 || s.b == 0) {
            infeasible("complete_bipartite needs a, b >= 1");
        }
        PairList pairs;
        for (Vertex u = 0; u < s.a; ++u) {
            for (Vertex v = 0; v < s.b; ++v) {
                pairs.emplace_back(u, s.a + v);
            }
        }
        return from_edge_list(s.a + s.b, pairs);
    }

    Graph operator()(const family::RandomRegular& s) const { return random_regular(s); }
    Graph operator()(const family::RandomBiregular& s) const { return random_biregular(s); }
};

struct LabelVisitor {
    std::string operator()(const family::Complete& s) const { return "complete:" + std::to_string(s.n); }
    std::string operator()(const family::Cycle& s) const { return "cycle:" + std::to_string(s.n); }
    std::string operator()(const family::Petersen&) const { return "petersen"; }
    std::string operator()(const family::CompleteBipartite& s) const
    {
        return "complete_bipartite:" + std::to_string(s.a) + "," + std::to_string(s.b);
    }
    std::string operator()(const family::RandomRegular& s) const
    {
        return "random_regular:n=" + std::to_string(s.n) + ",r=" + std::to_string(s.r) +
               ",seed=" + std::to_string(s.seed);
    }
    std::string operator()(const family::RandomBiregular& s) const
    {
        return "random_biregular:n1=" + std::to_string(s.n1) + ",n2=" + std::to_string(s.n2) +
               ",r1=" + std::to_string(s.r1) + ",r2=" + std::to_string(s.r2) + ",seed=" + std::to_string(s.seed);
    }
};

// ---------------------------------------------------------------------------
// Mini-grammar

[[noreturn]] void parse_error(std::string_view item, const std::string& why)
{
    throw Error(Errc::ParseError, "family '" + std::string(item) + "': " + why);
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

std::uint64_t parse_uint(std::string_view item, std::string_view text)
{
    std::uint64_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        parse_error(item, "'" + std::string(text) + "' is not a non-negative integer");
    }
    return value;
}

struct Range {
    std::uint64_t lo;
    std::uint64_t hi;
};

Range parse_range(std::string_view item, std::string_view text)
{
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const auto v = parse_uint(item, text);
        return {v, v};
    }
    const Range r{parse_uint(item, text.substr(0, dots)), parse_uint(item, text.substr(dots + 2))};
    if (r.lo > r.hi) {
        parse_error(item, "empty range '" + std::string(text) + "'");
    }
    return r;
}

const std::map<std::string, std::vector<std::string>, std::less<>>& parameter_names()
{
    static const std::map<std::string, std::vector<std::string>, std::less<>> names{
        {"complete", {"n"}},
        {"cycle", {"n"}},
        {"petersen", {}},
        {"complete_bipartite", {"a", "b"}},
        {"random_regular", {"n", "r", "seed"}},
        {"random_biregular", {"n1", "n2", "r1", "r2", "seed"}},
    };
    return names;
}

FamilySpec make_spec(std::string_view name, const std::vector<std::uint64_t>& v)
{
    if (name == "complete") return family::Complete{v[0]};
    if (name == "cycle") return family::Cycle{v[0]};
    if (name == "petersen") return family::Petersen{};
    if (name == "complete_bipartite") return family::CompleteBipartite{v[0], v[1]};
    if (name == "random_regular") return family::RandomRegular{v[0], v[1], v[2]};
    return family::RandomBiregular{v[0], v[1], v[2], v[3], v[4]};
}

void parse_item(std::string_view item, std::uint64_t default_seed, std::vector<FamilySpec>& out)
{
    const auto colon = item.find(':');
    const auto name = trim(item.substr(0, colon));
    if (name == "standard") {
        if (colon != std::string_view::npos) {
            parse_error(item, "'standard' takes no parameters");
        }
        const auto suite = standard_suite();
        out.insert(out.end(), suite.begin(), suite.end());
        return;
    }

    const auto found = parameter_names().find(name);
    if (found == parameter_names().end()) {
        parse_error(item, "unknown family '" + std::string(name) +
                              "'; expected complete, cycle, petersen, complete_bipartite, random_regular, "
                              "random_biregular or standard");
    }
    const auto& keys = found->second;

    std::vector<std::optional<Range>> ranges(keys.size());
    if (colon != std::string_view::npos) {
        std::size_t position = 0;
        for (auto param : split(item.substr(colon + 1), ',')) {
            const auto eq = param.find('=');
            std::size_t slot = position;
            std::string_view value = param;
            if (eq != std::string_view::npos) {
                const auto key = trim(param.substr(0, eq));
                const auto it = std::find(keys.begin(), keys.end(), key);
                if (it == keys.end()) {
                    parse_error(item, "unknown parameter '" + std::string(key) + "'");
                }
                slot = static_cast<std::size_t>(it - keys.begin());
                value = trim(param.substr(eq + 1));
            } else {
                ++position;
            }
            if (slot >= keys.size()) {
                parse_error(item, "too many parameters");
            }
            if (ranges[slot]) {
                parse_error(item, "parameter '" + keys[slot] + "' given twice");
            }
            ranges[slot] = parse_range(item, value);
        }
    }
    for (std::size_t k = 0; k < keys.size(); ++k) {
        if (!ranges[k]) {
            if (keys[k] != "seed") {
                parse_error(item, "missing parameter '" + keys[k] + "'");
            }
            ranges[k] = Range{default_seed, default_seed};
        }
    }

    // Cartesian product, first parameter outermost.
    std::vector<std::uint64_t> current(keys.size());
    auto expand = [&](auto&& self, std::size_t k) -> void {
        if (k == keys.size()) {
            out.push_back(make_spec(name, current));
            return;
        }
        for (std::uint64_t v = ranges[k]->lo;; ++v) {
            current[k] = v;
            self(self, k + 1);
            if (v == ranges[k]->hi) {
                break;
            }
        }
    };
    expand(expand, 0);
}

} // namespace

Graph generate(const FamilySpec& spec)
{
    return std::visit(GenerateVisitor{}, spec);
}

std::string label(const FamilySpec& spec)
{
    return std::visit(LabelVisitor{}, spec);
}

std::vector<FamilySpec> parse_family_specs(std::string_view text, std::uint64_t default_seed)
{
    std::vector<FamilySpec> out;
    for (auto item : split(text, ';')) {
        if (item.empty()) {
            parse_error(text, "empty family item");
        }
        parse_item(item, default_seed, out);
    }
    return out;
}

std::vector<FamilySpec> standard_suite()
{
    std::vector<FamilySpec> suite;
    for (std::size_t n = 3; n <= 7; ++n) {
        suite.emplace_back(family::Complete{n});
    }
    for (std::size_t n = 3; n <= 10; ++n) {
        suite.emplace_back(family::Cycle{n});
    }
    suite.emplace_back(family::Petersen{});
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        suite.emplace_back(family::RandomRegular{12, 3, seed});
    }
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        suite.emplace_back(family::RandomRegular{10, 4, seed});
    }
    suite.emplace_back(family::CompleteBipartite{2, 3});
    suite.emplace_back(family::CompleteBipartite{2, 4});
    suite.emplace_back(family::CompleteBipartite{3, 4});
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        suite.emplace_back(family::RandomBiregular{4, 6, 3, 2, seed});
    }
    return suite;
}

} // namespace denergy
