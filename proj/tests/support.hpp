#pragma once

#include "denergy/error.hpp"
#include "denergy/family.hpp"
#include "denergy/graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace denergy::fixtures {

inline std::vector<std::pair<std::string, Graph>> suite_graphs()
{
    std::vector<std::pair<std::string, Graph>> out;
    for (const auto& spec : standard_suite()) {
        out.emplace_back(label(spec), generate(spec));
    }
    return out;
}

inline Graph path(std::size_t n)
{
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex v = 0; v + 1 < n; ++v) {
        e.emplace_back(v, v + 1);
    }
    return from_edge_list(n, e);
}

inline Graph star(std::size_t leaves)
{
    return generate(family::CompleteBipartite{1, leaves});
}

#define EXPECT_THROW_CODE(stmt, errc)                                                                                  \
    do {                                                                                                               \
        try {                                                                                                          \
            stmt;                                                                                                      \
            ADD_FAILURE() << #stmt " did not throw";                                                                   \
        } catch (const ::denergy::Error& e_) {                                                                         \
            EXPECT_EQ(e_.code(), errc) << e_.what();                                                                   \
        }                                                                                                              \
    } while (0)

} // namespace denergy::fixtures
