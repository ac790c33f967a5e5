#include "denergy/edge_list.hpp"
#include "denergy/error.hpp"
#include "denergy/graph.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace denergy;

namespace {

std::size_t choose2_sum(const Graph& g)
{
    std::size_t s = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        s += g.degree(v) * (g.degree(v) - (g.degree(v) > 0 ? 1 : 0)) / 2;
    }
    return s;
}

} // namespace

TEST(FromEdgeList, SortsEdgesCanonically)
{
    const auto g = from_edge_list(4, {{2, 1}, {0, 3}, {1, 0}});
    ASSERT_EQ(g.size(), 3u);
    EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
    EXPECT_EQ(g.edges()[1], (Edge{0, 3}));
    EXPECT_EQ(g.edges()[2], (Edge{1, 2}));
    EXPECT_EQ(g.degree(1), 2u);
    EXPECT_TRUE(g.adjacent(2, 1));
    EXPECT_FALSE(g.adjacent(2, 3));
}

TEST(FromEdgeList, RejectsBadInput)
{
    EXPECT_THROW_CODE(from_edge_list(3, {{0, 0}}), Errc::SelfLoop);
    EXPECT_THROW_CODE(from_edge_list(3, {{0, 1}, {1, 0}}), Errc::DuplicateEdge);
    EXPECT_THROW_CODE(from_edge_list(3, {{0, 3}}), Errc::VertexOutOfRange);
}

TEST(FromEdgeList, EmptyGraphs)
{
    const auto g = from_edge_list(0, {});
    EXPECT_EQ(g.order(), 0u);
    const auto h = from_edge_list(3, {});
    EXPECT_EQ(h.size(), 0u);
    EXPECT_FALSE(is_connected(h));
}

TEST(Classify, RegularSemiregularIrregular)
{
    const auto k4 = generate(family::Complete{4});
    const auto cls = classify(k4);
    ASSERT_TRUE(cls.is_regular());
    EXPECT_EQ(std::get<Regular>(cls.kind).degree, 3u);
    EXPECT_TRUE(cls.connected);

    const auto k23 = classify(generate(family::CompleteBipartite{2, 3}));
    ASSERT_TRUE(k23.is_semiregular());
    const auto& s = std::get<Semiregular>(k23.kind);
    EXPECT_EQ(s.r1, 3u);
    EXPECT_EQ(s.r2, 2u);
    EXPECT_EQ(s.part1.size(), 2u);
    EXPECT_EQ(s.part2.size(), 3u);

    EXPECT_TRUE(std::holds_alternative<Irregular>(classify(fixtures::path(4)).kind));
}

TEST(Classify, RegularBipartiteIsRegularButHasSemiregularStructure)
{
    const auto c4 = generate(family::Cycle{4});
    EXPECT_TRUE(classify(c4).is_regular());
    const auto s = semiregular_structure(c4);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->r1, 2u);
    EXPECT_EQ(s->r2, 2u);
    EXPECT_FALSE(semiregular_structure(generate(family::Cycle{5})));
}

TEST(Classify, Disconnected)
{
    // Two disjoint triangles.
    const auto g = from_edge_list(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    const auto cls = classify(g);
    EXPECT_TRUE(cls.is_regular());
    EXPECT_FALSE(cls.connected);
    EXPECT_EQ(describe(cls), "Regular(2), disconnected");
}

TEST(Classify, StandingAssumptions)
{
    EXPECT_TRUE(meets_standing_assumptions(classify(generate(family::Cycle{5}))));
    EXPECT_FALSE(meets_standing_assumptions(classify(from_edge_list(2, {{0, 1}}))));
    EXPECT_TRUE(meets_standing_assumptions(classify(generate(family::CompleteBipartite{2, 3}))));
    EXPECT_FALSE(meets_standing_assumptions(classify(fixtures::star(2))));
    EXPECT_FALSE(meets_standing_assumptions(classify(fixtures::path(4))));
}

TEST(LineGraph, TriangleIsTriangle)
{
    const auto l = line_graph(generate(family::Complete{3}));
    EXPECT_EQ(l.order(), 3u);
    EXPECT_EQ(l.size(), 3u);
}

TEST(LineGraph, StarIsComplete)
{
    const auto l = line_graph(fixtures::star(4));
    EXPECT_EQ(l, generate(family::Complete{4}));
}

TEST(LineGraph, EmptyEdgeSet)
{
    EXPECT_THROW_CODE(line_graph(from_edge_list(3, {})), Errc::EmptyEdgeSet);
}

TEST(DerivedGraphs, CountsOnSuite)
{
    for (const auto& [name, g] : fixtures::suite_graphs()) {
        SCOPED_TRACE(name);
        const auto n = g.order();
        const auto m = g.size();
        const auto adj_pairs = choose2_sum(g);

        const auto l = line_graph(g);
        EXPECT_EQ(l.order(), m);
        EXPECT_EQ(l.size(), adj_pairs);

        const auto r = r_graph(g);
        EXPECT_EQ(r.order(), n + m);
        EXPECT_EQ(r.size(), 3 * m);
        for (std::size_t i = 0; i < m; ++i) {
            EXPECT_EQ(r.degree(n + i), 2u);
        }
        for (Vertex v = 0; v < n; ++v) {
            EXPECT_EQ(r.degree(v), 2 * g.degree(v));
        }

        const auto q = q_graph(g);
        EXPECT_EQ(q.order(), n + m);
        EXPECT_EQ(q.size(), 2 * m + adj_pairs);
        for (Vertex v = 0; v < n; ++v) {
            EXPECT_EQ(q.degree(v), g.degree(v));
        }
    }
}

TEST(DerivedGraphs, QGraphEdgeVerticesMatchLineGraph)
{
    const auto g = generate(family::Petersen{});
    const auto q = q_graph(g);
    const auto l = line_graph(g);
    const auto n = g.order();
    for (const auto& e : l.edges()) {
        EXPECT_TRUE(q.adjacent(n + e.u, n + e.v));
    }
    for (const auto& e : g.edges()) {
        EXPECT_FALSE(q.adjacent(e.u, e.v));
    }
}

TEST(EdgeList, RoundTrip)
{
    for (const auto& [name, g] : fixtures::suite_graphs()) {
        std::stringstream io;
        write_edge_list(io, g, name);
        EXPECT_EQ(read_edge_list(io), g) << name;
    }
}

TEST(EdgeList, ReportsLineNumbers)
{
    auto expect_parse_error = [](const std::string& text, const std::string& needle) {
        std::istringstream in(text);
        try {
            read_edge_list(in);
            ADD_FAILURE() << "no error for " << text;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::ParseError);
            EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
        }
    };
    expect_parse_error("3\n0 1\n1 1\n", "line 3");
    expect_parse_error("3\n0 1\n0 x\n", "line 3");
    expect_parse_error("# c\n3\n0 1 2\n", "line 3");
    expect_parse_error("3\n0 5\n", "line 2");
    expect_parse_error("3\n0 1\n1 0\n", "line 3");
    expect_parse_error("# only a comment\n", "");
}

TEST(EdgeList, SkipsCommentsAndBlankLines)
{
    std::istringstream in("# K3\n\n3\n# edges\n0 1\n\n1 2\n0 2\n");
    EXPECT_EQ(read_edge_list(in), generate(family::Complete{3}));
}
