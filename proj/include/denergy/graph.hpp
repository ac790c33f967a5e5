#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace denergy {

using Vertex = std::size_t;

/// Unordered edge stored with u < v. The position in Graph::edges() is the edge index.
struct Edge {
    Vertex u;
    Vertex v;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph. Immutable once built; the only way to build one is
/// from_edge_list(), which validates and canonicalises the edge order.
class Graph {
public:
    Graph() = default;

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept { return edges_.size(); }

    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
    std::span<const Edge> edges() const noexcept { return edges_; }

    bool adjacent(Vertex u, Vertex v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend Graph from_edge_list(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs);

    std::vector<std::vector<Vertex>> adj_;
    std::vector<Edge> edges_;
};

/// Validates the pairs (range, self-loops, duplicates in either orientation)
/// and returns a graph whose edges are sorted lexicographically.
Graph from_edge_list(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs);

// ---------------------------------------------------------------------------
// Regularity classification

struct Regular {
    std::size_t degree;
};

/// Bipartite graph with constant degree on each side; r1 >= r2 and part1 holds
/// the degree-r1 vertices.
struct Semiregular {
    std::size_t r1;
    std::size_t r2;
    std::vector<Vertex> part1;
    std::vector<Vertex> part2;
};

struct Irregular {};

struct RegularityClass {
    std::variant<Regular, Semiregular, Irregular> kind;
    bool connected = true;

    bool is_regular() const noexcept { return std::holds_alternative<Regular>(kind); }
    bool is_semiregular() const noexcept { return std::holds_alternative<Semiregular>(kind); }
};

RegularityClass classify(const Graph& g);

/// Bipartite constant-degree-per-side structure, if any. Unlike classify() this
/// also reports regular bipartite graphs, e.g. C4 as (2,2)-semiregular.
std::optional<Semiregular> semiregular_structure(const Graph& g);

bool is_connected(const Graph& g);

/// r >= 2 for regular graphs, r1 + r2 >= 4 for semiregular ones.
bool meets_standing_assumptions(const RegularityClass& cls);

std::string describe(const RegularityClass& cls);

// ---------------------------------------------------------------------------
// Derived graphs. Vertex i of line_graph(g) is edge i of g; r_graph and
// q_graph keep the original vertices at 0..n-1 and put the edge vertex of
// edge i at n + i.

Graph line_graph(const Graph& g);
Graph r_graph(const Graph& g);
Graph q_graph(const Graph& g);

} // namespace denergy
