#include "denergy/graph.hpp"

#include "denergy/error.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace denergy {

bool Graph::adjacent(Vertex u, Vertex v) const
{
    if (u >= order() || v >= order()) {
        return false;
    }
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph from_edge_list(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs)
{
    Graph g;
    g.adj_.resize(n);
    g.edges_.reserve(pairs.size());

    std::set<Edge> seen;
    for (const auto& [a, b] : pairs) {
        if (a >= n || b >= n) {
            throw Error(Errc::VertexOutOfRange, "edge (" + std::to_string(a) + "," + std::to_string(b) +
                                                    ") outside [0," + std::to_string(n) + ")");
        }
        if (a == b) {
            throw Error(Errc::SelfLoop, "self-loop at vertex " + std::to_string(a));
        }
        const Edge e{std::min(a, b), std::max(a, b)};
        if (!seen.insert(e).second) {
            throw Error(Errc::DuplicateEdge, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                                 ") listed twice");
        }
    }

    g.edges_.assign(seen.begin(), seen.end());
    for (const auto& e : g.edges_) {
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
    }
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
    }
    return g;
}

namespace {

// Component id per vertex, in BFS discovery order.
std::vector<std::size_t> components(const Graph& g, std::size_t& count)
{
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> comp(g.order(), unset);
    count = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (comp[s] != unset) {
            continue;
        }
        std::queue<Vertex> frontier;
        frontier.push(s);
        comp[s] = count;
        while (!frontier.empty()) {
            const Vertex u = frontier.front();
            frontier.pop();
            for (Vertex w : g.neighbors(u)) {
                if (comp[w] == unset) {
                    comp[w] = count;
                    frontier.push(w);
                }
            }
        }
        ++count;
    }
    return comp;
}

} // namespace

bool is_connected(const Graph& g)
{
    std::size_t count = 0;
    components(g, count);
    return count <= 1;
}

std::optional<Semiregular> semiregular_structure(const Graph& g)
{
    const std::size_t n = g.order();
    if (g.size() == 0) {
        return std::nullopt;
    }

    std::vector<int> color(n, -1);
    std::vector<Vertex> members;
    std::optional<std::pair<std::size_t, std::size_t>> degrees; // (high, low)
    Semiregular out{};

    for (Vertex s = 0; s < n; ++s) {
        if (color[s] != -1) {
            continue;
        }
        if (g.degree(s) == 0) {
            return std::nullopt; // isolated vertex cannot sit in either part
        }
        members.clear();
        std::queue<Vertex> frontier;
        frontier.push(s);
        color[s] = 0;
        while (!frontier.empty()) {
            const Vertex u = frontier.front();
            frontier.pop();
            members.push_back(u);
            for (Vertex w : g.neighbors(u)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    frontier.push(w);
                } else if (color[w] == color[u]) {
                    return std::nullopt; // odd cycle
                }
            }
        }

        std::optional<std::size_t> side_degree[2];
        for (Vertex u : members) {
            auto& d = side_degree[color[u]];
            if (!d) {
                d = g.degree(u);
            } else if (*d != g.degree(u)) {
                return std::nullopt;
            }
        }
        const std::size_t d0 = *side_degree[0];
        const std::size_t d1 = *side_degree[1];
        const std::pair<std::size_t, std::size_t> here{std::max(d0, d1), std::min(d0, d1)};
        if (degrees && *degrees != here) {
            return std::nullopt;
        }
        degrees = here;

        const int high_color = d0 >= d1 ? 0 : 1;
        for (Vertex u : members) {
            (color[u] == high_color ? out.part1 : out.part2).push_back(u);
        }
    }

    out.r1 = degrees->first;
    out.r2 = degrees->second;
    std::sort(out.part1.begin(), out.part1.end());
    std::sort(out.part2.begin(), out.part2.end());
    return out;
}

RegularityClass classify(const Graph& g)
{
    RegularityClass cls{Irregular{}, is_connected(g)};
    if (g.order() == 0) {
        cls.kind = Regular{0};
        return cls;
    }

    const std::size_t d0 = g.degree(0);
    bool regular = true;
    for (Vertex v = 1; v < g.order(); ++v) {
        regular = regular && g.degree(v) == d0;
    }
    if (regular) {
        cls.kind = Regular{d0};
    } else if (auto semi = semiregular_structure(g)) {
        cls.kind = std::move(*semi);
    }
    return cls;
}

bool meets_standing_assumptions(const RegularityClass& cls)
{
    if (const auto* reg = std::get_if<Regular>(&cls.kind)) {
        return reg->degree >= 2;
    }
    if (const auto* semi = std::get_if<Semiregular>(&cls.kind)) {
        return semi->r1 + semi->r2 >= 4;
    }
    return false;
}

std::string describe(const RegularityClass& cls)
{
    std::string text;
    if (const auto* reg = std::get_if<Regular>(&cls.kind)) {
        text = "Regular(" + std::to_string(reg->degree) + ")";
    } else if (const auto* semi = std::get_if<Semiregular>(&cls.kind)) {
        text = "Semiregular(" + std::to_string(semi->r1) + "," + std::to_string(semi->r2) + ")";
    } else {
        text = "Irregular";
    }
    return text + (cls.connected ? ", connected" : ", disconnected");
}

// ---------------------------------------------------------------------------

namespace {

// Pairs of edge indices sharing exactly one endpoint, grouped by that endpoint.
std::vector<std::pair<Vertex, Vertex>> adjacent_edge_pairs(const Graph& g)
{
    std::vector<std::vector<Vertex>> incident(g.order());
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        incident[edges[i].u].push_back(i);
        incident[edges[i].v].push_back(i);
    }
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const auto& around : incident) {
        for (std::size_t a = 0; a < around.size(); ++a) {
            for (std::size_t b = a + 1; b < around.size(); ++b) {
                pairs.emplace_back(around[a], around[b]);
            }
        }
    }
    return pairs;
}

} // namespace

Graph line_graph(const Graph& g)
{
    if (g.size() == 0) {
        throw Error(Errc::EmptyEdgeSet, "line graph of an edgeless graph");
    }
    return from_edge_list(g.size(), adjacent_edge_pairs(g));
}

Graph r_graph(const Graph& g)
{
    const std::size_t n = g.order();
    const auto edges = g.edges();
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(3 * edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        pairs.emplace_back(edges[i].u, edges[i].v);
        pairs.emplace_back(n + i, edges[i].u);
        pairs.emplace_back(n + i, edges[i].v);
    }
    return from_edge_list(n + edges.size(), pairs);
}

Graph q_graph(const Graph& g)
{
    const std::size_t n = g.order();
    const auto edges = g.edges();
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        pairs.emplace_back(edges[i].u, n + i);
        pairs.emplace_back(n + i, edges[i].v);
    }
    for (const auto& [a, b] : adjacent_edge_pairs(g)) {
        pairs.emplace_back(n + a, n + b);
    }
    return from_edge_list(n + edges.size(), pairs);
}

} // namespace denergy
