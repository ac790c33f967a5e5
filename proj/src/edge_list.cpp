#include "denergy/edge_list.hpp"

#include "denergy/error.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace denergy {

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& why)
{
    throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": " + why);
}

std::vector<std::string> tokens(const std::string& line)
{
    std::istringstream words(line.substr(0, line.find('#')));
    std::vector<std::string> out;
    for (std::string w; words >> w;) {
        out.push_back(w);
    }
    return out;
}

std::size_t to_index(const std::string& text, std::size_t line_no)
{
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        fail(line_no, "'" + text + "' is not a non-negative integer");
    }
    return value;
}

} // namespace

Graph read_edge_list(std::istream& in)
{
    std::optional<std::size_t> n;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::set<std::pair<Vertex, Vertex>> seen;

    std::string line;
    for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
        const auto words = tokens(line);
        if (words.empty()) {
            continue;
        }
        if (!n) {
            if (words.size() != 1) {
                fail(line_no, "expected the vertex count on its own line");
            }
            n = to_index(words[0], line_no);
            continue;
        }
        if (words.size() != 2) {
            fail(line_no, "expected an edge \"u v\", got " + std::to_string(words.size()) + " fields");
        }
        const Vertex u = to_index(words[0], line_no);
        const Vertex v = to_index(words[1], line_no);
        if (u >= *n || v >= *n) {
            fail(line_no, "vertex out of range [0," + std::to_string(*n) + ")");
        }
        if (u == v) {
            fail(line_no, "self-loop at vertex " + std::to_string(u));
        }
        if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
            fail(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        }
        pairs.emplace_back(u, v);
    }
    if (!n) {
        throw Error(Errc::ParseError, "missing vertex count line");
    }
    return from_edge_list(*n, pairs);
}

Graph read_edge_list_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error(Errc::ParseError, "cannot open '" + path.string() + "'");
    }
    try {
        return read_edge_list(in);
    } catch (const Error& e) {
        throw Error(e.code(), path.string() + ": " + e.what());
    }
}

void write_edge_list(std::ostream& out, const Graph& g, std::string_view comment)
{
    if (!comment.empty()) {
        out << "# " << comment << '\n';
    }
    out << g.order() << '\n';
    for (const auto& e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
}

} // namespace denergy
