#ifndef POWERIDEAL_GRAPH_HPP
#define POWERIDEAL_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <powerideal/subset.hpp>

namespace powerideal
{

enum class Orientation { undirected, directed };

struct EdgeSpec {
    Vertex u = 0;
    Vertex v = 0;
    int multiplicity = 1;
};

// One concrete edge of an undirected multigraph: the index-th of the parallel
// edges between u < v.
struct EdgeInstance {
    Vertex u = 0;
    Vertex v = 0;
    int index = 0;

    friend bool operator==(const EdgeInstance &, const EdgeInstance &) = default;
    friend auto operator<=>(const EdgeInstance &, const EdgeInstance &) = default;
};

class graph_parse_error : public std::runtime_error
{
public:
    graph_parse_error(int line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    int line() const { return line_; }

private:
    int line_;
};

// Multigraph on {0,1,...,n} rooted at 0, stored as a dense matrix of arc
// multiplicities. Undirected edges are stored as a symmetric pair of arcs, so
// "edges leaving i" reads the same for both orientations.
class RootedMultigraph
{
public:
    RootedMultigraph(int n, std::span<const EdgeSpec> edges, Orientation orientation = Orientation::undirected)
        : n_(n), undirected_(orientation == Orientation::undirected)
    {
        if (n < 1 || n > max_vertices) {
            throw std::invalid_argument("graph needs between 1 and " + std::to_string(max_vertices)
                                        + " non-root vertices, got " + std::to_string(n));
        }
        arcs_.assign(static_cast<std::size_t>(vertex_count() * vertex_count()), 0);
        for (const auto &e : edges) {
            add(e);
        }
        if (undirected_) {
            for (Vertex u = 0; u <= n_; ++u) {
                for (Vertex v = u + 1; v <= n_; ++v) {
                    for (int idx = 0; idx < arcs(u, v); ++idx) {
                        edges_.push_back({u, v, idx});
                    }
                }
            }
        }
    }

    RootedMultigraph(int n, std::initializer_list<EdgeSpec> edges, Orientation orientation = Orientation::undirected)
        : RootedMultigraph(n, std::span<const EdgeSpec>(edges.begin(), edges.size()), orientation)
    {
    }

    // The complete graph K_{vertex_count}, rooted at 0.
    static RootedMultigraph complete(int vertex_count)
    {
        std::vector<EdgeSpec> edges;
        for (Vertex u = 0; u < vertex_count; ++u) {
            for (Vertex v = u + 1; v < vertex_count; ++v) {
                edges.push_back({u, v, 1});
            }
        }
        return RootedMultigraph(vertex_count - 1, edges);
    }

    int n() const { return n_; }
    int vertex_count() const { return n_ + 1; }
    bool undirected() const { return undirected_; }

    int arcs(Vertex from, Vertex to) const
    {
        return arcs_[static_cast<std::size_t>(from * vertex_count() + to)];
    }

    int out_degree(Vertex v) const
    {
        int total = 0;
        for (Vertex w = 0; w <= n_; ++w) {
            total += arcs(v, w);
        }
        return total;
    }

    // Undirected edge instances in (u, v, index) order. Empty for digraphs.
    const std::vector<EdgeInstance> &edges() const { return edges_; }

    std::size_t edge_count() const
    {
        if (undirected_) {
            return edges_.size();
        }
        std::size_t total = 0;
        for (int m : arcs_) {
            total += static_cast<std::size_t>(m);
        }
        return total;
    }

    // Position of an edge instance in edges(); throws if absent.
    std::size_t edge_id(Vertex a, Vertex b, int index) const
    {
        const EdgeInstance key{std::min(a, b), std::max(a, b), index};
        for (std::size_t id = 0; id < edges_.size(); ++id) {
            if (edges_[id] == key) {
                return id;
            }
        }
        throw std::out_of_range("no such edge instance");
    }

    friend bool operator==(const RootedMultigraph &, const RootedMultigraph &) = default;

private:
    void add(const EdgeSpec &e)
    {
        if (e.u < 0 || e.u > n_ || e.v < 0 || e.v > n_) {
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) + " "
                                        + std::to_string(e.v));
        }
        if (e.u == e.v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        }
        if (e.multiplicity < 0) {
            throw std::invalid_argument("negative edge multiplicity");
        }
        arcs_[static_cast<std::size_t>(e.u * vertex_count() + e.v)] += e.multiplicity;
        if (undirected_) {
            arcs_[static_cast<std::size_t>(e.v * vertex_count() + e.u)] += e.multiplicity;
        }
    }

    int n_;
    bool undirected_;
    std::vector<int> arcs_;
    std::vector<EdgeInstance> edges_;
};

// Number of edges from i to a vertex outside `subset`. The root is never in a
// subset, so edges to 0 always count.
inline int exit_degree(const RootedMultigraph &g, VertexSubset subset, Vertex i)
{
    if (subset.empty()) {
        throw std::invalid_argument("exit degree of an empty subset");
    }
    if (!subset.contains(i)) {
        throw std::invalid_argument("vertex " + std::to_string(i) + " is not in " + to_string(subset));
    }
    int total = 0;
    for (Vertex v = 0; v <= g.n(); ++v) {
        if (!subset.contains(v)) {
            total += g.arcs(i, v);
        }
    }
    return total;
}

// Total number of edges leaving `subset`.
inline int total_exit_degree(const RootedMultigraph &g, VertexSubset subset)
{
    if (subset.empty()) {
        throw std::invalid_argument("exit degree of an empty subset");
    }
    int total = 0;
    for (Vertex i : subset.members()) {
        total += exit_degree(g, subset, i);
    }
    return total;
}

// Text format:
//   # comment
//   graph <n> [directed]
//   <u> <v> [mult]
inline RootedMultigraph parse_graph(std::istream &in)
{
    std::string line;
    int line_no = 0;
    int n = -1;
    auto orientation = Orientation::undirected;
    std::vector<EdgeSpec> edges;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string tok; fields >> tok;) {
            tokens.push_back(tok);
        }
        auto to_int = [&](const std::string &tok) {
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(tok, &used);
            } catch (const std::exception &) {
                throw graph_parse_error(line_no, "expected an integer, got '" + tok + "'");
            }
            if (used != tok.size()) {
                throw graph_parse_error(line_no, "expected an integer, got '" + tok + "'");
            }
            return value;
        };
        if (n < 0) {
            if (tokens[0] != "graph" || tokens.size() < 2 || tokens.size() > 3) {
                throw graph_parse_error(line_no, "expected header 'graph <n> [directed]'");
            }
            n = to_int(tokens[1]);
            if (n < 1 || n > max_vertices) {
                throw graph_parse_error(line_no, "vertex count out of range: " + tokens[1]);
            }
            if (tokens.size() == 3) {
                if (tokens[2] != "directed") {
                    throw graph_parse_error(line_no, "unknown header flag '" + tokens[2] + "'");
                }
                orientation = Orientation::directed;
            }
            continue;
        }
        if (tokens.size() < 2 || tokens.size() > 3) {
            throw graph_parse_error(line_no, "expected '<u> <v> [mult]'");
        }
        EdgeSpec e{to_int(tokens[0]), to_int(tokens[1]), tokens.size() == 3 ? to_int(tokens[2]) : 1};
        if (e.u < 0 || e.u > n || e.v < 0 || e.v > n) {
            throw graph_parse_error(line_no, "vertex out of range 0.." + std::to_string(n));
        }
        if (e.u == e.v) {
            throw graph_parse_error(line_no, "self-loop at vertex " + std::to_string(e.u) + " is not allowed");
        }
        if (e.multiplicity < 1) {
            throw graph_parse_error(line_no, "multiplicity must be positive");
        }
        edges.push_back(e);
    }
    if (n < 0) {
        throw graph_parse_error(line_no, "missing 'graph <n>' header");
    }
    return RootedMultigraph(n, edges, orientation);
}

inline RootedMultigraph parse_graph(const std::string &text)
{
    std::istringstream in(text);
    return parse_graph(in);
}

inline void write_graph(std::ostream &out, const RootedMultigraph &g)
{
    out << "graph " << g.n() << (g.undirected() ? "" : " directed") << '\n';
    for (Vertex u = 0; u <= g.n(); ++u) {
        for (Vertex v = g.undirected() ? u + 1 : 0; v <= g.n(); ++v) {
            if (const int m = g.arcs(u, v); m > 0) {
                out << u << ' ' << v;
                if (m > 1) {
                    out << ' ' << m;
                }
                out << '\n';
            }
        }
    }
}

} // namespace powerideal

#endif
