#ifndef POWERIDEAL_SUBGRAPHS_HPP
#define POWERIDEAL_SUBGRAPHS_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <powerideal/graph.hpp>
#include <powerideal/series.hpp>

namespace powerideal
{

// The index-th parallel arc from some vertex to `target`.
struct Arc {
    Vertex target = 0;
    int index = 0;

    friend bool operator==(const Arc &, const Arc &) = default;
    friend auto operator<=>(const Arc &, const Arc &) = default;
};

// A subgraph with at most one out-edge per non-root vertex and none at the
// root.
class FunctionalSubgraph
{
public:
    explicit FunctionalSubgraph(int n) : out_(static_cast<std::size_t>(n)) {}

    int n() const { return static_cast<int>(out_.size()); }

    std::optional<Arc> out_edge(Vertex v) const
    {
        if (v == 0) {
            return std::nullopt;
        }
        return out_.at(static_cast<std::size_t>(v - 1));
    }

    bool has_out_edge(Vertex v) const { return out_edge(v).has_value(); }

    void set_out_edge(Vertex v, std::optional<Arc> arc)
    {
        if (v < 1 || v > n()) {
            throw std::invalid_argument("only vertices 1..n carry out-edges");
        }
        out_[static_cast<std::size_t>(v - 1)] = arc;
    }

    // End of the directed path starting at v, or nullopt if the path runs into
    // a cycle.
    std::optional<Vertex> terminal(Vertex v) const
    {
        for (int steps = 0; steps <= n(); ++steps) {
            const auto arc = out_edge(v);
            if (!arc) {
                return v;
            }
            v = arc->target;
        }
        return std::nullopt;
    }

    // True if every out-edge is an arc of g.
    bool is_subgraph_of(const RootedMultigraph &g) const
    {
        if (n() != g.n()) {
            return false;
        }
        for (Vertex v = 1; v <= n(); ++v) {
            if (const auto arc = out_edge(v)) {
                if (arc->target < 0 || arc->target > g.n() || arc->index < 0 || arc->index >= g.arcs(v, arc->target)) {
                    return false;
                }
            }
        }
        return true;
    }

    friend bool operator==(const FunctionalSubgraph &, const FunctionalSubgraph &) = default;
    friend auto operator<=>(const FunctionalSubgraph &, const FunctionalSubgraph &) = default;

private:
    std::vector<std::optional<Arc>> out_;
};

// An acyclic set of undirected edge instances, stored as sorted ids into
// RootedMultigraph::edges().
struct Forest {
    std::vector<std::size_t> edges;

    std::size_t size() const { return edges.size(); }
    friend bool operator==(const Forest &, const Forest &) = default;
};

namespace detail
{

struct DisjointSets {
    std::vector<int> parent;

    explicit DisjointSets(int count) : parent(static_cast<std::size_t>(count))
    {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x)
    {
        while (parent[static_cast<std::size_t>(x)] != x) {
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        }
        return x;
    }

    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

inline void require_undirected(const RootedMultigraph &g, const char *what)
{
    if (!g.undirected()) {
        throw std::invalid_argument(std::string(what) + " needs an undirected graph");
    }
}

inline void extend_forests(const RootedMultigraph &g, std::size_t next, DisjointSets sets, std::vector<std::size_t> &current,
                           std::vector<Forest> &out)
{
    if (next == g.edges().size()) {
        out.push_back(Forest{current});
        return;
    }
    extend_forests(g, next + 1, sets, current, out);
    const auto &e = g.edges()[next];
    if (sets.unite(e.u, e.v)) {
        current.push_back(next);
        extend_forests(g, next + 1, sets, current, out);
        current.pop_back();
    }
}

// Adjacency of a forest: for each vertex, (neighbour, edge id) pairs.
inline std::vector<std::vector<std::pair<Vertex, std::size_t>>> forest_adjacency(const RootedMultigraph &g, const Forest &f)
{
    std::vector<std::vector<std::pair<Vertex, std::size_t>>> adj(static_cast<std::size_t>(g.vertex_count()));
    for (auto id : f.edges) {
        const auto &e = g.edges().at(id);
        adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, id);
        adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, id);
    }
    return adj;
}

} // namespace detail

// Every forest of g, including the empty one, by backtracking over edges in
// id order. Two parallel instances together are a cycle, so at most one of
// them is ever taken.
inline std::vector<Forest> enumerate_forests(const RootedMultigraph &g)
{
    detail::require_undirected(g, "forest enumeration");
    std::vector<Forest> out;
    std::vector<std::size_t> current;
    detail::extend_forests(g, 0, detail::DisjointSets(g.vertex_count()), current, out);
    return out;
}

inline bool is_forest(const RootedMultigraph &g, const Forest &f)
{
    detail::DisjointSets sets(g.vertex_count());
    for (auto id : f.edges) {
        if (id >= g.edges().size()) {
            return false;
        }
        if (!sets.unite(g.edges()[id].u, g.edges()[id].v)) {
            return false;
        }
    }
    return true;
}

// Orients every tree of f towards its smallest vertex.
inline FunctionalSubgraph canonical_orientation(const RootedMultigraph &g, const Forest &f)
{
    detail::require_undirected(g, "canonical orientation");
    if (!is_forest(g, f)) {
        throw std::invalid_argument("edge set is not a forest of the graph");
    }
    const auto adj = detail::forest_adjacency(g, f);
    FunctionalSubgraph h(g.n());
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
    // Visiting roots in increasing order makes each root its component's minimum.
    for (Vertex root = 0; root <= g.n(); ++root) {
        if (seen[static_cast<std::size_t>(root)]) {
            continue;
        }
        seen[static_cast<std::size_t>(root)] = true;
        std::vector<Vertex> stack{root};
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (const auto &[w, id] : adj[static_cast<std::size_t>(v)]) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    h.set_out_edge(w, Arc{v, g.edges()[id].index});
                    stack.push_back(w);
                }
            }
        }
    }
    return h;
}

// All functional subgraphs; the choices per vertex are "no edge" followed by
// every arc ordered by (target, index). Size is the product of outdeg(i) + 1.
inline std::vector<FunctionalSubgraph> enumerate_functional_subgraphs(const RootedMultigraph &g)
{
    std::vector<std::vector<std::optional<Arc>>> choices(static_cast<std::size_t>(g.n()));
    for (Vertex v = 1; v <= g.n(); ++v) {
        auto &c = choices[static_cast<std::size_t>(v - 1)];
        c.emplace_back(std::nullopt);
        for (Vertex w = 0; w <= g.n(); ++w) {
            for (int idx = 0; idx < g.arcs(v, w); ++idx) {
                c.emplace_back(Arc{w, idx});
            }
        }
    }
    std::vector<FunctionalSubgraph> out;
    std::vector<std::size_t> odometer(choices.size(), 0);
    while (true) {
        FunctionalSubgraph h(g.n());
        for (Vertex v = 1; v <= g.n(); ++v) {
            h.set_out_edge(v, choices[static_cast<std::size_t>(v - 1)][odometer[static_cast<std::size_t>(v - 1)]]);
        }
        out.push_back(std::move(h));
        std::size_t pos = 0;
        while (pos < odometer.size() && ++odometer[pos] == choices[pos].size()) {
            odometer[pos++] = 0;
        }
        if (pos == odometer.size()) {
            break;
        }
    }
    return out;
}

// The identity edge order 0, 1, ..., |E|-1.
inline std::vector<std::size_t> identity_edge_order(const RootedMultigraph &g)
{
    std::vector<std::size_t> order(g.edges().size());
    std::iota(order.begin(), order.end(), 0);
    return order;
}

// Number of edges e outside f that close a cycle with f and are the smallest
// edge of that cycle. order[p] is the edge id at position p.
inline int external_activity(const RootedMultigraph &g, const Forest &f, std::span<const std::size_t> order)
{
    detail::require_undirected(g, "external activity");
    const auto m = g.edges().size();
    if (order.size() != m) {
        throw std::invalid_argument("edge order must list every edge exactly once");
    }
    std::vector<std::size_t> rank(m, m);
    for (std::size_t pos = 0; pos < m; ++pos) {
        if (order[pos] >= m || rank[order[pos]] != m) {
            throw std::invalid_argument("edge order must list every edge exactly once");
        }
        rank[order[pos]] = pos;
    }
    if (!is_forest(g, f)) {
        throw std::invalid_argument("edge set is not a forest of the graph");
    }

    const auto adj = detail::forest_adjacency(g, f);
    std::vector<bool> in_forest(m, false);
    for (auto id : f.edges) {
        in_forest[id] = true;
    }

    // Smallest rank on the forest path a -> b, or nullopt if disconnected.
    auto path_min_rank = [&](Vertex a, Vertex b) -> std::optional<std::size_t> {
        const auto count = static_cast<std::size_t>(g.vertex_count());
        std::vector<std::optional<std::size_t>> via(count);
        std::vector<Vertex> prev(count, -1);
        std::vector<bool> seen(count, false);
        std::vector<Vertex> stack{a};
        seen[static_cast<std::size_t>(a)] = true;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (const auto &[w, id] : adj[static_cast<std::size_t>(v)]) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    prev[static_cast<std::size_t>(w)] = v;
                    via[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        if (!seen[static_cast<std::size_t>(b)]) {
            return std::nullopt;
        }
        std::size_t best = m;
        for (Vertex v = b; v != a; v = prev[static_cast<std::size_t>(v)]) {
            best = std::min(best, rank[*via[static_cast<std::size_t>(v)]]);
        }
        return best;
    };

    int active = 0;
    for (std::size_t id = 0; id < m; ++id) {
        if (in_forest[id]) {
            continue;
        }
        const auto &e = g.edges()[id];
        if (const auto cycle_min = path_min_rank(e.u, e.v); cycle_min && rank[id] < *cycle_min) {
            ++active;
        }
    }
    return active;
}

// Sum over forests of t^(|E| - |F| - ea(F)).
inline HilbertSeries activity_series(const RootedMultigraph &g, std::span<const std::size_t> order)
{
    HilbertSeries series;
    const auto m = g.edges().size();
    for (const auto &f : enumerate_forests(g)) {
        const auto ea = static_cast<std::size_t>(external_activity(g, f, order));
        series.add_to(m - f.size() - ea);
    }
    return series;
}

} // namespace powerideal

#endif
