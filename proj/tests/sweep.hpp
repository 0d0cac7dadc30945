// The graph corpus for the theorem sweep: connected undirected multigraphs on
// {0,...,n}, edge multiplicities at most 2, one representative per class under
// relabelings that fix the root. All classes with n <= 3 are included; for
// n = 4 only the classes with at most five edges, which keeps the corpus at
// 201 graphs.
#ifndef POWERIDEAL_TESTS_SWEEP_HPP
#define POWERIDEAL_TESTS_SWEEP_HPP

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include <powerideal/graph.hpp>

namespace sweep
{

using powerideal::RootedMultigraph;

inline constexpr int max_multiplicity = 2;
inline constexpr int largest_n_edge_cap = 5;

inline std::vector<std::pair<int, int>> vertex_pairs(int n)
{
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            pairs.emplace_back(u, v);
        }
    }
    return pairs;
}

inline bool connected(int n, const std::vector<std::pair<int, int>> &pairs, const std::vector<int> &mult)
{
    std::vector<int> comp(static_cast<std::size_t>(n + 1));
    std::iota(comp.begin(), comp.end(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            if (mult[p] == 0) {
                continue;
            }
            auto &a = comp[static_cast<std::size_t>(pairs[p].first)];
            auto &b = comp[static_cast<std::size_t>(pairs[p].second)];
            if (a != b) {
                a = b = std::min(a, b);
                changed = true;
            }
        }
    }
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

// Lexicographically smallest multiplicity vector over root-fixing relabelings.
inline std::vector<int> canonical_form(int n, const std::vector<std::pair<int, int>> &pairs, const std::vector<int> &mult)
{
    std::vector<int> perm(static_cast<std::size_t>(n + 1));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    do {
        std::vector<int> image(pairs.size());
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            int a = perm[static_cast<std::size_t>(pairs[p].first)];
            int b = perm[static_cast<std::size_t>(pairs[p].second)];
            if (a > b) {
                std::swap(a, b);
            }
            const auto where = std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) - pairs.begin();
            image[static_cast<std::size_t>(where)] = mult[p];
        }
        if (best.empty() || image < best) {
            best = image;
        }
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return best;
}

inline std::vector<RootedMultigraph> graphs_with_n(int n, int edge_cap)
{
    const auto pairs = vertex_pairs(n);
    std::set<std::vector<int>> seen;
    std::vector<std::pair<int, RootedMultigraph>> found;
    std::vector<int> mult(pairs.size(), 0);
    while (true) {
        std::size_t pos = 0;
        while (pos < mult.size() && mult[pos] == max_multiplicity) {
            mult[pos++] = 0;
        }
        if (pos == mult.size()) {
            break;
        }
        ++mult[pos];
        const int edges = std::accumulate(mult.begin(), mult.end(), 0);
        if (edges > edge_cap || !connected(n, pairs, mult)) {
            continue;
        }
        auto canon = canonical_form(n, pairs, mult);
        if (!seen.insert(canon).second) {
            continue;
        }
        std::vector<powerideal::EdgeSpec> spec;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            if (canon[p] > 0) {
                spec.push_back({pairs[p].first, pairs[p].second, canon[p]});
            }
        }
        found.emplace_back(edges, RootedMultigraph(n, spec));
    }
    std::stable_sort(found.begin(), found.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    std::vector<RootedMultigraph> out;
    for (auto &entry : found) {
        out.push_back(std::move(entry.second));
    }
    return out;
}

inline std::vector<RootedMultigraph> theorem_sweep()
{
    std::vector<RootedMultigraph> out;
    for (int n = 1; n <= 4; ++n) {
        const int cap = n == 4 ? largest_n_edge_cap : max_multiplicity * n * (n + 1) / 2;
        auto batch = graphs_with_n(n, cap);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

} // namespace sweep

#endif
