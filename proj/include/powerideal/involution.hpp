#ifndef POWERIDEAL_INVOLUTION_HPP
#define POWERIDEAL_INVOLUTION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include <powerideal/graph.hpp>
#include <powerideal/ideal.hpp>
#include <powerideal/subgraphs.hpp>

namespace powerideal
{

// I_1 < I_2 < ... < I_k, strictly increasing nonempty subsets. May be empty.
class SubsetChain
{
public:
    SubsetChain() = default;

    explicit SubsetChain(std::vector<VertexSubset> sets) : sets_(std::move(sets))
    {
        for (std::size_t j = 0; j < sets_.size(); ++j) {
            if (sets_[j].empty()) {
                throw std::invalid_argument("chain members must be nonempty");
            }
            if (j > 0 && !sets_[j - 1].is_proper_subset_of(sets_[j])) {
                throw std::invalid_argument("chain members must strictly increase");
            }
        }
    }

    const std::vector<VertexSubset> &sets() const { return sets_; }
    std::size_t length() const { return sets_.size(); }
    bool empty() const { return sets_.empty(); }
    VertexSubset back() const { return sets_.back(); }

    SubsetChain extended(VertexSubset top) const
    {
        auto sets = sets_;
        sets.push_back(top);
        return SubsetChain(std::move(sets));
    }

    SubsetChain truncated() const
    {
        auto sets = sets_;
        sets.pop_back();
        return SubsetChain(std::move(sets));
    }

    friend bool operator==(const SubsetChain &, const SubsetChain &) = default;

private:
    std::vector<VertexSubset> sets_;
};

// Every chain of nonempty subsets of [n], the empty chain first.
inline std::vector<SubsetChain> enumerate_chains(int n)
{
    std::vector<SubsetChain> out;
    const auto full = VertexSubset::full(n);
    std::function<void(const std::vector<VertexSubset> &)> grow = [&](const std::vector<VertexSubset> &prefix) {
        out.emplace_back(prefix);
        const auto base = prefix.empty() ? VertexSubset{} : prefix.back();
        const auto free = full.minus(base).mask();
        // Nonempty submasks of the vertices not yet in the chain.
        for (auto extra = free; extra != 0; extra = (extra - 1) & free) {
            auto next = prefix;
            next.push_back(base | VertexSubset::from_mask(extra));
            grow(next);
        }
    };
    grow({});
    return out;
}

// Unsigned product term of the alternating sum for a monotone monomial family:
// a vertex first entering the chain at I_j contributes nu(i) - deg_{x_i} m_{I_j},
// a vertex outside the chain contributes nu(i), where nu(i) = deg_{x_i} m_{{i}}.
inline std::int64_t chain_term(const MonomialIdeal &family, const SubsetChain &chain)
{
    std::int64_t product = 1;
    VertexSubset covered;
    auto singleton_degree = [&](Vertex i) {
        return family.generator(VertexSubset::of({i})).exponents[static_cast<std::size_t>(i - 1)];
    };
    for (const auto set : chain.sets()) {
        const auto &m = family.generator(set);
        for (Vertex i : set.minus(covered).members()) {
            product *= singleton_degree(i) - m.exponents[static_cast<std::size_t>(i - 1)];
        }
        covered = set;
    }
    for (Vertex i = 1; i <= family.n; ++i) {
        if (!covered.contains(i)) {
            product *= singleton_degree(i);
        }
    }
    return product;
}

struct AlternatingSum {
    std::int64_t value = 0;
    std::size_t nonzero_chains = 0;
};

// Sum over chains of (-1)^length * chain_term, for any monotone monomial family.
inline AlternatingSum alternating_sum(const MonomialIdeal &family)
{
    AlternatingSum result;
    for (const auto &chain : enumerate_chains(family.n)) {
        const auto term = chain_term(family, chain);
        if (term != 0) {
            ++result.nonzero_chains;
            result.value += chain.length() % 2 == 0 ? term : -term;
        }
    }
    return result;
}

inline std::int64_t alternating_sum_dimension(const RootedMultigraph &g)
{
    return alternating_sum(monomize(g, 1)).value;
}

// Conditions tying a functional subgraph to a chain: an out-edge of i in I_j
// stays in I_j, and the smallest vertex of each I_j has an out-edge.
inline bool is_compatible(const FunctionalSubgraph &h, const SubsetChain &chain)
{
    for (const auto set : chain.sets()) {
        if (!h.has_out_edge(set.min())) {
            return false;
        }
        for (Vertex i : set.members()) {
            if (const auto arc = h.out_edge(i); arc && !set.contains(arc->target)) {
                return false;
            }
        }
    }
    return true;
}

inline std::size_t count_compatible_pairs(std::span<const FunctionalSubgraph> subgraphs, const SubsetChain &chain)
{
    std::size_t count = 0;
    for (const auto &h : subgraphs) {
        if (is_compatible(h, chain)) {
            ++count;
        }
    }
    return count;
}

// Counts by direct enumeration of all functional subgraphs of g.
inline std::size_t count_compatible_pairs(const RootedMultigraph &g, const SubsetChain &chain)
{
    const auto all = enumerate_functional_subgraphs(g);
    return count_compatible_pairs(all, chain);
}

enum class Label { nonspecial, special };

struct LabeledVertices {
    std::vector<Label> label; // indexed by vertex 0..n
    VertexSubset special_set;
};

// Repeatedly take the smallest unlabelled vertex v. If v has an out-edge, v and
// everything still unlabelled is special and the scan stops. Otherwise v and
// every vertex whose path ends at v are non-special.
inline LabeledVertices label_special(const FunctionalSubgraph &h)
{
    const int n = h.n();
    LabeledVertices out;
    out.label.assign(static_cast<std::size_t>(n + 1), Label::nonspecial);
    std::vector<bool> labelled(static_cast<std::size_t>(n + 1), false);
    for (Vertex v = 0; v <= n; ++v) {
        if (labelled[static_cast<std::size_t>(v)]) {
            continue;
        }
        if (h.has_out_edge(v)) {
            for (Vertex w = v; w <= n; ++w) {
                if (!labelled[static_cast<std::size_t>(w)]) {
                    labelled[static_cast<std::size_t>(w)] = true;
                    out.label[static_cast<std::size_t>(w)] = Label::special;
                    out.special_set.insert(w);
                }
            }
            break;
        }
        labelled[static_cast<std::size_t>(v)] = true;
        for (Vertex w = 0; w <= n; ++w) {
            if (!labelled[static_cast<std::size_t>(w)] && h.terminal(w) == v) {
                labelled[static_cast<std::size_t>(w)] = true;
            }
        }
    }
    return out;
}

inline LabeledVertices label_special(const RootedMultigraph &g, const FunctionalSubgraph &h)
{
    if (!h.is_subgraph_of(g)) {
        throw std::invalid_argument("functional subgraph is not contained in the graph");
    }
    return label_special(h);
}

// Appends the special set S to the chain, or drops the top set when it already
// equals S. The pair (h, empty chain) with S empty is left alone.
inline SubsetChain kappa(const RootedMultigraph &g, const FunctionalSubgraph &h, const SubsetChain &chain)
{
    if (!h.is_subgraph_of(g) || !is_compatible(h, chain)) {
        throw std::invalid_argument("kappa needs a compatible (subgraph, chain) pair");
    }
    const auto special = label_special(h).special_set;
    if (chain.empty()) {
        return special.empty() ? chain : chain.extended(special);
    }
    if (chain.back() == special) {
        return chain.truncated();
    }
    return chain.extended(special);
}

} // namespace powerideal

#endif
