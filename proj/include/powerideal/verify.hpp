#ifndef POWERIDEAL_VERIFY_HPP
#define POWERIDEAL_VERIFY_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <powerideal/graded_rank.hpp>
#include <powerideal/graph.hpp>
#include <powerideal/ideal.hpp>
#include <powerideal/involution.hpp>
#include <powerideal/standard_monomials.hpp>
#include <powerideal/subgraphs.hpp>

namespace powerideal
{

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;

    bool ok() const { return status != CheckStatus::fail; }
};

namespace detail
{

inline CheckResult passed(std::string name, std::string detail = {})
{
    return {std::move(name), CheckStatus::pass, std::move(detail)};
}

inline CheckResult failed(std::string name, std::string detail)
{
    return {std::move(name), CheckStatus::fail, std::move(detail)};
}

inline CheckResult skipped(std::string name, std::string why)
{
    return {std::move(name), CheckStatus::skip, std::move(why)};
}

inline std::string vector_text(const ExponentVector &a)
{
    std::string out = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(a[i]);
    }
    return out + ")";
}

// Calls f on every vector with 0 <= a_i <= bound_i.
template <typename F>
void for_each_in_box(const std::vector<int> &bound, F &&f)
{
    ExponentVector a(bound.size(), 0);
    while (true) {
        f(a);
        std::size_t pos = 0;
        while (pos < a.size() && a[pos] == bound[pos]) {
            a[pos++] = 0;
        }
        if (pos == a.size()) {
            return;
        }
        ++a[pos];
    }
}

inline std::vector<int> singleton_bounds(const MonomialIdeal &ideal)
{
    std::vector<int> bound;
    for (Vertex i = 1; i <= ideal.n; ++i) {
        bound.push_back(ideal.generator(VertexSubset::of({i})).exponents[static_cast<std::size_t>(i - 1)]);
    }
    return bound;
}

} // namespace detail

inline bool is_complete_graph(const RootedMultigraph &g)
{
    if (!g.undirected()) {
        return false;
    }
    for (Vertex u = 0; u <= g.n(); ++u) {
        for (Vertex v = 0; v <= g.n(); ++v) {
            if (u != v && g.arcs(u, v) != 1) {
                return false;
            }
        }
    }
    return true;
}

inline bool is_connected(const RootedMultigraph &g)
{
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w = 0; w <= g.n(); ++w) {
            if (!seen[static_cast<std::size_t>(w)] && (g.arcs(v, w) > 0 || g.arcs(w, v) > 0)) {
                seen[static_cast<std::size_t>(w)] = true;
                stack.push_back(w);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// Random edge orders from a fixed seed.
inline std::vector<std::vector<std::size_t>> random_edge_orders(const RootedMultigraph &g, int count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<std::vector<std::size_t>> orders;
    for (int j = 0; j < count; ++j) {
        auto order = identity_edge_order(g);
        std::shuffle(order.begin(), order.end(), rng);
        orders.push_back(std::move(order));
    }
    return orders;
}

inline CheckResult check_generator_counts(const RootedMultigraph &g, int k)
{
    const std::string name = "generator-count";
    const auto expected = (std::size_t{1} << g.n()) - 1;
    const auto monomial = monomize(g, k);
    if (monomial.generators.size() != expected) {
        return detail::failed(name, "monomial ideal has " + std::to_string(monomial.generators.size()));
    }
    try {
        const auto power = build_power_ideal(g, k);
        if (power.generators.size() != expected) {
            return detail::failed(name, "power ideal has " + std::to_string(power.generators.size()));
        }
    } catch (const nonpositive_exponent &) {
        // The power ideal is undefined; the monomial count still stands.
    }
    return detail::passed(name, std::to_string(expected) + " generators");
}

// deg m_I = D_I + k.
inline CheckResult check_degree_match(const RootedMultigraph &g, int k)
{
    const std::string name = "monomial-degree";
    for (const auto &m : monomize(g, k).generators) {
        if (m.degree() != total_exit_degree(g, m.support) + k) {
            return detail::failed(name, "subset " + to_string(m.support));
        }
    }
    return detail::passed(name);
}

inline CheckResult check_monotone(const RootedMultigraph &g, int k)
{
    const std::string name = "monotone-family";
    if (const auto bad = check_monotone_family(monomize(g, k))) {
        return detail::failed(name, to_string(bad->smaller) + " in " + to_string(bad->larger) + " at x"
                                        + std::to_string(bad->variable));
    }
    return detail::passed(name);
}

// d_J(i) <= d_I(i) whenever i in I and I is contained in J.
inline CheckResult check_exit_degree_monotone(const RootedMultigraph &g)
{
    const std::string name = "exit-degree-monotone";
    std::string problem;
    for_each_nonempty_subset(g.n(), [&](VertexSubset small) {
        for_each_nonempty_subset(g.n(), [&](VertexSubset large) {
            if (!problem.empty() || !small.is_subset_of(large)) {
                return;
            }
            for (Vertex i : small.members()) {
                if (exit_degree(g, large, i) > exit_degree(g, small, i)) {
                    problem = to_string(small) + " in " + to_string(large);
                }
            }
        });
    });
    return problem.empty() ? detail::passed(name) : detail::failed(name, problem);
}

// Membership test and basis enumeration agree on a box one larger than the
// basis box, and the full and minimal generating sets cut out the same set.
inline CheckResult check_parking_equivalence(const RootedMultigraph &g, int k)
{
    const std::string name = "parking-equivalence";
    const auto ideal = monomize(g, k);
    const auto minimal = minimal_generators(ideal);
    std::vector<ExponentVector> basis;
    try {
        basis = standard_monomials(ideal);
    } catch (const infinite_quotient &e) {
        return detail::skipped(name, e.what());
    }
    const std::set<ExponentVector> members(basis.begin(), basis.end());
    auto bound = detail::singleton_bounds(ideal);
    std::string problem;
    detail::for_each_in_box(bound, [&](const ExponentVector &a) {
        if (!problem.empty()) {
            return;
        }
        const bool parking = is_g_parking(g, a, k);
        if (parking != members.contains(a)) {
            problem = "disagree at " + detail::vector_text(a);
        } else if (is_standard(ideal.generators, a) != is_standard(minimal, a)) {
            problem = "minimal generators disagree at " + detail::vector_text(a);
        }
    });
    return problem.empty() ? detail::passed(name, std::to_string(basis.size()) + " parking functions")
                           : detail::failed(name, problem);
}

inline CheckResult check_down_closure(const RootedMultigraph &g, int k)
{
    const std::string name = "down-closure";
    std::vector<ExponentVector> basis;
    try {
        basis = standard_monomials(monomize(g, k));
    } catch (const infinite_quotient &e) {
        return detail::skipped(name, e.what());
    }
    const std::set<ExponentVector> members(basis.begin(), basis.end());
    for (const auto &a : basis) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] > 0) {
                auto b = a;
                --b[i];
                if (!members.contains(b)) {
                    return detail::failed(name, detail::vector_text(b) + " below " + detail::vector_text(a));
                }
            }
        }
    }
    return detail::passed(name);
}

inline CheckResult check_minimal_idempotent(const RootedMultigraph &g, int k)
{
    const std::string name = "minimal-generators-idempotent";
    const auto once = minimal_generators(monomize(g, k));
    const auto twice = minimal_generators(once);
    return once == twice ? detail::passed(name, std::to_string(once.size()) + " minimal generators")
                         : detail::failed(name, "second reduction changed the set");
}

// Rank route against the monomial route, coefficientwise.
inline CheckResult check_hilbert_equality(const RootedMultigraph &g, int k, unsigned threads = 1)
{
    const std::string name = "hilbert-A-equals-B";
    PowerIdeal power;
    try {
        power = build_power_ideal(g, k);
    } catch (const nonpositive_exponent &e) {
        return detail::skipped(name, e.what());
    }
    HilbertSeries b;
    try {
        b = hilbert_series_B(monomize(g, k));
    } catch (const infinite_quotient &e) {
        return detail::skipped(name, e.what());
    }
    const auto a = hilbert_series_A(power, threads);
    if (!b.dominated_by(a)) {
        return detail::failed(name, "Hilb(B) = " + b.to_string() + " exceeds Hilb(A) = " + a.to_string());
    }
    if (a != b) {
        return detail::failed(name, "Hilb(A) = " + a.to_string() + ", Hilb(B) = " + b.to_string());
    }
    return detail::passed(name, a.to_string());
}

// The alternating sum over chains equals dim B for the monotone family.
inline CheckResult check_alternating_sum(const RootedMultigraph &g, int k)
{
    const std::string name = "alternating-sum";
    const auto ideal = monomize(g, k);
    std::size_t dim = 0;
    try {
        dim = standard_monomials(ideal).size();
    } catch (const infinite_quotient &e) {
        return detail::skipped(name, e.what());
    }
    const auto sum = alternating_sum(ideal);
    if (sum.value != static_cast<std::int64_t>(dim)) {
        return detail::failed(name, "sum " + std::to_string(sum.value) + " vs dim " + std::to_string(dim));
    }
    return detail::passed(name, std::to_string(sum.value));
}

// Each chain's product term equals its number of compatible subgraphs.
inline CheckResult check_chain_terms(const RootedMultigraph &g)
{
    const std::string name = "chain-term-counts";
    const auto family = monomize(g, 1);
    const auto subgraphs = enumerate_functional_subgraphs(g);
    std::int64_t signed_count = 0;
    for (const auto &chain : enumerate_chains(g.n())) {
        const auto term = chain_term(family, chain);
        const auto count = static_cast<std::int64_t>(count_compatible_pairs(subgraphs, chain));
        if (term != count) {
            std::string sets;
            for (auto s : chain.sets()) {
                sets += to_string(s);
            }
            return detail::failed(name, "chain " + sets + ": product " + std::to_string(term) + ", count "
                                            + std::to_string(count));
        }
        signed_count += chain.length() % 2 == 0 ? count : -count;
    }
    const auto sum = alternating_sum(family).value;
    if (signed_count != sum) {
        return detail::failed(name, "signed pair count " + std::to_string(signed_count));
    }
    return detail::passed(name);
}

inline CheckResult check_forest_count(const RootedMultigraph &g)
{
    const std::string name = "forest-count";
    if (!g.undirected()) {
        return detail::skipped(name, "directed graph");
    }
    const auto forests = static_cast<std::int64_t>(enumerate_forests(g).size());
    const auto dim = static_cast<std::int64_t>(standard_monomials(monomize(g, 1)).size());
    const auto sum = alternating_sum_dimension(g);
    if (forests != dim || forests != sum) {
        return detail::failed(name, "forests " + std::to_string(forests) + ", dim B " + std::to_string(dim)
                                        + ", alternating sum " + std::to_string(sum));
    }
    return detail::passed(name, std::to_string(forests));
}

// Forest activity generating function against Hilb(B) for k = 1, and its
// independence of the edge order.
inline CheckResult check_external_activity(const RootedMultigraph &g, int orders = 3, std::uint64_t seed = 20100218)
{
    const std::string name = "external-activity";
    if (!g.undirected()) {
        return detail::skipped(name, "directed graph");
    }
    const auto b = hilbert_series_B(monomize(g, 1));
    for (const auto &order : random_edge_orders(g, orders, seed)) {
        const auto series = activity_series(g, order);
        if (series != b) {
            return detail::failed(name, "activity series " + series.to_string() + " vs Hilb(B) " + b.to_string());
        }
    }
    return detail::passed(name, std::to_string(orders) + " orders");
}

inline CheckResult check_functional_count(const RootedMultigraph &g)
{
    const std::string name = "functional-subgraph-count";
    std::size_t expected = 1;
    for (Vertex v = 1; v <= g.n(); ++v) {
        expected *= static_cast<std::size_t>(g.out_degree(v) + 1);
    }
    const auto actual = enumerate_functional_subgraphs(g).size();
    return actual == expected ? detail::passed(name, std::to_string(actual))
                              : detail::failed(name, std::to_string(actual) + " vs " + std::to_string(expected));
}

// Exhaustive check of kappa over all compatible pairs.
inline CheckResult check_involution(const RootedMultigraph &g)
{
    const std::string name = "involution";
    const auto subgraphs = enumerate_functional_subgraphs(g);
    const auto chains = enumerate_chains(g.n());
    std::set<FunctionalSubgraph> fixed;
    std::size_t pairs = 0;
    for (const auto &h : subgraphs) {
        const auto labels = label_special(h);
        for (const auto &chain : chains) {
            if (!is_compatible(h, chain)) {
                continue;
            }
            ++pairs;
            for (auto set : chain.sets()) {
                if (!set.is_subset_of(labels.special_set)) {
                    return detail::failed(name, "chain member " + to_string(set) + " has a non-special vertex");
                }
            }
            SubsetChain image;
            try {
                image = kappa(g, h, chain);
            } catch (const std::invalid_argument &e) {
                return detail::failed(name, std::string("kappa rejected a compatible pair: ") + e.what());
            }
            if (image == chain) {
                if (!chain.empty() || !labels.special_set.empty()) {
                    return detail::failed(name, "fixed point with a nonempty chain or special set");
                }
                fixed.insert(h);
                continue;
            }
            if (!is_compatible(h, image)) {
                return detail::failed(name, "image pair is not compatible");
            }
            const auto longer = std::max(image.length(), chain.length());
            if (longer - std::min(image.length(), chain.length()) != 1) {
                return detail::failed(name, "chain length did not change by one");
            }
            if (kappa(g, h, image) != chain) {
                return detail::failed(name, "kappa is not an involution");
            }
        }
    }
    if (g.undirected()) {
        std::set<FunctionalSubgraph> oriented;
        for (const auto &f : enumerate_forests(g)) {
            oriented.insert(canonical_orientation(g, f));
        }
        if (oriented != fixed) {
            return detail::failed(name, std::to_string(fixed.size()) + " fixed points vs "
                                            + std::to_string(oriented.size()) + " canonical forests");
        }
    }
    return detail::passed(name, std::to_string(pairs) + " pairs, " + std::to_string(fixed.size()) + " fixed");
}

// Canonically oriented forests label as entirely non-special, and in every
// functional subgraph each weak component is all special or all non-special,
// with non-special components being trees directed to their minimum.
inline CheckResult check_labeling(const RootedMultigraph &g)
{
    const std::string name = "special-labeling";
    if (g.undirected()) {
        for (const auto &f : enumerate_forests(g)) {
            if (!label_special(g, canonical_orientation(g, f)).special_set.empty()) {
                return detail::failed(name, "a canonically oriented forest has special vertices");
            }
        }
    }
    const auto count = static_cast<std::size_t>(g.vertex_count());
    for (const auto &h : enumerate_functional_subgraphs(g)) {
        const auto labels = label_special(h);
        detail::DisjointSets comps(g.vertex_count());
        for (Vertex v = 1; v <= g.n(); ++v) {
            if (const auto arc = h.out_edge(v)) {
                comps.unite(v, arc->target);
            }
        }
        std::vector<Vertex> smallest(count, g.vertex_count());
        std::vector<int> size(count, 0);
        std::vector<int> edges(count, 0);
        for (Vertex v = 0; v <= g.n(); ++v) {
            const auto c = static_cast<std::size_t>(comps.find(v));
            smallest[c] = std::min(smallest[c], v);
            ++size[c];
            edges[c] += h.has_out_edge(v) ? 1 : 0;
        }
        for (Vertex v = 0; v <= g.n(); ++v) {
            const auto c = static_cast<std::size_t>(comps.find(v));
            const auto mine = labels.label[static_cast<std::size_t>(v)];
            const auto at_min = labels.label[static_cast<std::size_t>(smallest[c])];
            if (mine != at_min) {
                return detail::failed(name, "component mixes special and non-special vertices");
            }
            if (mine == Label::nonspecial && (edges[c] != size[c] - 1 || h.terminal(v) != smallest[c])) {
                return detail::failed(name, "non-special component is not a tree directed to its minimum");
            }
        }
    }
    return detail::passed(name);
}

// Complete graphs at k = 0: G-parking is classical parking, (n+1)^(n-1) of
// them, and the orbit count is the Catalan number.
inline CheckResult check_classical_parking(const RootedMultigraph &g)
{
    const std::string name = "classical-parking";
    if (!is_complete_graph(g)) {
        return detail::skipped(name, "not a complete graph");
    }
    const int n = g.n();
    const auto basis = standard_monomials(monomize(g, 0));
    std::int64_t expected = 1;
    for (int j = 0; j < n - 1; ++j) {
        expected *= n + 1;
    }
    if (static_cast<std::int64_t>(basis.size()) != expected) {
        return detail::failed(name, std::to_string(basis.size()) + " parking functions");
    }
    std::vector<int> bound(static_cast<std::size_t>(n), n);
    std::string problem;
    detail::for_each_in_box(bound, [&](const ExponentVector &a) {
        if (problem.empty() && is_g_parking(g, a, 0) != is_classical_parking(a)) {
            problem = "disagree at " + detail::vector_text(a);
        }
    });
    if (!problem.empty()) {
        return detail::failed(name, problem);
    }
    // C_n = binom(2n, n) / (n + 1)
    const auto catalan = static_cast<std::size_t>(binomial(2 * n, n) / (n + 1));
    const auto orbits = orbit_count(basis);
    if (orbits != catalan) {
        return detail::failed(name, std::to_string(orbits) + " orbits vs Catalan " + std::to_string(catalan));
    }
    return detail::passed(name, std::to_string(basis.size()) + " parking functions, " + std::to_string(orbits)
                                    + " orbits");
}

struct VerifyOptions {
    int k = 1;
    bool include_rank = true;
    unsigned threads = 1;
};

// Every applicable cross-check for one graph and k.
inline std::vector<CheckResult> verify_graph(const RootedMultigraph &g, const VerifyOptions &options = {})
{
    const int k = options.k;
    std::vector<CheckResult> out;
    out.push_back(check_generator_counts(g, k));
    out.push_back(check_degree_match(g, k));
    out.push_back(check_monotone(g, k));
    out.push_back(check_exit_degree_monotone(g));
    out.push_back(check_minimal_idempotent(g, k));
    out.push_back(check_parking_equivalence(g, k));
    out.push_back(check_down_closure(g, k));
    out.push_back(check_alternating_sum(g, k));
    if (options.include_rank) {
        out.push_back(check_hilbert_equality(g, k, options.threads));
    } else {
        out.push_back(detail::skipped("hilbert-A-equals-B", "rank oracle disabled"));
    }
    out.push_back(check_functional_count(g));
    out.push_back(check_labeling(g));
    if (k == 1) {
        out.push_back(check_chain_terms(g));
        out.push_back(check_involution(g));
        out.push_back(check_forest_count(g));
        out.push_back(check_external_activity(g));
    }
    if (k == 0) {
        out.push_back(check_classical_parking(g));
    }
    return out;
}

} // namespace powerideal

#endif
