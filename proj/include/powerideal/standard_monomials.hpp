#ifndef POWERIDEAL_STANDARD_MONOMIALS_HPP
#define POWERIDEAL_STANDARD_MONOMIALS_HPP

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <powerideal/graph.hpp>
#include <powerideal/ideal.hpp>
#include <powerideal/series.hpp>

namespace powerideal
{

class infinite_quotient : public std::domain_error
{
public:
    explicit infinite_quotient(Vertex variable)
        : std::domain_error("infinite quotient: no pure power of x" + std::to_string(variable) + " in the ideal"),
          variable_(variable)
    {
    }

    Vertex variable() const { return variable_; }

private:
    Vertex variable_;
};

// #{j : a_j < i} >= i for i = 1..n, with 0-based values.
inline bool is_classical_parking(const ExponentVector &a)
{
    auto sorted = a;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] > static_cast<int>(i)) {
            return false;
        }
    }
    return true;
}

// Every nonempty I has some i in I with a_i below the degree of x_i in m_I.
inline bool is_g_parking(const RootedMultigraph &g, const ExponentVector &a, int k)
{
    if (a.size() != static_cast<std::size_t>(g.n())) {
        throw std::invalid_argument("exponent vector length does not match the graph");
    }
    bool parking = true;
    for_each_nonempty_subset(g.n(), [&](VertexSubset s) {
        if (!parking) {
            return;
        }
        bool escapes = false;
        for (Vertex i : s.members()) {
            if (a[static_cast<std::size_t>(i - 1)] < monomial_exponent(g, s, i, k)) {
                escapes = true;
                break;
            }
        }
        parking = escapes;
    });
    return parking;
}

// Degree first, then lexicographic.
inline bool degree_lex_less(const ExponentVector &a, const ExponentVector &b)
{
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) {
        return da < db;
    }
    return a < b;
}

inline bool is_standard(std::span<const MonomialGenerator> generators, const ExponentVector &a)
{
    return std::none_of(generators.begin(), generators.end(),
                        [&](const MonomialGenerator &m) { return divides(m.exponents, a); });
}

// Monomials outside the ideal, sorted degree-then-lex. The scan covers the
// box cut out by the pure powers x_i^b_i in the ideal and tests each point
// against the minimal generators.
inline std::vector<ExponentVector> standard_monomials(const MonomialIdeal &ideal)
{
    const auto n = static_cast<std::size_t>(ideal.n);
    const auto minimal = minimal_generators(ideal);
    for (const auto &m : minimal) {
        if (m.degree() == 0) {
            return {};
        }
    }

    std::vector<int> bound(n, -1);
    for (const auto &m : minimal) {
        const auto nonzero = std::count_if(m.exponents.begin(), m.exponents.end(), [](int e) { return e > 0; });
        if (nonzero != 1) {
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (m.exponents[i] > 0 && (bound[i] < 0 || m.exponents[i] < bound[i])) {
                bound[i] = m.exponents[i];
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (bound[i] < 0) {
            throw infinite_quotient(static_cast<Vertex>(i + 1));
        }
    }

    std::vector<ExponentVector> out;
    ExponentVector a(n, 0);
    while (true) {
        if (is_standard(minimal, a)) {
            out.push_back(a);
        }
        std::size_t pos = 0;
        while (pos < n && ++a[pos] == bound[pos]) {
            a[pos++] = 0;
        }
        if (pos == n) {
            break;
        }
    }
    std::sort(out.begin(), out.end(), degree_lex_less);
    return out;
}

inline HilbertSeries hilbert_series_of(std::span<const ExponentVector> monomials)
{
    HilbertSeries series;
    for (const auto &a : monomials) {
        series.add_to(static_cast<std::size_t>(total_degree(a)));
    }
    return series;
}

// Hilbert series of the quotient by a monomial ideal.
inline HilbertSeries hilbert_series_B(const MonomialIdeal &ideal)
{
    const auto basis = standard_monomials(ideal);
    return hilbert_series_of(basis);
}

// Number of distinct multisets among the vectors.
inline std::size_t orbit_count(std::span<const ExponentVector> vectors)
{
    std::set<ExponentVector> classes;
    for (auto a : vectors) {
        std::sort(a.begin(), a.end());
        classes.insert(std::move(a));
    }
    return classes.size();
}

// "# n=<n> k=<k> dim=<total>" then one space-separated vector per line.
inline void write_standard_monomials(std::ostream &out, int n, int k, std::span<const ExponentVector> monomials)
{
    out << "# n=" << n << " k=" << k << " dim=" << monomials.size() << '\n';
    for (const auto &a : monomials) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            out << (i == 0 ? "" : " ") << a[i];
        }
        out << '\n';
    }
}

} // namespace powerideal

#endif
