#ifndef POWERIDEAL_IDEAL_HPP
#define POWERIDEAL_IDEAL_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <powerideal/graph.hpp>
#include <powerideal/subset.hpp>

namespace powerideal
{

// Exponents (a_1,...,a_n) of the monomial x_1^a_1 ... x_n^a_n. Also read as a
// function [n] -> N when testing parking conditions.
using ExponentVector = std::vector<int>;

inline int total_degree(const ExponentVector &a)
{
    return std::accumulate(a.begin(), a.end(), 0);
}

// x^a divides x^b.
inline bool divides(const ExponentVector &a, const ExponentVector &b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
    }
    return true;
}

// (sum_{i in support} x_i)^exponent
struct PowerGenerator {
    VertexSubset support;
    int exponent = 0;

    friend bool operator==(const PowerGenerator &, const PowerGenerator &) = default;
};

struct MonomialGenerator {
    VertexSubset support;
    ExponentVector exponents;

    int degree() const { return total_degree(exponents); }
    friend bool operator==(const MonomialGenerator &, const MonomialGenerator &) = default;
};

// Generators are listed one per nonempty subset, in increasing mask order, so
// generators[mask - 1] belongs to the subset with that mask.
struct PowerIdeal {
    int n = 0;
    int k = 0;
    std::vector<PowerGenerator> generators;
};

struct MonomialIdeal {
    int n = 0;
    int k = 0;
    std::vector<MonomialGenerator> generators;

    const MonomialGenerator &generator(VertexSubset s) const { return generators.at(s.mask() - 1); }
};

class nonpositive_exponent : public std::domain_error
{
public:
    explicit nonpositive_exponent(VertexSubset subset, int exponent)
        : std::domain_error("exponent " + std::to_string(exponent) + " for subset " + to_string(subset)
                            + " is not positive"),
          subset_(subset)
    {
    }

    VertexSubset subset() const { return subset_; }

private:
    VertexSubset subset_;
};

// One generator (sum x_i)^(D_I + k) per nonempty subset I. Any k is accepted as
// long as every exponent stays positive.
inline PowerIdeal build_power_ideal(const RootedMultigraph &g, int k)
{
    PowerIdeal ideal{g.n(), k, {}};
    ideal.generators.reserve((std::size_t{1} << g.n()) - 1);
    for_each_nonempty_subset(g.n(), [&](VertexSubset s) {
        const int exponent = total_exit_degree(g, s) + k;
        if (exponent <= 0) {
            throw nonpositive_exponent(s, exponent);
        }
        ideal.generators.push_back({s, exponent});
    });
    return ideal;
}

// Degree of x_i in m_I: the exit degree, plus one at the smallest member of I
// when k = 1.
inline int monomial_exponent(const RootedMultigraph &g, VertexSubset subset, Vertex i, int k)
{
    if (k != 0 && k != 1) {
        throw std::invalid_argument("monomization is defined for k = 0 and k = 1 only");
    }
    if (!subset.contains(i)) {
        return 0;
    }
    return exit_degree(g, subset, i) + (k == 1 && i == subset.min() ? 1 : 0);
}

inline MonomialIdeal monomize(const RootedMultigraph &g, int k)
{
    if (k != 0 && k != 1) {
        throw std::invalid_argument("monomization is defined for k = 0 and k = 1 only");
    }
    MonomialIdeal ideal{g.n(), k, {}};
    ideal.generators.reserve((std::size_t{1} << g.n()) - 1);
    for_each_nonempty_subset(g.n(), [&](VertexSubset s) {
        ExponentVector a(static_cast<std::size_t>(g.n()), 0);
        for (Vertex i : s.members()) {
            a[static_cast<std::size_t>(i - 1)] = monomial_exponent(g, s, i, k);
        }
        ideal.generators.push_back({s, std::move(a)});
    });
    return ideal;
}

// Generators not divisible by a different generator; of several equal
// monomials only the first survives. Relative order is preserved.
inline std::vector<MonomialGenerator> minimal_generators(std::span<const MonomialGenerator> generators)
{
    std::vector<MonomialGenerator> out;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const auto &candidate = generators[i].exponents;
        bool redundant = false;
        for (std::size_t j = 0; j < generators.size() && !redundant; ++j) {
            if (i == j) {
                continue;
            }
            const auto &other = generators[j].exponents;
            if (other == candidate) {
                redundant = j < i;
            } else {
                redundant = divides(other, candidate);
            }
        }
        if (!redundant) {
            out.push_back(generators[i]);
        }
    }
    return out;
}

inline std::vector<MonomialGenerator> minimal_generators(const MonomialIdeal &ideal)
{
    return minimal_generators(std::span<const MonomialGenerator>(ideal.generators));
}

struct MonotoneViolation {
    enum class Kind { support, degree };

    Kind kind = Kind::degree;
    VertexSubset smaller;
    VertexSubset larger;
    Vertex variable = 0;

    friend bool operator==(const MonotoneViolation &, const MonotoneViolation &) = default;
};

// Checks that m_I only involves variables of I, and that for I strictly inside
// J no variable of I gains degree going from m_I to m_J. Returns the first
// violation in canonical order. A support violation reports I twice.
inline std::optional<MonotoneViolation> check_monotone_family(const MonomialIdeal &ideal)
{
    const auto expected = (std::size_t{1} << ideal.n) - 1;
    if (ideal.generators.size() != expected) {
        throw std::invalid_argument("a monomial family needs one generator per nonempty subset");
    }
    for (std::size_t idx = 0; idx < expected; ++idx) {
        if (ideal.generators[idx].support.mask() != idx + 1) {
            throw std::invalid_argument("generators are not in canonical subset order");
        }
    }
    for (const auto &gen : ideal.generators) {
        for (Vertex i = 1; i <= ideal.n; ++i) {
            if (!gen.support.contains(i) && gen.exponents[static_cast<std::size_t>(i - 1)] != 0) {
                return MonotoneViolation{MonotoneViolation::Kind::support, gen.support, gen.support, i};
            }
        }
    }
    for (const auto &small : ideal.generators) {
        for (const auto &large : ideal.generators) {
            if (!small.support.is_proper_subset_of(large.support)) {
                continue;
            }
            for (Vertex i : small.support.members()) {
                const auto at = static_cast<std::size_t>(i - 1);
                if (large.exponents[at] > small.exponents[at]) {
                    return MonotoneViolation{MonotoneViolation::Kind::degree, small.support, large.support, i};
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace powerideal

#endif
