#ifndef POWERIDEAL_CAS_EXPORT_HPP
#define POWERIDEAL_CAS_EXPORT_HPP

#include <string>
#include <vector>

#include <powerideal/ideal.hpp>

namespace powerideal
{

enum class CasDialect { macaulay2, singular };

namespace detail
{

inline std::string ring_line(int n, CasDialect dialect)
{
    std::string vars;
    for (int i = 1; i <= n; ++i) {
        vars += (i == 1 ? "x" : ",x") + std::to_string(i);
    }
    if (dialect == CasDialect::macaulay2) {
        return "R = QQ[" + vars + "];\n";
    }
    return "ring R = 0,(" + vars + "),dp;\n";
}

inline std::string power_text(const PowerGenerator &gen)
{
    const auto members = gen.support.members();
    std::string base;
    for (std::size_t j = 0; j < members.size(); ++j) {
        base += (j == 0 ? "x" : "+x") + std::to_string(members[j]);
    }
    if (members.size() > 1) {
        base = "(" + base + ")";
    }
    return gen.exponent == 1 ? base : base + "^" + std::to_string(gen.exponent);
}

inline std::string monomial_text(const ExponentVector &a)
{
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += "x" + std::to_string(i + 1);
        if (a[i] > 1) {
            out += "^" + std::to_string(a[i]);
        }
    }
    return out.empty() ? "1" : out;
}

inline std::string ideal_text(int n, const std::vector<std::string> &generators, CasDialect dialect)
{
    std::string out = ring_line(n, dialect);
    out += dialect == CasDialect::macaulay2 ? "I = ideal(\n" : "ideal I =\n";
    for (std::size_t j = 0; j < generators.size(); ++j) {
        out += "  " + generators[j] + (j + 1 < generators.size() ? ",\n" : "\n");
    }
    out += dialect == CasDialect::macaulay2 ? ");\n" : ";\n";
    return out;
}

} // namespace detail

// Ring declaration over QQ in x1..xn, then one generator per line in the
// order they are stored.
inline std::string export_power_ideal(const PowerIdeal &ideal, CasDialect dialect)
{
    std::vector<std::string> gens;
    for (const auto &g : ideal.generators) {
        gens.push_back(detail::power_text(g));
    }
    return detail::ideal_text(ideal.n, gens, dialect);
}

inline std::string export_monomial_ideal(int n, const std::vector<MonomialGenerator> &generators, CasDialect dialect)
{
    std::vector<std::string> gens;
    for (const auto &g : generators) {
        gens.push_back(detail::monomial_text(g.exponents));
    }
    return detail::ideal_text(n, gens, dialect);
}

inline std::string export_monomial_ideal(const MonomialIdeal &ideal, CasDialect dialect)
{
    return export_monomial_ideal(ideal.n, ideal.generators, dialect);
}

inline std::string monomial_to_string(const ExponentVector &a)
{
    return detail::monomial_text(a);
}

inline std::string power_to_string(const PowerGenerator &gen)
{
    return detail::power_text(gen);
}

} // namespace powerideal

#endif
