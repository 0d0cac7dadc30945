#ifndef POWERIDEAL_GRADED_RANK_HPP
#define POWERIDEAL_GRADED_RANK_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <utility>
#include <vector>

#include <powerideal/exact_rank.hpp>
#include <powerideal/graph.hpp>
#include <powerideal/ideal.hpp>
#include <powerideal/series.hpp>

namespace powerideal
{

// All exponent vectors of length n and total degree d, in lex order.
inline std::vector<ExponentVector> monomials_of_degree(int n, int d)
{
    std::vector<ExponentVector> out;
    ExponentVector a(static_cast<std::size_t>(n), 0);
    std::function<void(std::size_t, int)> fill = [&](std::size_t pos, int left) {
        if (pos + 1 == a.size()) {
            a[pos] = left;
            out.push_back(a);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            a[pos] = e;
            fill(pos + 1, left - e);
        }
    };
    if (n > 0 && d >= 0) {
        fill(0, d);
    }
    return out;
}

inline Integer binomial(std::int64_t n, std::int64_t r)
{
    if (r < 0 || r > n) {
        return 0;
    }
    Integer out = 1;
    for (std::int64_t i = 1; i <= r; ++i) {
        out = out * (n - r + i) / i;
    }
    return out;
}

// |w|! / prod w_i!
inline Integer multinomial(const ExponentVector &w)
{
    Integer out = 1;
    std::int64_t running = 0;
    for (int e : w) {
        running += e;
        out *= binomial(running, e);
    }
    return out;
}

// Rows span the degree-d piece of a power ideal: one row per generator p and
// multiplier u with deg u = d - deg p, holding the coefficients of u * p in
// the basis `columns`.
struct GradedPieceMatrix {
    int degree = 0;
    std::vector<ExponentVector> columns;
    std::vector<std::pair<VertexSubset, ExponentVector>> row_labels;
    IntegerMatrix matrix;
};

inline GradedPieceMatrix graded_piece_matrix(const PowerIdeal &ideal, int degree)
{
    GradedPieceMatrix piece;
    piece.degree = degree;
    piece.columns = monomials_of_degree(ideal.n, degree);
    std::map<ExponentVector, std::size_t> column_of;
    for (std::size_t c = 0; c < piece.columns.size(); ++c) {
        column_of.emplace(piece.columns[c], c);
    }
    piece.matrix = IntegerMatrix(0, piece.columns.size());

    for (const auto &gen : ideal.generators) {
        if (gen.exponent > degree) {
            continue;
        }
        // Terms of the expansion: exponent vectors w supported on the generator.
        std::vector<std::pair<ExponentVector, Integer>> terms;
        for (auto &w : monomials_of_degree(ideal.n, gen.exponent)) {
            bool inside = true;
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (w[i] != 0 && !gen.support.contains(static_cast<Vertex>(i + 1))) {
                    inside = false;
                    break;
                }
            }
            if (inside) {
                auto coeff = multinomial(w);
                terms.emplace_back(std::move(w), std::move(coeff));
            }
        }
        for (const auto &u : monomials_of_degree(ideal.n, degree - gen.exponent)) {
            std::vector<Integer> row(piece.columns.size());
            for (const auto &[w, coeff] : terms) {
                ExponentVector v = u;
                for (std::size_t i = 0; i < v.size(); ++i) {
                    v[i] += w[i];
                }
                row[column_of.at(v)] = coeff;
            }
            piece.matrix.append_row(row);
            piece.row_labels.emplace_back(gen.support, u);
        }
    }
    return piece;
}

// dim of the degree-d piece of the quotient: #monomials minus the rank.
inline std::int64_t quotient_dimension(const PowerIdeal &ideal, int degree)
{
    auto piece = graded_piece_matrix(ideal, degree);
    const auto columns = static_cast<std::int64_t>(piece.columns.size());
    return columns - static_cast<std::int64_t>(exact_rank(std::move(piece.matrix)));
}

// Degrees are computed upward until the first zero coefficient; a graded
// quotient of the polynomial ring that vanishes in one degree vanishes in all
// higher ones. With threads > 1, consecutive degrees are ranked concurrently.
inline HilbertSeries hilbert_series_A(const PowerIdeal &ideal, unsigned threads = 1)
{
    if (threads == 0) {
        threads = 1;
    }
    std::vector<std::int64_t> coeffs;
    for (int base = 0;; base += static_cast<int>(threads)) {
        std::vector<std::future<std::int64_t>> batch;
        for (unsigned t = 0; t < threads; ++t) {
            const int d = base + static_cast<int>(t);
            batch.push_back(std::async(threads == 1 ? std::launch::deferred : std::launch::async,
                                       [&ideal, d] { return quotient_dimension(ideal, d); }));
        }
        for (auto &f : batch) {
            const auto c = f.get();
            if (c == 0) {
                for (auto &rest : batch) {
                    if (rest.valid()) {
                        rest.wait();
                    }
                }
                return HilbertSeries(std::move(coeffs));
            }
            coeffs.push_back(c);
        }
    }
}

inline HilbertSeries hilbert_series_A(const RootedMultigraph &g, int k, unsigned threads = 1)
{
    return hilbert_series_A(build_power_ideal(g, k), threads);
}

} // namespace powerideal

#endif
