#ifndef POWERIDEAL_EXACT_RANK_HPP
#define POWERIDEAL_EXACT_RANK_HPP

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace powerideal
{

using Integer = boost::multiprecision::cpp_int;

// Dense row-major integer matrix.
class IntegerMatrix
{
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) {
            return;
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            std::swap((*this)(a, c), (*this)(b, c));
        }
    }

    void append_row(const std::vector<Integer> &row)
    {
        if (rows_ == 0 && cols_ == 0) {
            cols_ = row.size();
        }
        if (row.size() != cols_) {
            throw std::invalid_argument("row length does not match the matrix");
        }
        data_.insert(data_.end(), row.begin(), row.end());
        ++rows_;
    }

    static IntegerMatrix from_rows(const std::vector<std::vector<long long>> &rows)
    {
        IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != m.cols()) {
                throw std::invalid_argument("ragged matrix");
            }
            for (std::size_t c = 0; c < m.cols(); ++c) {
                m(r, c) = rows[r][c];
            }
        }
        return m;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

// Rank over Q by Bareiss fraction-free elimination. After each pivot step
// every live entry is a minor of the input, so every division is exact and
// entry size is bounded by Hadamard's inequality rather than by the word size.
inline std::size_t exact_rank(IntegerMatrix m)
{
    std::size_t rank = 0;
    Integer previous = 1;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m(pivot, col) == 0) {
            ++pivot;
        }
        if (pivot == m.rows()) {
            continue;
        }
        m.swap_rows(pivot, rank);
        const Integer p = m(rank, col);
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            const Integer factor = m(r, col);
            if (factor == 0) {
                // Still has to be scaled so that every row carries the same
                // implicit denominator.
                for (std::size_t c = col + 1; c < m.cols(); ++c) {
                    if (m(r, c) != 0) {
                        m(r, c) = (p * m(r, c)) / previous;
                    }
                }
                continue;
            }
            for (std::size_t c = col + 1; c < m.cols(); ++c) {
                m(r, c) = (p * m(r, c) - factor * m(rank, c)) / previous;
            }
            m(r, col) = 0;
        }
        previous = p;
        ++rank;
    }
    return rank;
}

// Debug dump: "rows cols" then the integer grid.
inline void write_matrix(std::ostream &out, const IntegerMatrix &m)
{
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out << (c == 0 ? "" : " ") << m(r, c);
        }
        out << '\n';
    }
}

} // namespace powerideal

#endif
