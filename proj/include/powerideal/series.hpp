#ifndef POWERIDEAL_SERIES_HPP
#define POWERIDEAL_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace powerideal
{

// Graded dimension count c_0 + c_1 t + ... with trailing zeros trimmed.
class HilbertSeries
{
public:
    HilbertSeries() = default;

    explicit HilbertSeries(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    const std::vector<std::int64_t> &coeffs() const { return coeffs_; }

    std::int64_t coefficient(std::size_t degree) const
    {
        return degree < coeffs_.size() ? coeffs_[degree] : 0;
    }

    // -1 for the zero series.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    // Value at t = 1.
    std::int64_t total() const
    {
        std::int64_t sum = 0;
        for (auto c : coeffs_) {
            sum += c;
        }
        return sum;
    }

    void add_to(std::size_t degree, std::int64_t amount = 1)
    {
        if (degree >= coeffs_.size()) {
            coeffs_.resize(degree + 1, 0);
        }
        coeffs_[degree] += amount;
        trim();
    }

    // Coefficientwise <=.
    bool dominated_by(const HilbertSeries &other) const
    {
        for (std::size_t d = 0; d < coeffs_.size(); ++d) {
            if (coeffs_[d] > other.coefficient(d)) {
                return false;
            }
        }
        return true;
    }

    // "1 + 2t + 3t^2 + t^3"; "0" for the zero series.
    std::string to_string() const
    {
        std::string out;
        for (std::size_t d = 0; d < coeffs_.size(); ++d) {
            const auto c = coeffs_[d];
            if (c == 0) {
                continue;
            }
            if (!out.empty()) {
                out += c < 0 ? " - " : " + ";
            } else if (c < 0) {
                out += "-";
            }
            const auto mag = c < 0 ? -c : c;
            if (d == 0 || mag != 1) {
                out += std::to_string(mag);
            }
            if (d >= 1) {
                out += 't';
            }
            if (d >= 2) {
                out += '^' + std::to_string(d);
            }
        }
        return out.empty() ? "0" : out;
    }

    friend bool operator==(const HilbertSeries &, const HilbertSeries &) = default;

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<std::int64_t> coeffs_;
};

} // namespace powerideal

#endif
