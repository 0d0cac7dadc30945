#ifndef POWERIDEAL_SUBSET_HPP
#define POWERIDEAL_SUBSET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace powerideal
{

using Vertex = int;

// Largest supported number of non-root vertices. Everything that enumerates
// subsets is exponential in n long before this limit matters.
inline constexpr int max_vertices = 30;

// A subset of the non-root vertices {1,...,n}. Vertex i is stored in bit i-1,
// so the root can never be a member.
class VertexSubset
{
public:
    using mask_type = std::uint32_t;

    constexpr VertexSubset() = default;

    static constexpr VertexSubset from_mask(mask_type mask)
    {
        VertexSubset s;
        s.bits_ = mask;
        return s;
    }

    static VertexSubset of(std::initializer_list<Vertex> vertices)
    {
        VertexSubset s;
        for (Vertex v : vertices) {
            s.insert(v);
        }
        return s;
    }

    // All of {1,...,n}.
    static constexpr VertexSubset full(int n)
    {
        return from_mask(n >= 32 ? ~mask_type{0} : (mask_type{1} << n) - 1);
    }

    constexpr mask_type mask() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    constexpr bool contains(Vertex v) const
    {
        return v >= 1 && v <= 32 && ((bits_ >> (v - 1)) & 1u) != 0;
    }

    void insert(Vertex v)
    {
        if (v < 1 || v > max_vertices) {
            throw std::out_of_range("vertex " + std::to_string(v) + " cannot be a subset member");
        }
        bits_ |= mask_type{1} << (v - 1);
    }

    void erase(Vertex v)
    {
        if (v >= 1 && v <= max_vertices) {
            bits_ &= ~(mask_type{1} << (v - 1));
        }
    }

    // Smallest member; undefined on the empty set.
    constexpr Vertex min() const { return std::countr_zero(bits_) + 1; }

    constexpr bool is_subset_of(VertexSubset other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool is_proper_subset_of(VertexSubset other) const
    {
        return is_subset_of(other) && bits_ != other.bits_;
    }

    constexpr VertexSubset operator|(VertexSubset o) const { return from_mask(bits_ | o.bits_); }
    constexpr VertexSubset operator&(VertexSubset o) const { return from_mask(bits_ & o.bits_); }
    constexpr VertexSubset minus(VertexSubset o) const { return from_mask(bits_ & ~o.bits_); }

    std::vector<Vertex> members() const
    {
        std::vector<Vertex> out;
        for (mask_type m = bits_; m != 0; m &= m - 1) {
            out.push_back(std::countr_zero(m) + 1);
        }
        return out;
    }

    friend constexpr bool operator==(VertexSubset, VertexSubset) = default;
    friend constexpr auto operator<=>(VertexSubset, VertexSubset) = default;

private:
    mask_type bits_ = 0;
};

// Canonical subset order: increasing mask value.
template <typename F>
void for_each_nonempty_subset(int n, F &&f)
{
    const auto last = VertexSubset::full(n).mask();
    for (VertexSubset::mask_type m = 1; m != 0 && m <= last; ++m) {
        f(VertexSubset::from_mask(m));
    }
}

inline std::string to_string(VertexSubset s)
{
    std::string out = "{";
    bool first = true;
    for (Vertex v : s.members()) {
        if (!first) {
            out += ',';
        }
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

} // namespace powerideal

#endif
