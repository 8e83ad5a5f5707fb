#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace vgb {

using Exponent = std::uint32_t;

/// Exponent vector a in N^n. Doubles as the name of the variable x_a of
/// R^[d] when |a| = d. The total degree is cached.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t n) : entries_(n, 0) {}
    MultiIndex(std::initializer_list<Exponent> entries);
    explicit MultiIndex(std::vector<Exponent> entries);

    /// Unit vector e_i of length n.
    static MultiIndex unit(std::size_t n, std::size_t i);

    std::size_t size() const noexcept { return entries_.size(); }
    std::uint64_t degree() const noexcept { return degree_; }
    Exponent operator[](std::size_t i) const { return entries_[i]; }
    std::span<const Exponent> entries() const noexcept { return entries_; }
    bool is_zero() const noexcept { return degree_ == 0; }

    void set(std::size_t i, Exponent value);

    /// Number of nonzero entries.
    std::size_t support_size() const noexcept;
    Exponent max_entry() const noexcept;

    /// Bitmask with bit (i mod 64) set when entry i is nonzero; used to reject
    /// divisibility tests quickly.
    std::uint64_t support_mask() const noexcept { return mask_; }

    /// Throws ExponentOverflow if an entry leaves the 32-bit range.
    MultiIndex operator+(const MultiIndex& other) const;
    /// Requires other divides *this.
    MultiIndex operator-(const MultiIndex& other) const;

    bool divides(const MultiIndex& other) const;
    MultiIndex lcm(const MultiIndex& other) const;
    bool coprime(const MultiIndex& other) const;

    std::int64_t dot(std::span<const std::int64_t> weights) const;

    bool operator==(const MultiIndex& other) const noexcept { return entries_ == other.entries_; }
    /// Plain lexicographic comparison of the raw entries; for containers only.
    std::strong_ordering operator<=>(const MultiIndex& other) const noexcept {
        return entries_ <=> other.entries_;
    }

    std::string to_string() const;

private:
    void refresh();

    std::vector<Exponent> entries_;
    std::uint64_t degree_ = 0;
    std::uint64_t mask_ = 0;
};

void check_same_length(const MultiIndex& a, const MultiIndex& b);

/// Ascending sort of the entries of a.
MultiIndex gamma(const MultiIndex& a);

struct MultiIndexHash {
    std::size_t operator()(const MultiIndex& a) const noexcept;
};

}  // namespace vgb
