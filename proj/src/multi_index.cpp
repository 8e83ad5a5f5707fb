#include "vgb/multi_index.hpp"

#include <algorithm>
#include <limits>

#include "vgb/errors.hpp"

namespace vgb {

MultiIndex::MultiIndex(std::initializer_list<Exponent> entries) : entries_(entries) { refresh(); }

MultiIndex::MultiIndex(std::vector<Exponent> entries) : entries_(std::move(entries)) { refresh(); }

MultiIndex MultiIndex::unit(std::size_t n, std::size_t i) {
    MultiIndex e(n);
    e.set(i, 1);
    return e;
}

void MultiIndex::set(std::size_t i, Exponent value) {
    entries_.at(i) = value;
    refresh();
}

void MultiIndex::refresh() {
    degree_ = 0;
    mask_ = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        degree_ += entries_[i];
        if (entries_[i] != 0) mask_ |= std::uint64_t{1} << (i % 64);
    }
}

std::size_t MultiIndex::support_size() const noexcept {
    return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [](Exponent e) { return e != 0; }));
}

Exponent MultiIndex::max_entry() const noexcept {
    return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

void check_same_length(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size())
        throw DimensionError("exponent vectors of length " + std::to_string(a.size()) + " and " +
                             std::to_string(b.size()));
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
    check_same_length(*this, other);
    MultiIndex r;
    r.entries_.resize(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        std::uint64_t v = std::uint64_t{entries_[i]} + other.entries_[i];
        if (v > std::numeric_limits<Exponent>::max()) throw ExponentOverflow("exponent exceeds 32 bits");
        r.entries_[i] = static_cast<Exponent>(v);
    }
    r.degree_ = degree_ + other.degree_;
    r.mask_ = mask_ | other.mask_;
    return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
    check_same_length(*this, other);
    MultiIndex r;
    r.entries_.resize(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] < other.entries_[i]) throw DomainError("monomial quotient is not a monomial");
        r.entries_[i] = entries_[i] - other.entries_[i];
    }
    r.refresh();
    return r;
}

bool MultiIndex::divides(const MultiIndex& other) const {
    if ((mask_ & ~other.mask_) != 0 || degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] > other.entries_[i]) return false;
    return true;
}

MultiIndex MultiIndex::lcm(const MultiIndex& other) const {
    check_same_length(*this, other);
    MultiIndex r;
    r.entries_.resize(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = std::max(entries_[i], other.entries_[i]);
    r.refresh();
    return r;
}

bool MultiIndex::coprime(const MultiIndex& other) const {
    if (entries_.size() <= 64) return (mask_ & other.mask_) == 0;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != 0 && other.entries_[i] != 0) return false;
    return true;
}

std::int64_t MultiIndex::dot(std::span<const std::int64_t> weights) const {
    if (weights.size() != entries_.size())
        throw DimensionError("weight vector of length " + std::to_string(weights.size()) + " for " +
                             std::to_string(entries_.size()) + " variables");
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i) acc += weights[i] * static_cast<std::int64_t>(entries_[i]);
    return acc;
}

std::string MultiIndex::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(entries_[i]);
    }
    return out + ")";
}

MultiIndex gamma(const MultiIndex& a) {
    std::vector<Exponent> e(a.entries().begin(), a.entries().end());
    std::sort(e.begin(), e.end());
    return MultiIndex(std::move(e));
}

std::size_t MultiIndexHash::operator()(const MultiIndex& a) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Exponent e : a.entries()) {
        h ^= e;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

}  // namespace vgb
