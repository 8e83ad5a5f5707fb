#include "vgb/ideal.hpp"

#include <algorithm>

#include "vgb/errors.hpp"

namespace vgb {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
    for (auto& g : generators) {
        require_same_ring(ring_, g.ring());
        if (!g.is_zero()) generators_.push_back(std::move(g));
    }
}

Ideal::Ideal(const Ideal& other) : ring_(other.ring_), generators_(other.generators_) {
    std::lock_guard lock(other.mutex_);
    cache_ = other.cache_;
}

Ideal& Ideal::operator=(const Ideal& other) {
    if (this == &other) return *this;
    std::scoped_lock lock(mutex_, other.mutex_);
    ring_ = other.ring_;
    generators_ = other.generators_;
    cache_ = other.cache_;
    return *this;
}

bool Ideal::is_homogeneous() const noexcept {
    return std::all_of(generators_.begin(), generators_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

const GroebnerResult& Ideal::groebner(const TermOrder& order, const GroebnerOptions& options) const {
    if (order.nvars() != ring_->nvars()) throw DimensionError("term order does not match the ideal's ring");
    {
        std::lock_guard lock(mutex_);
        auto it = cache_.find(order.fingerprint());
        if (it != cache_.end()) return *it->second;
    }
    auto result = std::make_shared<const GroebnerResult>(buchberger(generators_, order, options));
    std::lock_guard lock(mutex_);
    // Reduced bases are unique, so a concurrent insert holds the same value.
    auto [it, inserted] = cache_.emplace(order.fingerprint(), std::move(result));
    return *it->second;
}

void Ideal::remember_basis(const TermOrder& order, std::vector<Polynomial> basis, GroebnerStats stats) const {
    auto result = std::make_shared<const GroebnerResult>(GroebnerResult{reduce_basis(basis, order), stats});
    std::lock_guard lock(mutex_);
    cache_[order.fingerprint()] = std::move(result);
}

bool Ideal::contains(const Polynomial& f, const TermOrder& order) const {
    require_same_ring(ring_, f.ring());
    return normal_form(f, groebner_basis(order), order).is_zero();
}

bool Ideal::same_ideal(const Ideal& other, const TermOrder& order) const {
    if (!same_ring(ring_, other.ring_)) return false;
    return groebner_basis(order) == other.groebner_basis(order);
}

}  // namespace vgb
