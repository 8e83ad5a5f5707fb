#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "vgb/groebner.hpp"
#include "vgb/monomial_ideal.hpp"

namespace vgb {

/// Generators plus a cache of reduced Groebner bases keyed by order
/// fingerprint. The cache is filled lazily and is safe to read concurrently.
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Polynomial> generators = {});
    Ideal(const Ideal& other);
    Ideal& operator=(const Ideal& other);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Polynomial>& generators() const noexcept { return generators_; }
    bool is_zero() const noexcept { return generators_.empty(); }
    /// Standard grading.
    bool is_homogeneous() const noexcept;

    const GroebnerResult& groebner(const TermOrder& order, const GroebnerOptions& options = {}) const;
    const std::vector<Polynomial>& groebner_basis(const TermOrder& order, const GroebnerOptions& options = {}) const {
        return groebner(order, options).basis;
    }
    /// Records a basis computed elsewhere; it is re-reduced before caching.
    void remember_basis(const TermOrder& order, std::vector<Polynomial> basis, GroebnerStats stats = {}) const;

    bool contains(const Polynomial& f, const TermOrder& order) const;
    bool contains(const Polynomial& f) const { return contains(f, ring_->default_order()); }
    /// Equality of ideals via reduced bases under `order`.
    bool same_ideal(const Ideal& other, const TermOrder& order) const;

private:
    RingPtr ring_;
    std::vector<Polynomial> generators_;
    mutable std::mutex mutex_;
    mutable std::map<std::string, std::shared_ptr<const GroebnerResult>> cache_;
};

}  // namespace vgb
