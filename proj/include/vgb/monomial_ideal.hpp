#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vgb/polynomial.hpp"

namespace vgb {

/// Monomial ideal stored by its minimal generators, an antichain under
/// divisibility kept sorted by (degree, entries) so equal ideals compare equal.
class MonomialIdeal {
public:
    explicit MonomialIdeal(RingPtr ring, std::vector<MultiIndex> generators = {});

    const RingPtr& ring() const noexcept { return ring_; }
    std::span<const MultiIndex> generators() const noexcept { return generators_; }
    bool is_zero() const noexcept { return generators_.empty(); }

    bool contains(const MultiIndex& m) const;
    /// Every generator of `other` lies in *this.
    bool contains(const MonomialIdeal& other) const;

    /// Largest total degree of a minimal generator (delta). Throws
    /// UndefinedInput for the zero ideal.
    std::uint64_t delta() const;
    /// Largest single exponent over all minimal generators (a).
    Exponent max_exponent() const;
    /// Largest generator degree; 0 for the zero ideal.
    std::uint64_t max_generator_degree() const noexcept;
    bool is_squarefree() const noexcept;

    std::vector<Polynomial> as_polynomials(const TermOrder& order) const;

    bool operator==(const MonomialIdeal& other) const;

private:
    RingPtr ring_;
    std::vector<MultiIndex> generators_;
};

/// Minimal generators of the monomial ideal generated by `monomials`.
std::vector<MultiIndex> minimalize(std::vector<MultiIndex> monomials);

}  // namespace vgb
