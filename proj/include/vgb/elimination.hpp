#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vgb/ideal.hpp"

namespace vgb {

/// Elimination ideal I ∩ K[back variables]. `order` must eliminate `front`
/// (ConfigurationError otherwise). The back variables, in increasing
/// position, become variables 0.. of `back_ring`; the result carries a
/// cached reduced basis under `back_order`.
Ideal eliminate(const Ideal& I, const TermOrder& order, std::span<const std::size_t> front, const RingPtr& back_ring,
                const TermOrder& back_order, const GroebnerOptions& options = {},
                std::span<const Polynomial> seed_basis = {});

/// Monomial ideal generated by the leading monomials of the reduced basis.
MonomialIdeal initial_ideal(const Ideal& I, const TermOrder& order);

struct WeightInitialIdeal {
    /// Ideal generated by the initial forms of the basis under the weighted order.
    Ideal ideal;
    std::vector<Polynomial> forms;
    bool is_monomial = false;
    std::optional<MonomialIdeal> monomial;
};

/// in_w(I), computed from a Groebner basis under (w, tie).
WeightInitialIdeal initial_ideal(const Ideal& I, std::span<const std::int64_t> weights, const TermOrder& tie);

/// A positive integer weight vector w with in_w(g) = in_<(g) for every
/// element g of the reduced basis under `order`, from the system
/// w . (lm(g) - m) >= 1, w_i >= 1, solved by Fourier-Motzkin. Verified by
/// recomputing in_w(I) before returning (TheoremViolation otherwise).
std::vector<std::int64_t> find_weight_vector(const Ideal& I, const TermOrder& order);

/// Leading monomials of `basis` under its order, minimalized.
MonomialIdeal lead_ideal(const RingPtr& ring, std::span<const Polynomial> basis);

}  // namespace vgb
