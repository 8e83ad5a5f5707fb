#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "vgb/polynomial.hpp"

namespace vgb {

/// S-pair cap: VERONESE_GB_BUDGET if set, else 1'000'000.
std::uint64_t default_spair_cap();

struct GroebnerOptions {
    std::uint64_t spair_cap = default_spair_cap();
    /// Largest coefficient bit size allowed in a basis element.
    std::size_t coefficient_bit_cap = 1u << 16;
};

struct GroebnerStats {
    std::uint64_t spairs_reduced = 0;
    std::uint64_t zero_reductions = 0;
    std::uint64_t pairs_pruned = 0;
};

struct GroebnerResult {
    /// Reduced basis: monic, inter-reduced, ascending by leading monomial.
    std::vector<Polynomial> basis;
    GroebnerStats stats;
};

/// Remainder of f on division by G under `order`. Divisors are tried in
/// ascending order of their leading monomials; every term of the result is
/// irreducible. Throws RingMismatch on mixed rings.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G, const TermOrder& order);

/// lcm/lt(f) * f - lcm/lt(g) * g with both leading coefficients scaled to 1.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order);

/// Reduced Groebner basis of the ideal generated by `generators` plus
/// `seed_basis`. `seed_basis` must already be a Groebner basis under `order`;
/// pairs inside it are not formed. Throws BudgetExceeded past the caps.
GroebnerResult buchberger(std::span<const Polynomial> generators, const TermOrder& order,
                          const GroebnerOptions& options = {}, std::span<const Polynomial> seed_basis = {});

/// Turns a Groebner basis into the reduced one.
std::vector<Polynomial> reduce_basis(std::span<const Polynomial> G, const TermOrder& order);

struct GbCertificate {
    bool is_groebner = true;
    std::uint64_t pairs_checked = 0;
    std::uint64_t pairs_coprime = 0;
    /// Indices into the input list of the first pair with nonzero remainder.
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
    std::optional<Polynomial> remainder;
};

/// True iff every S-pair of G reduces to zero modulo G. Pairs with coprime
/// leading monomials are counted but skipped.
GbCertificate is_groebner_basis(std::span<const Polynomial> G, const TermOrder& order);

/// Leading monomials of a list of polynomials.
std::vector<MultiIndex> leading_monomials(std::span<const Polynomial> G);

}  // namespace vgb
