#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "vgb/multi_index.hpp"

namespace vgb {

/// Lexicographic comparison; `significance` lists variable positions from
/// most to least significant (empty = identity). Throws DimensionError on
/// length mismatch.
std::strong_ordering cmp_lex(const MultiIndex& a, const MultiIndex& b,
                             std::span<const std::size_t> significance = {});

/// Graded reverse lexicographic comparison; `var_order` lists variable
/// positions from largest to smallest variable (empty = identity).
std::strong_ordering cmp_rlex(const MultiIndex& a, const MultiIndex& b,
                              std::span<const std::size_t> var_order = {});

/// Order on the variables of R^[d]: x_a < x_b iff gamma(b) <_lex gamma(a), or
/// gamma(a) == gamma(b) and b <_lex a. Throws DomainError when |a| != |b|.
std::strong_ordering cmp_gamma_vars(const MultiIndex& a, const MultiIndex& b);

/// Immutable term order on the monomials of a fixed number of variables.
/// Copies share the underlying description.
class TermOrder {
public:
    enum class Kind { Lex, GradedRevLex, GammaRevLex, Weighted, Block };

    /// Lex with variable 0 largest.
    static TermOrder lex(std::size_t nvars);
    static TermOrder lex(std::size_t nvars, std::vector<std::size_t> significance);
    /// Graded revlex with variable 0 largest.
    static TermOrder grevlex(std::size_t nvars);
    static TermOrder grevlex(std::size_t nvars, std::vector<std::size_t> largest_first);
    /// The Gamma revlex order on R^[d], whose variables are stored in
    /// ascending Gamma order (position 0 is the smallest variable).
    static TermOrder gamma(std::size_t s, std::size_t d);
    /// Weight first, `tie` second. Weights must be non-negative.
    static TermOrder weighted(std::vector<std::int64_t> weights, TermOrder tie);
    /// Compare the `front` block with `front_order`, ties by `back_order`.
    /// Both orders act on the full variable set but only look at their block.
    static TermOrder block(std::vector<std::size_t> front, TermOrder front_order,
                           TermOrder back_order);
    /// Block order: graded revlex on `front`, then `back_order` (lifted).
    static TermOrder elimination(std::size_t nvars, std::vector<std::size_t> front,
                                 TermOrder back_order);

    Kind kind() const noexcept;
    std::size_t nvars() const noexcept;

    std::strong_ordering compare(const MultiIndex& a, const MultiIndex& b) const;
    bool less(const MultiIndex& a, const MultiIndex& b) const { return compare(a, b) < 0; }

    /// Weight vector of a Weighted order (empty otherwise).
    std::span<const std::int64_t> weights() const noexcept;
    /// Tie-breaker of a Weighted order; throws DomainError otherwise.
    const TermOrder& tie() const;
    /// Variable positions of the front block of a Block order (sorted).
    std::span<const std::size_t> front_block() const noexcept;
    /// Orders of the two blocks; throw DomainError for non-Block orders.
    const TermOrder& front_order() const;
    const TermOrder& back_order() const;

    /// True when every monomial involving a variable of `front` is larger than
    /// every monomial free of them.
    bool eliminates(std::span<const std::size_t> front) const;

    /// Re-expresses the order on a ring with `new_nvars` variables, where old
    /// variable i sits at position `position_of[i]`. Variables not hit by the
    /// map are ignored by the returned order.
    TermOrder embed(std::span<const std::size_t> position_of, std::size_t new_nvars) const;

    /// Canonical text description; equal fingerprints mean equal orders.
    const std::string& fingerprint() const noexcept;

    bool operator==(const TermOrder& other) const noexcept {
        return fingerprint() == other.fingerprint();
    }

    struct Impl;

private:
    explicit TermOrder(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

}  // namespace vgb
