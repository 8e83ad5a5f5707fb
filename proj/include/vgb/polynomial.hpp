#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vgb/coefficient.hpp"
#include "vgb/multi_index.hpp"
#include "vgb/ring.hpp"
#include "vgb/term_order.hpp"

namespace vgb {

struct Term {
    MultiIndex monomial;
    Coefficient coeff;

    bool operator==(const Term& other) const { return monomial == other.monomial && coeff == other.coeff; }
};

/// Sparse polynomial over a ring. Terms are strictly descending under the
/// polynomial's order, with no duplicate monomials and no zero coefficients.
class Polynomial {
public:
    Polynomial(RingPtr ring, TermOrder order);
    /// Normalizes: sorts, merges duplicates, drops zeros.
    Polynomial(RingPtr ring, TermOrder order, std::vector<Term> terms);

    static Polynomial constant(RingPtr ring, TermOrder order, Coefficient c);
    static Polynomial variable(RingPtr ring, TermOrder order, std::size_t i);
    static Polynomial monomial(RingPtr ring, TermOrder order, MultiIndex m, Coefficient c = 1);
    /// m1 - m2 (zero when m1 == m2).
    static Polynomial binomial(RingPtr ring, TermOrder order, MultiIndex m1, MultiIndex m2);

    const RingPtr& ring() const noexcept { return ring_; }
    const TermOrder& order() const noexcept { return order_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Throw UndefinedInput on the zero polynomial.
    const Term& leading_term() const;
    const MultiIndex& leading_monomial() const { return leading_term().monomial; }
    const Coefficient& leading_coefficient() const { return leading_term().coeff; }

    /// Largest total degree of a term (0 for the zero polynomial).
    std::uint64_t total_degree() const noexcept;
    /// Homogeneous w.r.t. the standard grading (every variable degree 1).
    bool is_homogeneous() const noexcept;
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    /// Two terms with coefficients +1 and -1.
    bool is_binomial() const noexcept;

    Polynomial with_order(const TermOrder& order) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial scaled(const Coefficient& c) const;
    Polynomial mul_term(const MultiIndex& m, const Coefficient& c) const;
    /// *this - c * m * g, merged in one pass.
    Polynomial sub_mul(const Coefficient& c, const MultiIndex& m, const Polynomial& g) const;
    Polynomial monic() const;
    Polynomial tail() const;

    bool operator==(const Polynomial& other) const;

private:
    friend class PolynomialBuilder;
    struct SortedTag {};
    Polynomial(RingPtr ring, TermOrder order, std::vector<Term> terms, SortedTag)
        : ring_(std::move(ring)), order_(std::move(order)), terms_(std::move(terms)) {}

    void check_compatible(const Polynomial& other) const;

    RingPtr ring_;
    TermOrder order_;
    std::vector<Term> terms_;
};

/// The order-greatest term of f under `order`. Throws UndefinedInput on zero.
Term initial_term(const Polynomial& f, const TermOrder& order);

/// Sum of the terms of maximal weight. Throws DimensionError on length mismatch.
Polynomial initial_form(const Polynomial& f, std::span<const std::int64_t> weights);

/// Largest total degree over a list (0 for an empty list).
std::uint64_t max_degree(std::span<const Polynomial> polys) noexcept;

}  // namespace vgb
