#include "vgb/polynomial.hpp"

#include <algorithm>

#include "vgb/errors.hpp"

namespace vgb {

namespace {

// Merges two descending term lists: a + factor * b.
std::vector<Term> merge(std::span<const Term> a, std::span<const Term> b, const Coefficient& factor,
                        const MultiIndex* shift, const TermOrder& order) {
    if (factor == 0) return {a.begin(), a.end()};
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    auto shifted = [&](std::size_t k) { return shift ? b[k].monomial + *shift : b[k].monomial; };
    MultiIndex bm;
    bool have_bm = false;
    while (i < a.size() || j < b.size()) {
        if (j < b.size() && !have_bm) {
            bm = shifted(j);
            have_bm = true;
        }
        if (j >= b.size()) {
            out.push_back(a[i++]);
            continue;
        }
        if (i >= a.size()) {
            Coefficient c = factor * b[j].coeff;
            out.push_back({std::move(bm), std::move(c)});
            have_bm = false;
            ++j;
            continue;
        }
        auto cmp = order.compare(a[i].monomial, bm);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            Coefficient c = factor * b[j].coeff;
            out.push_back({std::move(bm), std::move(c)});
            have_bm = false;
            ++j;
        } else {
            Coefficient c = a[i].coeff + factor * b[j].coeff;
            if (c != 0) out.push_back({std::move(bm), std::move(c)});
            have_bm = false;
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, TermOrder order) : ring_(std::move(ring)), order_(std::move(order)) {
    if (!ring_) throw DomainError("polynomial without a ring");
    if (order_.nvars() != ring_->nvars()) throw DimensionError("term order does not match the ring");
}

Polynomial::Polynomial(RingPtr ring, TermOrder order, std::vector<Term> terms)
    : Polynomial(std::move(ring), std::move(order)) {
    for (const auto& t : terms)
        if (t.monomial.size() != ring_->nvars())
            throw DimensionError("monomial of length " + std::to_string(t.monomial.size()) + " in a ring with " +
                                 std::to_string(ring_->nvars()) + " variables");
    std::sort(terms.begin(), terms.end(),
              [this](const Term& a, const Term& b) { return order_.compare(a.monomial, b.monomial) > 0; });
    for (auto& t : terms) {
        if (!terms_.empty() && terms_.back().monomial == t.monomial) {
            terms_.back().coeff += t.coeff;
        } else {
            if (!terms_.empty() && terms_.back().coeff == 0) terms_.pop_back();
            terms_.push_back(std::move(t));
        }
    }
    if (!terms_.empty() && terms_.back().coeff == 0) terms_.pop_back();
}

Polynomial Polynomial::constant(RingPtr ring, TermOrder order, Coefficient c) {
    std::size_t n = ring->nvars();
    std::vector<Term> t;
    t.push_back({MultiIndex(n), std::move(c)});
    return Polynomial(std::move(ring), std::move(order), std::move(t));
}

Polynomial Polynomial::variable(RingPtr ring, TermOrder order, std::size_t i) {
    std::size_t n = ring->nvars();
    if (i >= n) throw DimensionError("variable index out of range");
    return monomial(std::move(ring), std::move(order), MultiIndex::unit(n, i), 1);
}

Polynomial Polynomial::monomial(RingPtr ring, TermOrder order, MultiIndex m, Coefficient c) {
    std::vector<Term> t;
    t.push_back({std::move(m), std::move(c)});
    return Polynomial(std::move(ring), std::move(order), std::move(t));
}

Polynomial Polynomial::binomial(RingPtr ring, TermOrder order, MultiIndex m1, MultiIndex m2) {
    std::vector<Term> t;
    t.push_back({std::move(m1), 1});
    t.push_back({std::move(m2), -1});
    return Polynomial(std::move(ring), std::move(order), std::move(t));
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw UndefinedInput("the zero polynomial has no leading term");
    return terms_.front();
}

std::uint64_t Polynomial::total_degree() const noexcept {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
}

bool Polynomial::is_homogeneous() const noexcept {
    for (const auto& t : terms_)
        if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
    return true;
}

bool Polynomial::is_binomial() const noexcept {
    if (terms_.size() != 2) return false;
    const auto& a = terms_[0].coeff;
    const auto& b = terms_[1].coeff;
    return (a == 1 && b == -1) || (a == -1 && b == 1);
}

Polynomial Polynomial::with_order(const TermOrder& order) const {
    if (order == order_) return *this;
    return Polynomial(ring_, order, terms_);
}

void Polynomial::check_compatible(const Polynomial& other) const { require_same_ring(ring_, other.ring_); }

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::operator+(const Polynomial& other) const {
    check_compatible(other);
    const Polynomial& b = other.order_ == order_ ? other : other.with_order(order_);
    return Polynomial(ring_, order_, merge(terms_, b.terms_, 1, nullptr, order_), SortedTag{});
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    check_compatible(other);
    const Polynomial& b = other.order_ == order_ ? other : other.with_order(order_);
    return Polynomial(ring_, order_, merge(terms_, b.terms_, -1, nullptr, order_), SortedTag{});
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    check_compatible(other);
    std::vector<Term> out;
    out.reserve(terms_.size() * other.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : other.terms_) out.push_back({a.monomial + b.monomial, a.coeff * b.coeff});
    return Polynomial(ring_, order_, std::move(out));
}

Polynomial Polynomial::scaled(const Coefficient& c) const {
    if (c == 0) return Polynomial(ring_, order_);
    std::vector<Term> out = terms_;
    for (auto& t : out) t.coeff *= c;
    return Polynomial(ring_, order_, std::move(out), SortedTag{});
}

Polynomial Polynomial::mul_term(const MultiIndex& m, const Coefficient& c) const {
    if (c == 0) return Polynomial(ring_, order_);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.monomial + m, t.coeff * c});
    return Polynomial(ring_, order_, std::move(out), SortedTag{});
}

Polynomial Polynomial::sub_mul(const Coefficient& c, const MultiIndex& m, const Polynomial& g) const {
    check_compatible(g);
    const Polynomial& b = g.order_ == order_ ? g : g.with_order(order_);
    return Polynomial(ring_, order_, merge(terms_, b.terms_, -c, &m, order_), SortedTag{});
}

Polynomial Polynomial::monic() const {
    if (terms_.empty() || terms_.front().coeff == 1) return *this;
    Coefficient inv = 1 / terms_.front().coeff;
    return scaled(inv);
}

Polynomial Polynomial::tail() const {
    if (terms_.empty()) return *this;
    return Polynomial(ring_, order_, std::vector<Term>(terms_.begin() + 1, terms_.end()), SortedTag{});
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (!same_ring(ring_, other.ring_)) return false;
    if (order_ == other.order_) return terms_ == other.terms_;
    return terms_ == other.with_order(order_).terms_;
}

Term initial_term(const Polynomial& f, const TermOrder& order) {
    if (f.is_zero()) throw UndefinedInput("the zero polynomial has no initial term");
    if (order == f.order()) return f.leading_term();
    const Term* best = &f.terms().front();
    for (const auto& t : f.terms())
        if (order.compare(t.monomial, best->monomial) > 0) best = &t;
    return *best;
}

Polynomial initial_form(const Polynomial& f, std::span<const std::int64_t> weights) {
    if (weights.size() != f.ring()->nvars())
        throw DimensionError("weight vector of length " + std::to_string(weights.size()) + " for " +
                             std::to_string(f.ring()->nvars()) + " variables");
    if (f.is_zero()) return f;
    std::int64_t top = f.terms().front().monomial.dot(weights);
    for (const auto& t : f.terms()) top = std::max(top, t.monomial.dot(weights));
    std::vector<Term> kept;
    for (const auto& t : f.terms())
        if (t.monomial.dot(weights) == top) kept.push_back(t);
    return Polynomial(f.ring(), f.order(), std::move(kept));
}

std::uint64_t max_degree(std::span<const Polynomial> polys) noexcept {
    std::uint64_t d = 0;
    for (const auto& p : polys) d = std::max(d, p.total_degree());
    return d;
}

}  // namespace vgb
