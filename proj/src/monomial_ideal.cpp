#include "vgb/monomial_ideal.hpp"

#include <algorithm>

#include "vgb/errors.hpp"

namespace vgb {

namespace {

bool degree_then_entries(const MultiIndex& a, const MultiIndex& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
}

}  // namespace

std::vector<MultiIndex> minimalize(std::vector<MultiIndex> monomials) {
    std::sort(monomials.begin(), monomials.end(), degree_then_entries);
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    std::vector<MultiIndex> kept;
    for (auto& m : monomials) {
        bool redundant = std::any_of(kept.begin(), kept.end(), [&](const MultiIndex& g) { return g.divides(m); });
        if (!redundant) kept.push_back(std::move(m));
    }
    return kept;
}

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<MultiIndex> generators) : ring_(std::move(ring)) {
    for (const auto& g : generators)
        if (g.size() != ring_->nvars()) throw DimensionError("monomial generator has the wrong length");
    generators_ = minimalize(std::move(generators));
}

bool MonomialIdeal::contains(const MultiIndex& m) const {
    return std::any_of(generators_.begin(), generators_.end(), [&](const MultiIndex& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    return std::all_of(other.generators_.begin(), other.generators_.end(),
                       [&](const MultiIndex& m) { return contains(m); });
}

std::uint64_t MonomialIdeal::delta() const {
    if (is_zero()) throw UndefinedInput("delta of the zero ideal");
    return max_generator_degree();
}

Exponent MonomialIdeal::max_exponent() const {
    if (is_zero()) throw UndefinedInput("max exponent of the zero ideal");
    Exponent a = 0;
    for (const auto& g : generators_) a = std::max(a, g.max_entry());
    return a;
}

std::uint64_t MonomialIdeal::max_generator_degree() const noexcept {
    std::uint64_t d = 0;
    for (const auto& g : generators_) d = std::max(d, g.degree());
    return d;
}

bool MonomialIdeal::is_squarefree() const noexcept {
    return std::all_of(generators_.begin(), generators_.end(), [](const MultiIndex& g) { return g.max_entry() <= 1; });
}

std::vector<Polynomial> MonomialIdeal::as_polynomials(const TermOrder& order) const {
    std::vector<Polynomial> out;
    for (const auto& g : generators_) out.push_back(Polynomial::monomial(ring_, order, g));
    return out;
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
    return same_ring(ring_, other.ring_) && generators_ == other.generators_;
}

}  // namespace vgb
