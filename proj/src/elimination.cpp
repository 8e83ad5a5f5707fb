#include "vgb/elimination.hpp"

#include <algorithm>

#include "vgb/errors.hpp"
#include "vgb/fourier_motzkin.hpp"

namespace vgb {

Ideal eliminate(const Ideal& I, const TermOrder& order, std::span<const std::size_t> front, const RingPtr& back_ring,
                const TermOrder& back_order, const GroebnerOptions& options, std::span<const Polynomial> seed_basis) {
    const std::size_t n = I.ring()->nvars();
    if (!order.eliminates(front)) throw ConfigurationError("order " + order.fingerprint() + " is not an elimination order for the requested variables");
    std::vector<char> is_front(n, 0);
    for (auto v : front) {
        if (v >= n) throw DimensionError("front variable out of range");
        is_front[v] = 1;
    }
    std::vector<std::size_t> back_vars;
    for (std::size_t v = 0; v < n; ++v)
        if (!is_front[v]) back_vars.push_back(v);
    if (back_ring->nvars() != back_vars.size())
        throw DimensionError("back ring has " + std::to_string(back_ring->nvars()) + " variables, expected " +
                             std::to_string(back_vars.size()));
    if (back_order.nvars() != back_vars.size()) throw DimensionError("back order does not match the back ring");

    std::vector<Polynomial> basis;
    GroebnerStats stats;
    if (seed_basis.empty()) {
        const auto& result = I.groebner(order, options);
        basis = result.basis;
        stats = result.stats;
    } else {
        auto result = buchberger(I.generators(), order, options, seed_basis);
        basis = std::move(result.basis);
        stats = result.stats;
    }

    std::vector<Polynomial> projected;
    for (const auto& g : basis) {
        bool free = std::all_of(g.terms().begin(), g.terms().end(), [&](const Term& t) {
            for (auto v : front)
                if (t.monomial[v] != 0) return false;
            return true;
        });
        if (!free) continue;
        std::vector<Term> terms;
        for (const auto& t : g.terms()) {
            std::vector<Exponent> e(back_vars.size());
            for (std::size_t k = 0; k < back_vars.size(); ++k) e[k] = t.monomial[back_vars[k]];
            terms.push_back({MultiIndex(std::move(e)), t.coeff});
        }
        projected.emplace_back(back_ring, back_order, std::move(terms));
    }

    Ideal out(back_ring, projected);
    // On back monomials a block order agrees with its back component, so the
    // projection is already the reduced basis when that component matches.
    bool trusted = front.empty() ? order == back_order
                                 : order.kind() == TermOrder::Kind::Block &&
                                       order.back_order() == back_order.embed(back_vars, n);
    if (trusted) out.remember_basis(back_order, std::move(projected), stats);
    return out;
}

MonomialIdeal lead_ideal(const RingPtr& ring, std::span<const Polynomial> basis) {
    return MonomialIdeal(ring, leading_monomials(basis));
}

MonomialIdeal initial_ideal(const Ideal& I, const TermOrder& order) {
    return lead_ideal(I.ring(), I.groebner_basis(order));
}

WeightInitialIdeal initial_ideal(const Ideal& I, std::span<const std::int64_t> weights, const TermOrder& tie) {
    std::vector<std::int64_t> w(weights.begin(), weights.end());
    TermOrder weighted = TermOrder::weighted(w, tie);
    std::vector<Polynomial> forms;
    for (const auto& g : I.groebner_basis(weighted)) forms.push_back(initial_form(g, w).with_order(tie));
    Ideal ideal(I.ring(), forms);
    // The initial forms are a Groebner basis of in_w(I) under the tie-breaker.
    ideal.remember_basis(tie, forms);
    const auto& reduced = ideal.groebner_basis(tie);
    bool monomial = std::all_of(reduced.begin(), reduced.end(), [](const Polynomial& p) { return p.is_monomial(); });
    WeightInitialIdeal out{std::move(ideal), std::move(forms), monomial, std::nullopt};
    if (monomial) out.monomial = lead_ideal(I.ring(), reduced);
    return out;
}

std::vector<std::int64_t> find_weight_vector(const Ideal& I, const TermOrder& order) {
    const std::size_t n = I.ring()->nvars();
    std::vector<LinearInequality> system;
    for (std::size_t i = 0; i < n; ++i) {
        LinearInequality row{std::vector<Coefficient>(n, 0), 1};
        row.coeffs[i] = 1;
        system.push_back(std::move(row));
    }
    const auto& basis = I.groebner_basis(order);
    for (const auto& g : basis) {
        const MultiIndex& lm = g.leading_monomial();
        for (std::size_t k = 1; k < g.size(); ++k) {
            const MultiIndex& m = g.terms()[k].monomial;
            LinearInequality row{std::vector<Coefficient>(n), 1};
            for (std::size_t i = 0; i < n; ++i)
                row.coeffs[i] = Coefficient(static_cast<long>(lm[i])) - Coefficient(static_cast<long>(m[i]));
            system.push_back(std::move(row));
        }
    }
    auto solution = fourier_motzkin_solve(system, n);
    if (!solution) throw TheoremViolation("no weight vector represents " + order.fingerprint());

    mpz_class scale = 1;
    for (const auto& q : *solution) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
    std::vector<std::int64_t> w;
    for (const auto& q : *solution) {
        Coefficient v = q * scale;
        if (!v.get_num().fits_slong_p()) throw BudgetExceeded("weight vector entry does not fit in 64 bits");
        w.push_back(v.get_num().get_si());
    }

    for (const auto& g : basis) {
        auto lead = g.leading_monomial().dot(w);
        for (std::size_t k = 1; k < g.size(); ++k)
            if (g.terms()[k].monomial.dot(w) >= lead)
                throw TheoremViolation("weight vector fails to select the leading term");
    }
    auto check = initial_ideal(I, w, order);
    if (!check.is_monomial || !(*check.monomial == initial_ideal(I, order)))
        throw TheoremViolation("in_w(I) differs from in_<(I) for the computed weight vector");
    return w;
}

}  // namespace vgb
