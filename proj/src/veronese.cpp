#include "vgb/veronese.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "vgb/errors.hpp"
#include "vgb/io.hpp"

namespace vgb {

namespace {

std::uint64_t ceil_half(std::uint64_t n) { return (n + 1) / 2; }

std::uint64_t paper_bound(std::size_t s, Exponent a) { return ceil_half(static_cast<std::uint64_t>(s) * (a + 1)); }

// Calls fn on every exponent vector of total degree k over n variables.
template <class Fn>
void for_each_monomial(std::size_t n, std::size_t k, Fn&& fn) {
    std::vector<Exponent> e(n, 0);
    auto rec = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
        if (pos + 1 == n) {
            e[pos] = static_cast<Exponent>(left);
            fn(MultiIndex(e));
            return;
        }
        for (std::size_t v = left + 1; v-- > 0;) {
            e[pos] = static_cast<Exponent>(v);
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, k);
}

Polynomial monomial_poly(const RingPtr& R, const TermOrder& order, const MultiIndex& m) {
    return Polynomial::monomial(R, order, m);
}

}  // namespace

VeroneseMap::VeroneseMap(std::size_t s, std::size_t d)
    : s_(s), d_(d), source_(Ring::veronese(s, d)), target_(Ring::base(s)) {}

MultiIndex phi_d(const MultiIndex& u, const Ring& source) {
    if (source.veronese_count() == 0) throw RingMismatch("phi_d is defined on rings with x variables");
    if (u.size() != source.nvars()) throw DimensionError("monomial does not belong to " + source.describe());
    std::vector<Exponent> out(source.s(), 0);
    for (std::size_t k = 0; k < source.veronese_count(); ++k) {
        if (u[k] == 0) continue;
        const MultiIndex& a = source.veronese_index(k);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += u[k] * a[i];
    }
    return MultiIndex(std::move(out));
}

MultiIndex VeroneseMap::image(const MultiIndex& u) const { return phi_d(u, *source_); }

Polynomial VeroneseMap::image(const Polynomial& g) const { return image(g, target_->default_order()); }

Polynomial VeroneseMap::image(const Polynomial& g, const TermOrder& order) const {
    require_same_ring(g.ring(), source_);
    std::vector<Term> terms;
    for (const auto& t : g.terms()) terms.push_back({image(t.monomial), t.coeff});
    return Polynomial(target_, order, std::move(terms));
}

std::size_t mv(const MultiIndex& u, const Ring& R, const TermOrder& order) {
    if (u.is_zero()) throw DomainError("mv is undefined for the monomial 1");
    MultiIndex image = phi_d(u, R);
    std::vector<std::size_t> vars(R.nvars());
    std::iota(vars.begin(), vars.end(), std::size_t{0});
    if (order.kind() != TermOrder::Kind::GammaRevLex) {
        std::sort(vars.begin(), vars.end(), [&](std::size_t i, std::size_t j) {
            return order.less(MultiIndex::unit(R.nvars(), i), MultiIndex::unit(R.nvars(), j));
        });
    }
    for (std::size_t v : vars)
        if (R.veronese_index(v).divides(image)) return v;
    throw DomainError("no variable image divides phi_d(u)");
}

std::vector<Polynomial> build_g_gamma(std::size_t s, std::size_t d) {
    auto R = Ring::veronese(s, d);
    auto order = TermOrder::gamma(s, d);
    std::vector<Polynomial> out;
    if (s < 2 || d < 2) return out;
    auto smaller = enumerate_nds(s, d - 1);
    const std::size_t n = R->nvars();
    std::map<std::pair<MultiIndex, MultiIndex>, bool> seen;
    auto var = [&](const MultiIndex& a) { return MultiIndex::unit(n, *R->veronese_position(a)); };
    for (const auto& a : smaller) {
        for (const auto& b : smaller) {
            for (std::size_t i = 0; i < s; ++i) {
                for (std::size_t j = i + 1; j < s; ++j) {
                    MultiIndex ei = MultiIndex::unit(s, i), ej = MultiIndex::unit(s, j);
                    MultiIndex m1 = var(a + ei) + var(b + ej);
                    MultiIndex m2 = var(a + ej) + var(b + ei);
                    if (m1 == m2) continue;
                    if (order.less(m1, m2)) std::swap(m1, m2);
                    if (!seen.emplace(std::make_pair(m1, m2), true).second) continue;
                    out.push_back(Polynomial::binomial(R, order, m1, m2));
                }
            }
        }
    }
    std::stable_sort(out.begin(), out.end(), [&](const Polynomial& f, const Polynomial& g) {
        auto c = order.compare(f.leading_monomial(), g.leading_monomial());
        if (c != 0) return c < 0;
        return order.less(f.terms()[1].monomial, g.terms()[1].monomial);
    });
    return out;
}

KernelOracle::KernelOracle(std::size_t s, std::size_t d, const GroebnerOptions& options)
    : KernelOracle(s, d, TermOrder::gamma(s, d), options) {}

KernelOracle::KernelOracle(std::size_t s, std::size_t d, const TermOrder& order, const GroebnerOptions& options)
    : map_(s, d), order_(order), options_(options), joint_(Ring::joint(s, d)),
      joint_order_(TermOrder::grevlex(1)) {
    const std::size_t n = map_.source()->nvars();
    if (order.nvars() != n) throw DimensionError("oracle order does not act on R^[d]");
    std::vector<std::size_t> x_pos(n);
    std::iota(x_pos.begin(), x_pos.end(), std::size_t{0});
    for (std::size_t i = 0; i < s; ++i) front_.push_back(n + i);
    joint_order_ = TermOrder::elimination(joint_->nvars(), front_, order_.embed(x_pos, joint_->nvars()));

    std::vector<Polynomial> graph;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Exponent> e(joint_->nvars(), 0);
        const MultiIndex& a = joint_->veronese_index(k);
        for (std::size_t i = 0; i < s; ++i) e[n + i] = a[i];
        graph.push_back(Polynomial::binomial(joint_, joint_order_, MultiIndex::unit(joint_->nvars(), k),
                                             MultiIndex(std::move(e))));
    }
    auto result = buchberger(graph, joint_order_, options_);
    graph_basis_ = std::move(result.basis);
    graph_stats_ = result.stats;

    Ideal graph_ideal(joint_, graph_basis_);
    graph_ideal.remember_basis(joint_order_, graph_basis_, graph_stats_);
    Ideal kernel = eliminate(graph_ideal, joint_order_, front_, map_.source(), order_, options_);
    kernel_ = kernel.groebner_basis(order_);
}

Ideal KernelOracle::preimage(const Ideal& I) const {
    if (I.ring()->kind() != Ring::Kind::Base || I.ring()->s() != map_.s())
        throw RingMismatch("preimage expects an ideal of S with s = " + std::to_string(map_.s()));
    if (I.is_zero()) {
        Ideal out(map_.source(), kernel_);
        out.remember_basis(order_, kernel_);
        return out;
    }
    const std::size_t n = map_.source()->nvars();
    std::vector<Polynomial> lifted;
    for (const auto& g : I.generators()) {
        std::vector<Term> terms;
        for (const auto& t : g.terms()) {
            std::vector<Exponent> e(joint_->nvars(), 0);
            for (std::size_t i = 0; i < map_.s(); ++i) e[n + i] = t.monomial[i];
            terms.push_back({MultiIndex(std::move(e)), t.coeff});
        }
        lifted.emplace_back(joint_, joint_order_, std::move(terms));
    }
    Ideal extra(joint_, std::move(lifted));
    return eliminate(extra, joint_order_, front_, map_.source(), order_, options_, graph_basis_);
}

bool all_passed(std::span<const Check> checks) noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

QuadGbCertificate verify_quad_gb(std::size_t s, std::size_t d, const GroebnerOptions& options) {
    QuadGbCertificate cert;
    cert.s = s;
    cert.d = d;
    VeroneseMap map(s, d);
    auto order = TermOrder::gamma(s, d);
    cert.basis = build_g_gamma(s, d);

    bool in_kernel = std::all_of(cert.basis.begin(), cert.basis.end(),
                                 [&](const Polynomial& g) { return map.image(g).is_zero(); });
    cert.checks.push_back({"in_kernel", in_kernel, std::to_string(cert.basis.size()) + " binomials"});

    cert.spairs = is_groebner_basis(cert.basis, order);
    cert.checks.push_back({"s_pairs_reduce_to_zero", cert.spairs.is_groebner,
                           std::to_string(cert.spairs.pairs_checked) + " pairs reduced, " +
                               std::to_string(cert.spairs.pairs_coprime) + " coprime"});

    KernelOracle oracle(s, d, order, options);
    cert.oracle_size = oracle.kernel_basis().size();
    bool same = reduce_basis(cert.basis, order) == oracle.kernel_basis();
    cert.checks.push_back({"matches_elimination_oracle", same,
                           "oracle reduced basis has " + std::to_string(cert.oracle_size) + " elements"});
    bool quadratic = max_degree(cert.basis) <= 2;
    cert.checks.push_back({"quadratic", quadratic, "max degree " + std::to_string(max_degree(cert.basis))});
    return cert;
}

MResult build_m(const MonomialIdeal& I, std::size_t d, const TermOrder& order, std::size_t degree_cap,
                const GroebnerOptions& options) {
    if (I.ring()->kind() != Ring::Kind::Base) throw RingMismatch("M(I) expects a monomial ideal of S");
    if (I.is_zero()) throw UndefinedInput("M(I) of the zero ideal");
    if (degree_cap < 1) throw DomainError("degree cap must be at least 1");
    const std::size_t s = I.ring()->s();
    VeroneseMap map(s, d);
    const auto& R = map.source();
    if (order.nvars() != R->nvars()) throw DimensionError("order does not act on R^[d]");

    std::vector<MultiIndex> kernel_leads;
    if (order.kind() == TermOrder::Kind::GammaRevLex) {
        kernel_leads = leading_monomials(build_g_gamma(s, d));
    } else {
        KernelOracle oracle(s, d, order, options);
        kernel_leads = leading_monomials(oracle.kernel_basis());
    }
    MonomialIdeal kernel_initial(R, kernel_leads);

    MResult out;
    out.degree_cap = degree_cap;
    for (std::size_t k = 1; k <= degree_cap; ++k) {
        std::vector<MultiIndex> found;
        for_each_monomial(R->nvars(), k, [&](const MultiIndex& u) {
            if (kernel_initial.contains(u)) return;
            for (const auto& g : out.generators)
                if (g.divides(u)) return;
            if (I.contains(map.image(u))) found.push_back(u);
        });
        std::sort(found.begin(), found.end(), [&](const MultiIndex& a, const MultiIndex& b) { return order.less(a, b); });
        out.generators.insert(out.generators.end(), found.begin(), found.end());
    }

    std::uint64_t bound = paper_bound(s, I.max_exponent());
    if (order.kind() == TermOrder::Kind::GammaRevLex && d >= bound && degree_cap >= 2) {
        out.complete = true;
        out.completeness = "quadratic generation certified: d = " + std::to_string(d) + " >= " + std::to_string(bound);
    } else {
        out.complete = false;
        out.completeness = "partial: degree cap " + std::to_string(degree_cap) + " not certified";
    }
    return out;
}

Bounds bounds(const MonomialIdeal& M) {
    if (M.is_zero()) throw UndefinedInput("bounds of the zero ideal");
    Bounds b;
    b.s = M.ring()->nvars();
    b.a = M.max_exponent();
    b.delta = M.delta();
    const long s = static_cast<long>(b.s);
    const long a = static_cast<long>(b.a);
    const long delta = static_cast<long>(b.delta);
    b.paper = paper_bound(b.s, b.a);
    b.paper_exact = Coefficient(s * (a + 1), 2);
    b.paper_exact.canonicalize();
    b.ert_rough = Coefficient(s * delta - s + 1, 2);
    b.ert_rough.canonicalize();
    b.ert_stated = static_cast<std::uint64_t>(s) * ceil_half(b.delta);
    b.paper_below_rough = b.paper_exact < b.ert_rough;
    b.a_plus_2_le_delta = a + 2 <= delta;
    b.paper_above_stated = b.paper_exact > Coefficient(static_cast<long>(b.ert_stated));
    b.delta_odd = b.delta % 2 == 1;
    b.a_ge_delta = a >= delta;
    return b;
}

std::string to_string(PullbackResult::Method m) {
    return m == PullbackResult::Method::Constructive ? "constructive" : "elimination-oracle";
}

std::vector<std::int64_t> pullback_weight(std::span<const std::int64_t> weights, std::size_t s, std::size_t d) {
    if (weights.size() != s)
        throw DimensionError("weight vector of length " + std::to_string(weights.size()) + " for s = " + std::to_string(s));
    for (auto w : weights)
        if (w < 0) throw DomainError("weight vectors must be non-negative");
    std::vector<std::int64_t> out;
    for (const auto& a : enumerate_nds(s, d)) out.push_back(a.dot(weights));
    return out;
}

PullbackResult pullback_monomial(const MonomialIdeal& I, std::size_t d, const PullbackOptions& options) {
    if (I.ring()->kind() != Ring::Kind::Base) throw RingMismatch("pullback expects a monomial ideal of S");
    if (d < 1) throw DomainError("d must be at least 1");
    const std::size_t s = I.ring()->s();
    VeroneseMap map(s, d);
    const auto& R = map.source();
    auto order = TermOrder::gamma(s, d);

    PullbackResult result{.order = order};
    result.method = PullbackResult::Method::Constructive;
    result.driving_ideal = I;
    result.groebner_basis = build_g_gamma(s, d);

    std::optional<KernelOracle> oracle;
    std::optional<Ideal> oracle_ideal;
    auto run_oracle = [&]() -> const std::vector<Polynomial>& {
        if (!oracle_ideal) {
            oracle.emplace(s, d, order, options.groebner);
            Ideal I_poly(I.ring(), I.as_polynomials(I.ring()->default_order()));
            oracle_ideal.emplace(oracle->preimage(I_poly));
        }
        return oracle_ideal->groebner_basis(order);
    };

    if (!I.is_zero()) {
        result.bound = paper_bound(s, I.max_exponent());
        result.bound_met = d >= result.bound;
        std::size_t cap = 2;
        bool oracle_cap = false;
        if (options.degree_cap) {
            cap = *options.degree_cap;
        } else if (!result.bound_met) {
            cap = std::max<std::size_t>(1, static_cast<std::size_t>(max_degree(run_oracle())));
            oracle_cap = true;
        }
        MResult m = build_m(I, d, order, cap, options.groebner);
        if (oracle_cap) {
            m.complete = true;
            m.completeness = "degree cap " + std::to_string(cap) + " taken from the elimination-oracle basis";
        }
        for (const auto& g : m.generators) result.groebner_basis.push_back(monomial_poly(R, order, g));
        result.m = std::move(m);
    }
    result.max_degree = max_degree(result.groebner_basis);
    result.reduced_basis = reduce_basis(result.groebner_basis, order);

    bool maps_in = std::all_of(result.groebner_basis.begin(), result.groebner_basis.end(), [&](const Polynomial& g) {
        auto image = map.image(g);
        return std::all_of(image.terms().begin(), image.terms().end(),
                           [&](const Term& t) { return I.contains(t.monomial); }) ||
               image.is_zero();
    });
    result.certificate.push_back({"maps_into_I", maps_in, std::to_string(result.groebner_basis.size()) + " elements"});

    auto spairs = is_groebner_basis(result.groebner_basis, order);
    result.certificate.push_back({"s_pairs_reduce_to_zero", spairs.is_groebner,
                                  std::to_string(spairs.pairs_checked) + " pairs reduced, " +
                                      std::to_string(spairs.pairs_coprime) + " coprime"});
    if (result.bound_met)
        result.certificate.push_back({"quadratic_at_bound", result.quadratic(),
                                      "d = " + std::to_string(d) + " >= " + std::to_string(result.bound) +
                                          ", max degree " + std::to_string(result.max_degree)});
    if (options.cross_check || oracle_ideal) {
        bool same = result.reduced_basis == run_oracle();
        result.certificate.push_back({"matches_elimination_oracle", same,
                                      "oracle reduced basis has " + std::to_string(run_oracle().size()) + " elements"});
        result.stats = oracle->graph_stats();
    }
    return result;
}

PullbackResult pullback_homogeneous(const Ideal& I, std::size_t d, std::span<const std::int64_t> weights,
                                    const PullbackOptions& options) {
    if (I.ring()->kind() != Ring::Kind::Base) throw RingMismatch("pullback expects an ideal of S");
    if (!I.is_homogeneous()) throw PreconditionError("the ideal is not homogeneous in the standard grading");
    const std::size_t s = I.ring()->s();
    if (weights.size() != s) throw DimensionError("weight vector length differs from s");
    std::vector<std::int64_t> w(weights.begin(), weights.end());
    for (auto v : w)
        if (v < 0) throw DomainError("weight vectors must be non-negative");

    TermOrder s_order = I.ring()->default_order();
    auto in_w = initial_ideal(I, w, s_order);
    if (!in_w.is_monomial)
        throw PreconditionError("in_w(I) is not a monomial ideal for w; choose w with find_weight_vector");
    const MonomialIdeal& M = *in_w.monomial;

    VeroneseMap map(s, d);
    auto gamma = TermOrder::gamma(s, d);
    auto pulled = pullback_weight(w, s, d);
    auto order = TermOrder::weighted(pulled, gamma);

    PullbackResult result{.order = order};
    result.method = PullbackResult::Method::EliminationOracle;
    result.weights = w;
    result.driving_ideal = M;

    KernelOracle oracle(s, d, order, options.groebner);
    Ideal pre = oracle.preimage(I);
    result.groebner_basis = pre.groebner_basis(order);
    result.reduced_basis = result.groebner_basis;
    result.max_degree = max_degree(result.groebner_basis);
    result.stats = pre.groebner(order).stats;

    if (!M.is_zero()) {
        result.bound = paper_bound(s, M.max_exponent());
        result.bound_met = d >= result.bound;
    }

    // phi_d(g) must lie in I for every basis element.
    const auto& s_basis = I.groebner_basis(s_order);
    bool maps_in = std::all_of(result.groebner_basis.begin(), result.groebner_basis.end(), [&](const Polynomial& g) {
        return normal_form(map.image(g, s_order), s_basis, s_order).is_zero();
    });
    result.certificate.push_back({"maps_into_I", maps_in, std::to_string(result.groebner_basis.size()) + " elements"});

    PullbackOptions mono_options = options;
    mono_options.cross_check = false;
    mono_options.degree_cap.reset();
    auto monomial_case = pullback_monomial(M, d, mono_options);

    // in_{phi*w}(phi^{-1}(I)) against phi^{-1}(in_w(I)), both reduced under Gamma.
    std::vector<Polynomial> forms;
    for (const auto& g : result.groebner_basis) forms.push_back(initial_form(g, pulled).with_order(gamma));
    bool lemma = reduce_basis(forms, gamma) == monomial_case.reduced_basis;
    result.certificate.push_back({"initial_form_of_pullback_equals_pullback_of_initial", lemma,
                                  std::to_string(forms.size()) + " initial forms"});

    bool same_initial = lead_ideal(map.source(), result.groebner_basis) ==
                        lead_ideal(map.source(), monomial_case.reduced_basis);
    result.certificate.push_back({"initial_ideal_matches_monomial_case", same_initial,
                                  "monomial case max degree " + std::to_string(monomial_case.max_degree)});
    if (result.bound_met)
        result.certificate.push_back({"quadratic_at_bound", result.quadratic(),
                                      "d = " + std::to_string(d) + " >= " + std::to_string(result.bound) +
                                          ", max degree " + std::to_string(result.max_degree)});
    return result;
}

}  // namespace vgb
