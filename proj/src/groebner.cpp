#include "vgb/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

#include "vgb/errors.hpp"

namespace vgb {

namespace {

std::vector<const Polynomial*> ascending_by_lead(std::span<const Polynomial> G, const TermOrder& order,
                                                 std::vector<Polynomial>& storage) {
    storage.clear();
    storage.reserve(G.size());
    for (const auto& g : G) {
        if (g.is_zero()) throw UndefinedInput("division by the zero polynomial");
        storage.push_back(g.with_order(order));
    }
    std::vector<const Polynomial*> sorted;
    for (const auto& g : storage) sorted.push_back(&g);
    std::stable_sort(sorted.begin(), sorted.end(), [&](const Polynomial* a, const Polynomial* b) {
        return order.compare(a->leading_monomial(), b->leading_monomial()) < 0;
    });
    return sorted;
}

const Polynomial* find_divisor(const MultiIndex& m, const std::vector<const Polynomial*>& divisors) {
    for (const auto* g : divisors)
        if (g->leading_monomial().divides(m)) return g;
    return nullptr;
}

// Full reduction; `divisors` already in `order` and nonzero.
Polynomial reduce_full(Polynomial p, const std::vector<const Polynomial*>& divisors) {
    std::vector<Term> rest;
    while (!p.is_zero()) {
        const Term& lt = p.leading_term();
        if (const Polynomial* g = find_divisor(lt.monomial, divisors)) {
            Coefficient c = lt.coeff / g->leading_coefficient();
            MultiIndex shift = lt.monomial - g->leading_monomial();
            p = p.sub_mul(c, shift, *g);
        } else {
            rest.push_back(lt);
            p = p.tail();
        }
    }
    // `rest` is already descending.
    return Polynomial(p.ring(), p.order(), std::move(rest));
}

std::int64_t weighted_degree(const MultiIndex& m, std::span<const std::int64_t> grading) { return m.dot(grading); }

std::int64_t sugar_of(const Polynomial& f) {
    std::int64_t s = 0;
    for (const auto& t : f.terms()) s = std::max(s, weighted_degree(t.monomial, f.ring()->grading()));
    return s;
}

class Buchberger {
public:
    Buchberger(const TermOrder& order, const GroebnerOptions& options) : order_(order), options_(options) {}

    void seed(const Polynomial& g) {
        Polynomial p = g.with_order(order_).monic();
        if (p.is_zero()) return;
        add_entry(std::move(p), sugar_of(g), /*make_pairs=*/false);
    }

    void add_generator(const Polynomial& f) {
        Polynomial p = reduce(f.with_order(order_));
        if (p.is_zero()) return;
        p = p.monic();
        check_bits(p);
        add_entry(std::move(p), sugar_of(f), /*make_pairs=*/true);
    }

    void run() {
        while (!pairs_.empty()) {
            Pair pr = *pairs_.begin();
            pairs_.erase(pairs_.begin());
            if (++stats_.spairs_reduced > options_.spair_cap)
                throw BudgetExceeded("S-pair budget of " + std::to_string(options_.spair_cap) + " exceeded");
            Polynomial s = s_polynomial(entries_[pr.i].poly, entries_[pr.j].poly, order_);
            Polynomial r = reduce(std::move(s));
            if (r.is_zero()) {
                ++stats_.zero_reductions;
                continue;
            }
            r = r.monic();
            check_bits(r);
            add_entry(std::move(r), pr.sugar, true);
        }
    }

    GroebnerResult finish() {
        std::vector<Polynomial> active;
        for (const auto& e : entries_)
            if (e.active) active.push_back(e.poly);
        return {reduce_basis(active, order_), stats_};
    }

private:
    void check_bits(const Polynomial& p) const {
        for (const auto& t : p.terms())
            if (bit_size(t.coeff) > options_.coefficient_bit_cap)
                throw BudgetExceeded("coefficient size exceeds " + std::to_string(options_.coefficient_bit_cap) +
                                     " bits");
    }

    struct Entry {
        Polynomial poly;
        std::int64_t sugar;
        bool active;
    };

    struct Pair {
        std::size_t i;
        std::size_t j;
        MultiIndex lcm;
        std::int64_t sugar;
    };

    struct PairLess {
        const TermOrder* order;
        bool operator()(const Pair& a, const Pair& b) const {
            if (a.sugar != b.sugar) return a.sugar < b.sugar;
            auto c = order->compare(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            if (a.j != b.j) return a.j < b.j;
            return a.i < b.i;
        }
    };

    const MultiIndex& lead(std::size_t k) const { return entries_[k].poly.leading_monomial(); }

    Polynomial reduce(Polynomial p) {
        std::vector<const Polynomial*> divisors;
        for (std::size_t k : active_) divisors.push_back(&entries_[k].poly);
        return reduce_full(std::move(p), divisors);
    }

    std::int64_t pair_sugar(std::size_t i, std::size_t j, const MultiIndex& lcm) const {
        auto grading = entries_[i].poly.ring()->grading();
        std::int64_t l = weighted_degree(lcm, grading);
        std::int64_t si = entries_[i].sugar + l - weighted_degree(lead(i), grading);
        std::int64_t sj = entries_[j].sugar + l - weighted_degree(lead(j), grading);
        return std::max(si, sj);
    }

    // Gebauer-Moeller update.
    void add_entry(Polynomial p, std::int64_t sugar, bool make_pairs) {
        std::size_t h = entries_.size();
        entries_.push_back({std::move(p), sugar, true});
        const MultiIndex& lh = lead(h);

        if (make_pairs) {
            std::vector<std::size_t> candidates(active_.begin(), active_.end());
            std::vector<MultiIndex> lcms;
            lcms.reserve(candidates.size());
            for (std::size_t g : candidates) lcms.push_back(lh.lcm(lead(g)));

            std::vector<std::size_t> kept;  // positions into candidates
            for (std::size_t a = 0; a < candidates.size(); ++a) {
                if (lh.coprime(lead(candidates[a]))) {
                    kept.push_back(a);
                    continue;
                }
                bool dominated = false;
                for (std::size_t b = a + 1; b < candidates.size() && !dominated; ++b)
                    dominated = lcms[b].divides(lcms[a]);
                for (std::size_t b : kept) {
                    if (dominated) break;
                    dominated = lcms[b].divides(lcms[a]);
                }
                if (!dominated) kept.push_back(a);
                else ++stats_.pairs_pruned;
            }

            PairLess less{&order_};
            std::set<Pair, PairLess> pruned(less);
            for (const auto& pr : pairs_) {
                bool drop = lh.divides(pr.lcm) && lh.lcm(lead(pr.i)) != pr.lcm && lh.lcm(lead(pr.j)) != pr.lcm;
                if (drop) ++stats_.pairs_pruned;
                else pruned.insert(pruned.end(), pr);
            }
            pairs_ = std::move(pruned);

            for (std::size_t a : kept) {
                std::size_t g = candidates[a];
                if (lh.coprime(lead(g))) {
                    ++stats_.pairs_pruned;
                    continue;
                }
                pairs_.insert({g, h, lcms[a], pair_sugar(g, h, lcms[a])});
            }
        }

        std::vector<std::size_t> still;
        for (std::size_t g : active_) {
            if (lh.divides(lead(g))) entries_[g].active = false;
            else still.push_back(g);
        }
        still.push_back(h);
        active_ = std::move(still);
    }

    TermOrder order_;
    GroebnerOptions options_;
    std::vector<Entry> entries_;
    std::vector<std::size_t> active_;
    std::set<Pair, PairLess> pairs_{PairLess{&order_}};
    GroebnerStats stats_;
};

}  // namespace

std::uint64_t default_spair_cap() {
    if (const char* env = std::getenv("VERONESE_GB_BUDGET")) {
        try {
            auto v = std::stoull(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
    }
    return 1'000'000;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G, const TermOrder& order) {
    for (const auto& g : G) require_same_ring(f.ring(), g.ring());
    std::vector<Polynomial> storage;
    auto divisors = ascending_by_lead(G, order, storage);
    return reduce_full(f.with_order(order), divisors);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
    require_same_ring(f.ring(), g.ring());
    if (f.is_zero() || g.is_zero()) throw UndefinedInput("S-polynomial of the zero polynomial");
    Polynomial a = f.with_order(order);
    Polynomial b = g.with_order(order);
    const MultiIndex& la = a.leading_monomial();
    const MultiIndex& lb = b.leading_monomial();
    MultiIndex l = la.lcm(lb);
    Polynomial left = a.mul_term(l - la, 1 / a.leading_coefficient());
    return left.sub_mul(1 / b.leading_coefficient(), l - lb, b);
}

GroebnerResult buchberger(std::span<const Polynomial> generators, const TermOrder& order,
                          const GroebnerOptions& options, std::span<const Polynomial> seed_basis) {
    for (std::size_t k = 1; k < generators.size(); ++k) require_same_ring(generators[0].ring(), generators[k].ring());
    Buchberger bb(order, options);
    for (const auto& g : seed_basis) bb.seed(g);
    std::vector<const Polynomial*> inputs;
    for (const auto& g : generators)
        if (!g.is_zero()) inputs.push_back(&g);
    // Low sugar first keeps the intermediate basis small.
    std::stable_sort(inputs.begin(), inputs.end(),
                     [](const Polynomial* a, const Polynomial* b) { return sugar_of(*a) < sugar_of(*b); });
    for (const auto* g : inputs) bb.add_generator(*g);
    bb.run();
    return bb.finish();
}

std::vector<Polynomial> reduce_basis(std::span<const Polynomial> G, const TermOrder& order) {
    std::vector<Polynomial> polys;
    for (const auto& g : G)
        if (!g.is_zero()) polys.push_back(g.with_order(order).monic());
    std::stable_sort(polys.begin(), polys.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    std::vector<Polynomial> minimal;
    for (auto& p : polys) {
        bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& q) {
            return q.leading_monomial().divides(p.leading_monomial());
        });
        if (!redundant) minimal.push_back(std::move(p));
    }
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<const Polynomial*> others;
        for (std::size_t m = 0; m < minimal.size(); ++m)
            if (m != k) others.push_back(&minimal[m]);
        Polynomial head = Polynomial::monomial(minimal[k].ring(), order, minimal[k].leading_monomial(), 1);
        reduced.push_back(head + reduce_full(minimal[k].tail(), others));
    }
    return reduced;
}

GbCertificate is_groebner_basis(std::span<const Polynomial> G, const TermOrder& order) {
    GbCertificate cert;
    std::vector<std::size_t> index;
    std::vector<Polynomial> polys;
    for (std::size_t k = 0; k < G.size(); ++k) {
        if (G[k].is_zero()) continue;
        index.push_back(k);
        polys.push_back(G[k].with_order(order));
    }
    std::vector<Polynomial> storage;
    auto divisors = ascending_by_lead(polys, order, storage);
    for (std::size_t a = 0; a < polys.size(); ++a) {
        for (std::size_t b = a + 1; b < polys.size(); ++b) {
            if (polys[a].leading_monomial().coprime(polys[b].leading_monomial())) {
                ++cert.pairs_coprime;
                continue;
            }
            ++cert.pairs_checked;
            Polynomial r = reduce_full(s_polynomial(polys[a], polys[b], order), divisors);
            if (!r.is_zero()) {
                cert.is_groebner = false;
                cert.failing_pair = {index[a], index[b]};
                cert.remainder = std::move(r);
                return cert;
            }
        }
    }
    return cert;
}

std::vector<MultiIndex> leading_monomials(std::span<const Polynomial> G) {
    std::vector<MultiIndex> out;
    for (const auto& g : G)
        if (!g.is_zero()) out.push_back(g.leading_monomial());
    return out;
}

}  // namespace vgb
