#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vgb/elimination.hpp"
#include "vgb/ideal.hpp"
#include "vgb/monomial_ideal.hpp"

namespace vgb {

/// phi_d : R^[d] -> S, x_a |-> y^a.
class VeroneseMap {
public:
    VeroneseMap(std::size_t s, std::size_t d);

    std::size_t s() const noexcept { return s_; }
    std::size_t d() const noexcept { return d_; }
    const RingPtr& source() const noexcept { return source_; }
    const RingPtr& target() const noexcept { return target_; }

    /// Exponent vector of phi_d(u): sum of multiplicity times index.
    MultiIndex image(const MultiIndex& u) const;
    /// Image polynomial, ordered by `order` on S (grevlex by default).
    Polynomial image(const Polynomial& g) const;
    Polynomial image(const Polynomial& g, const TermOrder& order) const;

private:
    std::size_t s_;
    std::size_t d_;
    RingPtr source_;
    RingPtr target_;
};

/// Monomial-level phi_d on a ring with x variables (Veronese or Joint).
MultiIndex phi_d(const MultiIndex& u, const Ring& source);

/// The order-least variable x_a of R^[d] whose image y^a divides phi_d(u).
/// Returns its position in `R`. Throws DomainError when u = 1.
std::size_t mv(const MultiIndex& u, const Ring& R, const TermOrder& order);
inline std::size_t mv(const MultiIndex& u, const Ring& R) { return mv(u, R, R.default_order()); }

/// The quadratic binomials x_{a+e_i} x_{b+e_j} - x_{a+e_j} x_{b+e_i}, a, b in
/// N_{d-1}^s, i < j: zeros dropped, deduplicated up to sign, each written
/// with its Gamma-initial term first (coefficient +1), sorted ascending by
/// leading monomial.
std::vector<Polynomial> build_g_gamma(std::size_t s, std::size_t d);

/// Elimination-based preimages under phi_d. The Groebner basis of the graph
/// ideal <x_a - y^a> is computed once and reused as the seed for every
/// preimage.
class KernelOracle {
public:
    KernelOracle(std::size_t s, std::size_t d, const TermOrder& order, const GroebnerOptions& options = {});
    /// Uses the Gamma order.
    KernelOracle(std::size_t s, std::size_t d, const GroebnerOptions& options = {});

    const RingPtr& source() const noexcept { return map_.source(); }
    const TermOrder& order() const noexcept { return order_; }
    /// Reduced basis of Ker phi_d under the oracle order.
    const std::vector<Polynomial>& kernel_basis() const noexcept { return kernel_; }
    /// phi_d^{-1}(I) with its reduced basis under the oracle order cached.
    Ideal preimage(const Ideal& I) const;
    const GroebnerStats& graph_stats() const noexcept { return graph_stats_; }

private:
    VeroneseMap map_;
    TermOrder order_;
    GroebnerOptions options_;
    RingPtr joint_;
    TermOrder joint_order_;
    std::vector<std::size_t> front_;
    std::vector<Polynomial> graph_basis_;
    GroebnerStats graph_stats_;
    std::vector<Polynomial> kernel_;
};

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

bool all_passed(std::span<const Check> checks) noexcept;

struct QuadGbCertificate {
    std::size_t s = 0;
    std::size_t d = 0;
    std::vector<Polynomial> basis;
    GbCertificate spairs;
    std::size_t oracle_size = 0;
    std::vector<Check> checks;
    bool passed() const noexcept { return all_passed(checks); }
};

/// G_Gamma lies in Ker phi_d, all its S-pairs reduce to zero, and its reduced
/// form equals the elimination-oracle kernel basis.
QuadGbCertificate verify_quad_gb(std::size_t s, std::size_t d, const GroebnerOptions& options = {});

struct MResult {
    std::vector<MultiIndex> generators;
    std::size_t degree_cap = 0;
    bool complete = false;
    std::string completeness;
};

/// Minimal monomial generators of L(I) of degree <= degree_cap: standard
/// monomials of in(Ker phi_d) whose images lie in I, scanned degree by
/// degree. Flagged complete only when the cap is certified (Gamma order,
/// d >= ceil(s(a+1)/2), cap >= 2); otherwise partial.
MResult build_m(const MonomialIdeal& I, std::size_t d, const TermOrder& order, std::size_t degree_cap,
                const GroebnerOptions& options = {});

struct Bounds {
    std::size_t s = 0;
    Exponent a = 0;
    std::uint64_t delta = 0;
    /// ceil(s(a+1)/2) and the unrounded s(a+1)/2.
    std::uint64_t paper = 0;
    Coefficient paper_exact;
    /// (s*delta - s + 1)/2
    Coefficient ert_rough;
    /// s * ceil(delta/2)
    std::uint64_t ert_stated = 0;

    bool paper_below_rough = false;
    bool a_plus_2_le_delta = false;
    bool paper_above_stated = false;
    bool delta_odd = false;
    bool a_ge_delta = false;
};

/// Throws UndefinedInput for the zero ideal.
Bounds bounds(const MonomialIdeal& M);

struct PullbackResult {
    enum class Method { Constructive, EliminationOracle };

    std::vector<Polynomial> groebner_basis{};
    std::vector<Polynomial> reduced_basis{};
    TermOrder order;
    std::uint64_t max_degree = 0;
    Method method = Method::Constructive;
    std::vector<Check> certificate{};

    /// Monomial ideal whose exponents drive the bound (I itself or in_w(I)).
    std::optional<MonomialIdeal> driving_ideal{};
    std::uint64_t bound = 1;
    bool bound_met = true;
    std::optional<MResult> m{};
    std::vector<std::int64_t> weights{};
    GroebnerStats stats{};

    bool quadratic() const noexcept { return max_degree <= 2; }
};

std::string to_string(PullbackResult::Method m);

struct PullbackOptions {
    GroebnerOptions groebner;
    /// Compare against the elimination oracle (always done below the bound).
    bool cross_check = false;
    /// Force a degree cap for M; the result is flagged partial unless certified.
    std::optional<std::size_t> degree_cap;
};

/// G_Gamma ∪ M(I), verified by S-pairs. At or above the bound the degree cap
/// 2 is certified; below it the cap comes from the oracle basis degree.
PullbackResult pullback_monomial(const MonomialIdeal& I, std::size_t d, const PullbackOptions& options = {});

/// Weight of x_a is w . a.
std::vector<std::int64_t> pullback_weight(std::span<const std::int64_t> weights, std::size_t s, std::size_t d);

/// Reduced basis of phi_d^{-1}(I) under the weighted Gamma order, computed by
/// elimination, and checked against pullback_monomial(in_w(I), d).
/// Throws PreconditionError when I is not homogeneous or in_w(I) is not a
/// monomial ideal.
PullbackResult pullback_homogeneous(const Ideal& I, std::size_t d, std::span<const std::int64_t> weights,
                                    const PullbackOptions& options = {});

}  // namespace vgb
