#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vgb/veronese.hpp"

namespace vgb {

using LatticePoint = std::vector<std::int64_t>;

/// Points m^(1..s) in Z^n with a grading vector lambda, lambda . m^(i) = 1.
struct Configuration {
    std::vector<LatticePoint> points;
    std::vector<Coefficient> lambda;
    /// Number of points equal to an earlier point.
    std::size_t repeats = 0;

    std::size_t size() const noexcept { return points.size(); }
    std::size_t dimension() const noexcept { return points.empty() ? 0 : points.front().size(); }
};

/// Solves lambda . m^(i) = 1 exactly. Throws NotAConfiguration when the
/// list is empty, ragged or has no solution.
std::vector<Coefficient> validate_configuration(const std::vector<LatticePoint>& points);
Configuration make_configuration(std::vector<LatticePoint> points);
/// Checks a supplied lambda instead of solving for one.
Configuration make_configuration(std::vector<LatticePoint> points, std::vector<Coefficient> lambda);

/// Rank over Q.
std::size_t rank(const std::vector<LatticePoint>& rows);

/// Exponent vector of phi_A(y^u) in Z^n.
LatticePoint toric_image(const Configuration& A, const MultiIndex& u);

/// P_A = Ker(y_i |-> z^{m^(i)}) in K[y1..ys], with its reduced basis under
/// `order` cached. Negative coordinates are cleared with one extra variable
/// w and the relation z1...zn w - 1.
Ideal toric_ideal(const Configuration& A, const TermOrder& order, const GroebnerOptions& options = {});
inline Ideal toric_ideal(const Configuration& A, const GroebnerOptions& options = {}) {
    return toric_ideal(A, TermOrder::grevlex(A.size()), options);
}

struct VeroneseConfiguration {
    /// One point per multi-index of N_d^s, in canonical R^[d] order.
    Configuration multiset;
    std::vector<MultiIndex> indices;
    std::vector<LatticePoint> distinct;
    /// Position in `distinct` of every multiset point.
    std::vector<std::size_t> dedup;
};

VeroneseConfiguration veronese_configuration(const Configuration& A, std::size_t d);

struct ToricCertificate {
    std::size_t d = 0;
    std::vector<Polynomial> toric_basis{};
    std::vector<std::int64_t> omega{};
    PullbackResult pullback;
    VeroneseConfiguration veronese{};
    std::size_t rank_a = 0;
    std::size_t rank_ad = 0;
    /// Pairs of R^[d] variables with equal image (the linear binomials that
    /// separate the multiset ideal from the distinct-point one).
    std::vector<std::pair<std::size_t, std::size_t>> linear_pairs{};
    std::vector<Check> checks{};
    bool passed() const noexcept { return all_passed(checks); }
};

struct ToricOptions {
    GroebnerOptions groebner;
    /// Also compute P of the multiset A^(d) directly and compare.
    bool compare_multiset = false;
};

/// P_A, omega from find_weight_vector under grevlex on S, then
/// pullback_homogeneous(P_A, d, omega) plus binomial/image/rank checks.
ToricCertificate verify_toric_veronese(const Configuration& A, std::size_t d, const ToricOptions& options = {});

}  // namespace vgb
