#include "vgb/toric.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "vgb/errors.hpp"

namespace vgb {

namespace {

using Matrix = std::vector<std::vector<Coefficient>>;

// Row-reduces m in place; returns the pivot column of each pivot row.
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        Coefficient inv = 1 / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Coefficient f = m[r][col];
            for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

void check_shape(const std::vector<LatticePoint>& points) {
    if (points.empty()) throw NotAConfiguration("a configuration needs at least one point");
    const std::size_t n = points.front().size();
    if (n == 0) throw NotAConfiguration("points must have at least one coordinate");
    for (const auto& p : points)
        if (p.size() != n) throw NotAConfiguration("points have different lengths");
}

std::size_t count_repeats(const std::vector<LatticePoint>& points) {
    std::map<LatticePoint, int> seen;
    std::size_t repeats = 0;
    for (const auto& p : points)
        if (seen[p]++ > 0) ++repeats;
    return repeats;
}

// Kernel of target_i |-> z^{points[i]} as an ideal of `target` with its
// reduced basis under `order` cached.
Ideal toric_kernel(const std::vector<LatticePoint>& points, const RingPtr& target, const TermOrder& order,
                   const GroebnerOptions& options) {
    const std::size_t n = points.front().size();
    const std::size_t s = points.size();
    std::vector<std::int64_t> shift(s, 0);
    bool laurent = false;
    for (std::size_t i = 0; i < s; ++i) {
        for (auto v : points[i]) shift[i] = std::max<std::int64_t>(shift[i], -v);
        laurent = laurent || shift[i] > 0;
    }

    std::vector<std::string> names;
    for (std::size_t j = 0; j < n; ++j) names.push_back("z" + std::to_string(j + 1));
    if (laurent) names.push_back("w");
    const std::size_t nfront = names.size();
    for (auto name : target->names()) names.push_back(name);
    auto ring = Ring::custom(names);
    const std::size_t total = names.size();

    std::vector<std::size_t> front(nfront), back(s);
    std::iota(front.begin(), front.end(), std::size_t{0});
    std::iota(back.begin(), back.end(), nfront);
    auto joint_order = TermOrder::elimination(total, front, order.embed(back, total));

    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < s; ++i) {
        std::vector<Exponent> e(total, 0);
        for (std::size_t j = 0; j < n; ++j) e[j] = static_cast<Exponent>(points[i][j] + shift[i]);
        if (laurent) e[n] = static_cast<Exponent>(shift[i]);
        gens.push_back(Polynomial::binomial(ring, joint_order, MultiIndex::unit(total, nfront + i), MultiIndex(e)));
    }
    if (laurent) {
        std::vector<Exponent> e(total, 0);
        for (std::size_t j = 0; j <= n; ++j) e[j] = 1;
        gens.push_back(Polynomial::binomial(ring, joint_order, MultiIndex(e), MultiIndex(std::vector<Exponent>(total, 0))));
    }
    return eliminate(Ideal(ring, std::move(gens)), joint_order, front, target, order, options);
}

}  // namespace

std::vector<Coefficient> validate_configuration(const std::vector<LatticePoint>& points) {
    check_shape(points);
    const std::size_t n = points.front().size();
    Matrix m;
    for (const auto& p : points) {
        std::vector<Coefficient> row;
        for (auto v : p) row.emplace_back(static_cast<long>(v));
        row.emplace_back(1);
        m.push_back(std::move(row));
    }
    auto pivots = row_reduce(m, n + 1);
    if (!pivots.empty() && pivots.back() == n)
        throw NotAConfiguration("no vector lambda with lambda . m = 1 for every point");
    std::vector<Coefficient> lambda(n, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) lambda[pivots[r]] = m[r][n];
    return lambda;
}

Configuration make_configuration(std::vector<LatticePoint> points) {
    auto lambda = validate_configuration(points);
    auto repeats = count_repeats(points);
    return {std::move(points), std::move(lambda), repeats};
}

Configuration make_configuration(std::vector<LatticePoint> points, std::vector<Coefficient> lambda) {
    check_shape(points);
    if (lambda.size() != points.front().size()) throw NotAConfiguration("lambda has the wrong length");
    for (const auto& p : points) {
        Coefficient dot = 0;
        for (std::size_t j = 0; j < p.size(); ++j) dot += lambda[j] * static_cast<long>(p[j]);
        if (dot != 1) throw NotAConfiguration("lambda . m != 1 for a point of the configuration");
    }
    auto repeats = count_repeats(points);
    return {std::move(points), std::move(lambda), repeats};
}

std::size_t rank(const std::vector<LatticePoint>& rows) {
    if (rows.empty()) return 0;
    Matrix m;
    for (const auto& r : rows) {
        std::vector<Coefficient> row;
        for (auto v : r) row.emplace_back(static_cast<long>(v));
        m.push_back(std::move(row));
    }
    return row_reduce(m, rows.front().size()).size();
}

LatticePoint toric_image(const Configuration& A, const MultiIndex& u) {
    if (u.size() != A.size()) throw DimensionError("monomial length differs from the number of points");
    LatticePoint out(A.dimension(), 0);
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += static_cast<std::int64_t>(u[i]) * A.points[i][j];
    return out;
}

Ideal toric_ideal(const Configuration& A, const TermOrder& order, const GroebnerOptions& options) {
    check_shape(A.points);
    auto S = Ring::base(A.size());
    if (order.nvars() != A.size()) throw DimensionError("order does not act on K[y1..ys]");
    return toric_kernel(A.points, S, order, options);
}

VeroneseConfiguration veronese_configuration(const Configuration& A, std::size_t d) {
    check_shape(A.points);
    if (d < 1) throw DomainError("d must be at least 1");
    VeroneseConfiguration out;
    out.indices = enumerate_nds(A.size(), d);
    std::map<LatticePoint, std::size_t> position;
    std::vector<LatticePoint> points;
    for (const auto& a : out.indices) {
        LatticePoint p = toric_image(A, a);
        auto [it, inserted] = position.emplace(p, out.distinct.size());
        if (inserted) out.distinct.push_back(p);
        out.dedup.push_back(it->second);
        points.push_back(std::move(p));
    }
    std::vector<Coefficient> lambda = A.lambda;
    for (auto& l : lambda) l /= static_cast<long>(d);
    out.multiset = make_configuration(std::move(points), std::move(lambda));
    return out;
}

ToricCertificate verify_toric_veronese(const Configuration& A, std::size_t d, const ToricOptions& options) {
    const std::size_t s = A.size();
    auto grevlex = TermOrder::grevlex(s);
    Ideal P = toric_ideal(A, grevlex, options.groebner);
    auto basis = P.groebner_basis(grevlex);
    auto omega = find_weight_vector(P, grevlex);
    PullbackOptions pb;
    pb.groebner = options.groebner;
    auto pullback = pullback_homogeneous(P, d, omega, pb);
    auto veronese = veronese_configuration(A, d);

    ToricCertificate cert{.d = d,
                          .toric_basis = basis,
                          .omega = omega,
                          .pullback = std::move(pullback),
                          .veronese = std::move(veronese)};
    const auto& G = cert.pullback.groebner_basis;
    const auto& points = cert.veronese.multiset;

    cert.checks.insert(cert.checks.end(), cert.pullback.certificate.begin(), cert.pullback.certificate.end());

    bool toric_binomial = std::all_of(basis.begin(), basis.end(), [](const Polynomial& g) { return g.is_binomial(); });
    cert.checks.push_back({"toric_basis_binomial", toric_binomial, std::to_string(basis.size()) + " elements"});

    bool binomial = std::all_of(G.begin(), G.end(), [](const Polynomial& g) { return g.is_binomial(); });
    cert.checks.push_back({"pullback_basis_binomial", binomial, std::to_string(G.size()) + " elements"});

    bool images = std::all_of(G.begin(), G.end(), [&](const Polynomial& g) {
        return g.size() == 2 && toric_image(points, g.terms()[0].monomial) == toric_image(points, g.terms()[1].monomial);
    });
    cert.checks.push_back({"equal_toric_images", images, "phi of both monomials agree"});

    cert.rank_a = rank(A.points);
    cert.rank_ad = rank(points.points);
    cert.checks.push_back({"rank_preserved", cert.rank_a == cert.rank_ad,
                           "rank " + std::to_string(cert.rank_a) + " vs " + std::to_string(cert.rank_ad)});

    const auto& dedup = cert.veronese.dedup;
    for (std::size_t i = 0; i < dedup.size(); ++i)
        for (std::size_t j = i + 1; j < dedup.size(); ++j)
            if (dedup[i] == dedup[j]) cert.linear_pairs.emplace_back(i, j);

    if (options.compare_multiset) {
        Ideal direct = toric_kernel(points.points, Ring::veronese(s, d), cert.pullback.order, options.groebner);
        bool same = direct.groebner_basis(cert.pullback.order) == G;
        cert.checks.push_back({"matches_multiset_toric_ideal", same, "P of A^(d) computed directly"});
    }
    return cert;
}

}  // namespace vgb
