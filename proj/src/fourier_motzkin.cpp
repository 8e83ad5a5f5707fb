#include "vgb/fourier_motzkin.hpp"

#include <algorithm>
#include <set>

#include "vgb/errors.hpp"

namespace vgb {

namespace {

// Scales so the first nonzero coefficient has magnitude 1; keeps duplicates out.
LinearInequality normalized(LinearInequality row) {
    for (const auto& c : row.coeffs) {
        if (c != 0) {
            Coefficient scale = abs(c);
            for (auto& v : row.coeffs) v /= scale;
            row.rhs /= scale;
            break;
        }
    }
    return row;
}

std::string key(const LinearInequality& row) {
    std::string k;
    for (const auto& c : row.coeffs) k += c.get_str() + ",";
    return k + ">=" + row.rhs.get_str();
}

Coefficient ceil_of(const Coefficient& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Coefficient(r);
}

}  // namespace

std::optional<std::vector<Coefficient>> fourier_motzkin_solve(const std::vector<LinearInequality>& system,
                                                              std::size_t nvars) {
    for (const auto& row : system)
        if (row.coeffs.size() != nvars) throw DimensionError("inequality of the wrong length");

    // stages[k] holds constraints involving only x_0..x_k.
    std::vector<std::vector<LinearInequality>> stages(nvars + 1);
    std::vector<LinearInequality> current;
    std::set<std::string> seen;
    for (const auto& row : system) {
        auto n = normalized(row);
        if (seen.insert(key(n)).second) current.push_back(std::move(n));
    }
    for (std::size_t k = nvars; k-- > 0;) {
        stages[k] = current;
        std::vector<LinearInequality> next, pos, neg;
        for (auto& row : current) {
            if (row.coeffs[k] > 0) pos.push_back(row);
            else if (row.coeffs[k] < 0) neg.push_back(row);
            else next.push_back(row);
        }
        std::set<std::string> keys;
        for (const auto& row : next) keys.insert(key(row));
        for (const auto& p : pos) {
            for (const auto& n : neg) {
                Coefficient a = p.coeffs[k], b = -n.coeffs[k];
                LinearInequality combo{std::vector<Coefficient>(nvars), b * p.rhs + a * n.rhs};
                for (std::size_t j = 0; j < nvars; ++j) combo.coeffs[j] = b * p.coeffs[j] + a * n.coeffs[j];
                combo.coeffs[k] = 0;
                combo = normalized(std::move(combo));
                if (keys.insert(key(combo)).second) next.push_back(std::move(combo));
            }
        }
        current = std::move(next);
    }
    for (const auto& row : current)
        if (0 < row.rhs) return std::nullopt;

    std::vector<Coefficient> x(nvars, 0);
    for (std::size_t k = 0; k < nvars; ++k) {
        std::optional<Coefficient> lo, hi;
        for (const auto& row : stages[k]) {
            if (row.coeffs[k] == 0) continue;
            Coefficient rest = row.rhs;
            for (std::size_t j = 0; j < k; ++j) rest -= row.coeffs[j] * x[j];
            Coefficient bound = rest / row.coeffs[k];
            if (row.coeffs[k] > 0) {
                if (!lo || bound > *lo) lo = bound;
            } else {
                if (!hi || bound < *hi) hi = bound;
            }
        }
        Coefficient pick = lo ? *lo : (hi ? std::min(*hi, Coefficient(0)) : Coefficient(0));
        Coefficient rounded = ceil_of(pick);
        if (!hi || rounded <= *hi) pick = rounded;
        x[k] = pick;
    }
    return x;
}

}  // namespace vgb
