#pragma once

#include <optional>
#include <vector>

#include "vgb/coefficient.hpp"

namespace vgb {

/// coeffs . x >= rhs
struct LinearInequality {
    std::vector<Coefficient> coeffs;
    Coefficient rhs;
};

/// Exact feasibility by Fourier-Motzkin elimination. Returns a rational point
/// (preferring integers during back-substitution) or nullopt if infeasible.
std::optional<std::vector<Coefficient>> fourier_motzkin_solve(const std::vector<LinearInequality>& system,
                                                              std::size_t nvars);

}  // namespace vgb
