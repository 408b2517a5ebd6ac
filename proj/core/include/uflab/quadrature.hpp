#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace uflab {

inline constexpr std::size_t kPanelBudget = 100000;

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;
    std::size_t panels = 0;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration of `f` over the
/// union of panels delimited by the sorted `breakpoints` (at least two).
///
/// Panels are bisected greedily, largest error estimate first, until the
/// summed estimate is <= max(abs_tol, rel_tol * |value|). The refinement
/// sequence is fully deterministic, so tightening the tolerance only
/// continues the same sequence further.
///
/// Throws ToleranceNotAchieved when the panel budget is exhausted.
QuadratureResult integrate(const std::function<double(double)>& f,
                           std::span<const double> breakpoints,
                           double abs_tol,
                           double rel_tol,
                           std::size_t max_panels = kPanelBudget);

}  // namespace uflab
