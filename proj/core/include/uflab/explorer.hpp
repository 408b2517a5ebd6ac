#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uflab/functionals.hpp"

namespace uflab {

enum class Family { chirp, twoscale };

std::string_view to_string(Family family);
Family parse_family(std::string_view text);

enum class GridScale { linear, log };

/// "start:stop:count[log|lin]", linear when the suffix is absent.
struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    std::size_t count = 0;
    GridScale scale = GridScale::linear;
};

GridSpec parse_grid(std::string_view text);
std::string to_string(const GridSpec& grid);
std::vector<double> grid_points(const GridSpec& grid);

/// One evaluation of F_q (p = 2) or F_{q,p}. `param` is t = a^2 for the
/// chirp family and c for the two-scale family.
struct SweepRow {
    Family family = Family::chirp;
    double param = 0.0;
    double q = 2.0;
    double p = 2.0;
    double norm_f_q = 0.0;
    double norm_fhat_q = 0.0;
    double norm_f_p = 0.0;
    double norm_fhat_p = 0.0;
    double value = 0.0;
    EvalMethod method = EvalMethod::closed_form;
    /// Relative: 0 for closed-form rows, the closed/quadrature discrepancy
    /// for spot-checked rows, summed norm error estimates for quadrature rows.
    double err_est = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
};

inline constexpr double kSweepTol = 1e-8;
/// Every 8th chirp row (starting with the first) is also done by quadrature.
inline constexpr std::size_t kSpotCheckStride = 8;

struct SweepOptions {
    double tol = kSweepTol;
    unsigned threads = 1;
};

SweepResult sweep(Family family, double q, std::optional<double> p, const GridSpec& grid,
                  const SweepOptions& options = {});
SweepResult sweep(Family family, double q, std::optional<double> p, std::span<const double> params,
                  const SweepOptions& options = {});

struct IntervalReport {
    double q = 2.0;
    std::optional<double> p;
    double observed_min = 0.0;
    double observed_max = 0.0;
    bool divergence_flag = false;
    bool vanishing_flag = false;
    std::optional<double> proved_lower_bound;
    std::size_t evaluations = 0;
};

struct IntervalBudget {
    std::size_t chirp_points = 64;
    std::size_t twoscale_points = 33;
    double tol = kSweepTol;
    unsigned threads = 1;
};

/// Chirp sweep over t = 1 + s with s log-spaced in [3e-6, 1e8], two-scale
/// sweep over c log-spaced in [1, 1e4], plus the asymptotic trend checks.
/// Flags record trend evidence only; the envelope is what was observed.
IntervalReport estimate_image_interval(double q, std::optional<double> p, const IntervalBudget& budget = {});

}  // namespace uflab
