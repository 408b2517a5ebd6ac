#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "uflab/gaussian_core.hpp"

namespace uflab {

/// Search family for minimize_Fq: `terms` Gaussians with real amplitudes and
/// real widths, or with complex amplitudes and chirped widths when `chirp`.
struct MixtureFamilySpec {
    int terms = 2;
    bool chirp = false;
};

inline constexpr std::size_t kMaxSearchDimension = 12;
/// Log-widths are confined to [-4, 4].
inline constexpr double kLogWidthBound = 4.0;

/// Number of free coordinates: the first amplitude is pinned to 1.
std::size_t search_dimension(const MixtureFamilySpec& family);

/// Coordinates per term k: [re amplitude (k > 0), im amplitude (chirp, k > 0),
/// log Re z, chirp u with Im z = 4 Re z tanh(u)].
GaussianMixture decode_mixture(const MixtureFamilySpec& family, const std::vector<double>& x);

struct OptimizerConfig {
    std::size_t restarts = 16;
    std::size_t max_iter = 400;
    double simplex_scale = 0.5;
    std::uint64_t seed = 42;
    double tol = 1e-10;  // quadrature tolerance for each evaluation
    unsigned threads = 1;
};

struct MinimizeReport {
    double q = 0.0;
    MixtureFamilySpec family;
    double best_value = 0.0;
    std::vector<double> best_parameters;
    std::size_t best_restart = 0;
    std::size_t iterations = 0;  // summed over restarts
    std::size_t evaluations = 0;
    std::size_t restarts = 0;
    bool converged = false;  // the restart that produced best_value
    double comparison_one = 1.0;
    std::optional<double> comparison_inverse_beckner;  // 1/B_q for q < 2
    double comparison_gaussian = 0.0;                  // sqrt(2) q^{-1/q}
};

struct SimplexResult {
    std::vector<double> x;
    double value = 0.0;
    std::size_t iterations = 0;
    std::size_t evaluations = 0;
    bool converged = false;
};

struct SimplexOptions {
    std::size_t max_iter = 400;
    double ftol = 1e-9;  // converged when the relative spread of vertex values is below this
    double scale = 0.5;
    std::size_t resample_attempts = 20;
};

/// Nelder-Mead with standard coefficients (1, 2, 1/2, 1/2). Non-finite values
/// at the start point or initial vertices are resampled with `rng`; later
/// non-finite values act as +inf.
SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                          std::vector<double> start, const SimplexOptions& options, std::mt19937_64& rng);

/// Restart 0 starts at the plain Gaussian (other amplitudes 0, log-widths 0);
/// the rest start at seeded random points. Deterministic for a fixed seed
/// and independent of the thread count.
MinimizeReport minimize_Fq(double q, const MixtureFamilySpec& family, const OptimizerConfig& config = {});

}  // namespace uflab
