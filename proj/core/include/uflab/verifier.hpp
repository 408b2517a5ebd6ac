#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uflab/hermite_basis.hpp"

namespace uflab {

/// Machine-readable outcome of one named check. Slacks are signed so that
/// negative means the inequality (or identity) is violated;
/// pass <=> worst_slack >= -tolerance.
struct CheckResult {
    std::string check_name;
    std::vector<std::pair<std::string, double>> parameters;
    std::size_t samples = 0;
    double worst_slack = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, double>> metrics;
};

/// One-sided rounding allowance for proved inequalities.
inline constexpr double kDefaultSlackTolerance = 1e-9;
/// Quadrature tolerance used inside verification runs.
inline constexpr double kVerifyQuadTol = 1e-10;

struct VerifyOptions {
    double quad_tol = kVerifyQuadTol;
    unsigned threads = 1;
};

/// Seeded mix of both families: even indices are Gaussian mixtures with
/// 1..4 terms, odd indices Hermite expansions of degree 0..8.
std::vector<TestFunction> random_test_suite(std::size_t samples, std::uint64_t seed);

/// n log-spaced points from start to stop inclusive.
std::vector<double> log_grid(double start, double stop, std::size_t count);

/// Closed forms against quadrature: chirp F_q and norms over
/// a in {1.01, 1.1, 2, 10, 100} x q in {1.2, 1.5, 2, 3, 4, 8}, and
/// ||g_c||_2^2 for c in {0.1, 1, 2, 10, 100}. Slack is minus the worst
/// relative discrepancy; `tol` is the allowed discrepancy.
CheckResult verify_closed_forms(double tol, const VerifyOptions& options = {});

/// F_q >= 1 for 1 < q < 2; also records min F_q - 1/B_q.
CheckResult verify_fq_lower_bound(double q, std::size_t samples, std::uint64_t seed, double tol,
                                  const VerifyOptions& options = {});

/// ||f^||_{q'} <= ||f||_q, ||f||_{q'} <= ||f^||_q and the sharp forms with
/// B_q, on ratio scale, for 1 < q <= 2.
CheckResult verify_hausdorff_young(double q, std::size_t samples, std::uint64_t seed, double tol,
                                   const VerifyOptions& options = {});

/// Interpolation ||f||_p <= ||f||_q^theta ||f||_2^{1-theta} for f and f^, and
/// F_{q,p} >= F_q^{(1/q-1/p)/(1/q-1/2)}, for 1 < q < p < 2.
CheckResult verify_interpolation(double q, double p, std::size_t samples, std::uint64_t seed, double tol,
                                 const VerifyOptions& options = {});

/// F_{q,p} >= F_{q,p'} (and the Hausdorff-Young step ||f^||_p <= ||f||_{p'}),
/// for 1 < q < 2 <= p with 1/p + 1/q >= 1. When p' = q the right side is 1.
CheckResult verify_reduction_q_lt_2_le_p(double q, double p, std::size_t samples, std::uint64_t seed,
                                         double tol, const VerifyOptions& options = {});

/// Two-scale asymptotics along an increasing log grid of c.
/// Without p (q > 2): F_q(g_c) strictly increasing for c >= 10 and above
/// fq_gc_lower_bound. With p (1/p + 1/q < 1): F_{q,p}(g_c) decreasing for
/// c >= 10 and the log-log slope over the last 4 points within 0.05 of
/// 2(1/q + 1/p - 1) (q <= 2) or 2(1/p - 1/q) (q > 2).
CheckResult verify_asymptotics(double q, std::optional<double> p, std::span<const double> c_grid, double tol,
                               const VerifyOptions& options = {});

inline constexpr double kSlopeTolerance = 0.05;
inline constexpr std::size_t kSlopeWindow = 4;

/// (sum a)^s >= sum a^s for s >= 1 and (sum a)^s <= max{1, 3^{s-1}} sum a^s,
/// on `samples` seeded nonnegative triples for each s in {0.6, 1, 1.5, 3}.
CheckResult verify_superadditivity(std::size_t samples, std::uint64_t seed, double tol = kDefaultSlackTolerance);

struct SuiteConfig {
    std::uint64_t seed = 42;
    std::optional<std::size_t> samples;  // overrides each check's default sample count
    VerifyOptions options;
};

/// Suite names: all, closed-forms, fq-lower, hy, interp, reduction,
/// asymptotics, superadd. Results come back in a fixed order.
std::vector<CheckResult> run_suite(std::string_view suite, const SuiteConfig& config);

bool all_passed(std::span<const CheckResult> results);

}  // namespace uflab
