#include "uflab/verifier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "uflab/error.hpp"
#include "uflab/functionals.hpp"
#include "uflab/norms.hpp"
#include "uflab/parallel.hpp"

namespace uflab {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

struct PairNorm {
    double f;
    double fhat;
};

PairNorm norms_at(const TestFunction& f, const TestFunction& hat, double r, double tol) {
    return {lq_norm_quad(f, r, tol).value, lq_norm_quad(hat, r, tol).value};
}

CheckResult make_result(std::string name, std::vector<std::pair<std::string, double>> params,
                        std::size_t samples, double worst, double tol, std::uint64_t seed) {
    CheckResult r;
    r.check_name = std::move(name);
    r.parameters = std::move(params);
    r.samples = samples;
    r.worst_slack = worst;
    r.tolerance = tol;
    r.pass = worst >= -tol;
    r.seed = seed;
    return r;
}

double min_of(const std::vector<double>& v) {
    double m = std::numeric_limits<double>::infinity();
    for (double x : v) {
        m = std::min(m, x);
    }
    return m;
}

double fitted_slope(std::span<const double> xs, std::span<const double> ys) {
    const auto n = static_cast<double>(xs.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = std::log(xs[i]);
        const double y = std::log(ys[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw DomainError(message);
    }
}

}  // namespace

std::vector<TestFunction> random_test_suite(std::size_t samples, std::uint64_t seed) {
    std::vector<TestFunction> out;
    out.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        TestFunctionSpec spec;
        spec.seed = splitmix64(seed ^ splitmix64(i));
        if (i % 2 == 0) {
            spec.family = TestFamily::gaussian_mixture;
            spec.size = 1 + static_cast<int>((i / 2) % 4);
        } else {
            spec.family = TestFamily::hermite;
            spec.size = 1 + static_cast<int>((i / 2) % 9);
        }
        out.push_back(random_schwartz(spec));
    }
    return out;
}

std::vector<double> log_grid(double start, double stop, std::size_t count) {
    require(start > 0.0 && stop > start && count >= 2, "log_grid: need 0 < start < stop and count >= 2");
    std::vector<double> out(count);
    const double lo = std::log(start);
    const double hi = std::log(stop);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = std::exp(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
    }
    out.front() = start;
    out.back() = stop;
    return out;
}

CheckResult verify_closed_forms(double tol, const VerifyOptions& options) {
    require(tol >= 0.0, "verify_closed_forms: tol must be nonnegative");
    constexpr std::array<double, 5> kA = {1.01, 1.1, 2.0, 10.0, 100.0};
    constexpr std::array<double, 6> kQ = {1.2, 1.5, 2.0, 3.0, 4.0, 8.0};
    constexpr std::array<double, 5> kC = {0.1, 1.0, 2.0, 10.0, 100.0};

    const std::size_t chirp_cases = kA.size() * kQ.size();
    std::vector<double> discrepancy(chirp_cases + kC.size());
    parallel_for(discrepancy.size(), options.threads, [&](std::size_t i) {
        if (i < chirp_cases) {
            const double a = kA[i / kQ.size()];
            const double q = kQ[i % kQ.size()];
            const auto term = make_chirp(ChirpParams(a));
            const TestFunction f = GaussianMixture(term);
            const auto report = eval_Fq(f, q, EvalMethod::quadrature, options.quad_tol);
            const double closed = closed_form_Fq_chirp(a, q);
            double worst = std::abs(report.value - closed) / closed;
            const double nf = term_lq_norm(term, q);
            const double nh = term_lq_norm(fourier_transform(term), q);
            worst = std::max(worst, std::abs(report.norm_f_q.value - nf) / nf);
            worst = std::max(worst, std::abs(report.norm_fhat_q.value - nh) / nh);
            discrepancy[i] = worst;
        } else {
            const double c = kC[i - chirp_cases];
            const double quad = lq_norm_quad(make_two_scale(TwoScaleParams(c)), 2.0, options.quad_tol).value;
            const double closed = gc_l2_norm_sq(c);
            discrepancy[i] = std::abs(quad * quad - closed) / closed;
        }
    });

    double worst = 0.0;
    for (double d : discrepancy) {
        worst = std::max(worst, d);
    }
    CheckResult r = make_result("closed-forms", {}, discrepancy.size(), -worst, tol, 0);
    r.metrics = {{"worst_relative_discrepancy", worst}};
    return r;
}

CheckResult verify_fq_lower_bound(double q, std::size_t samples, std::uint64_t seed, double tol,
                                  const VerifyOptions& options) {
    require(q > 1.0 && q < 2.0, "verify_fq_lower_bound: requires 1 < q < 2");
    const auto functions = random_test_suite(samples, seed);
    std::vector<double> values(samples);
    parallel_for(samples, options.threads, [&](std::size_t i) {
        values[i] = eval_Fq(functions[i], q, EvalMethod::quadrature, options.quad_tol).value;
    });
    const double min_value = min_of(values);
    const double inverse_beckner = 1.0 / beckner_constant(q);
    CheckResult r = make_result("fq-lower", {{"q", q}}, samples, min_value - 1.0, tol, seed);
    r.metrics = {{"min_value", min_value},
                 {"inverse_beckner", inverse_beckner},
                 {"beckner_slack", min_value - inverse_beckner}};
    return r;
}

CheckResult verify_hausdorff_young(double q, std::size_t samples, std::uint64_t seed, double tol,
                                   const VerifyOptions& options) {
    require(q > 1.0 && q <= 2.0, "verify_hausdorff_young: requires 1 < q <= 2");
    const double qc = conjugate_exponent(q);
    const double beckner = beckner_constant(q);
    const auto functions = random_test_suite(samples, seed);

    std::vector<double> hy(samples), sharp(samples), ratio(samples);
    parallel_for(samples, options.threads, [&](std::size_t i) {
        const TestFunction hat = fourier_transform(functions[i]);
        const PairNorm at_q = norms_at(functions[i], hat, q, options.quad_tol);
        const PairNorm at_qc = norms_at(functions[i], hat, qc, options.quad_tol);
        const double forward = at_qc.fhat / at_q.f;   // ||f^||_{q'} / ||f||_q
        const double reflected = at_qc.f / at_q.fhat;  // ||f||_{q'} / ||f^||_q
        const double worst_ratio = std::max(forward, reflected);
        ratio[i] = worst_ratio;
        hy[i] = 1.0 - worst_ratio;
        sharp[i] = beckner - worst_ratio;
    });
    const double hy_slack = min_of(hy);
    const double sharp_slack = min_of(sharp);
    CheckResult r = make_result("hy", {{"q", q}}, samples, std::min(hy_slack, sharp_slack), tol, seed);
    r.metrics = {{"beckner_constant", beckner},
                 {"max_ratio", *std::max_element(ratio.begin(), ratio.end())},
                 {"hausdorff_young_slack", hy_slack},
                 {"beckner_slack", sharp_slack}};
    return r;
}

CheckResult verify_interpolation(double q, double p, std::size_t samples, std::uint64_t seed, double tol,
                                 const VerifyOptions& options) {
    const double theta = interpolation_exponent(q, p);  // validates 1 < q < p < 2
    const double kappa = (1.0 / q - 1.0 / p) / (1.0 / q - 0.5);
    const auto functions = random_test_suite(samples, seed);

    std::vector<double> direct(samples), dual(samples), functional(samples);
    parallel_for(samples, options.threads, [&](std::size_t i) {
        const TestFunction hat = fourier_transform(functions[i]);
        const PairNorm nq = norms_at(functions[i], hat, q, options.quad_tol);
        const PairNorm np = norms_at(functions[i], hat, p, options.quad_tol);
        const PairNorm n2 = norms_at(functions[i], hat, 2.0, options.quad_tol);
        direct[i] = 1.0 - np.f / (std::pow(nq.f, theta) * std::pow(n2.f, 1.0 - theta));
        dual[i] = 1.0 - np.fhat / (std::pow(nq.fhat, theta) * std::pow(n2.fhat, 1.0 - theta));
        const double fqp = (nq.f * nq.fhat) / (np.f * np.fhat);
        const double fq = (nq.f * nq.fhat) / (n2.f * n2.fhat);
        functional[i] = fqp - std::pow(fq, kappa);
    });
    const double worst = std::min({min_of(direct), min_of(dual), min_of(functional)});
    CheckResult r = make_result("interp", {{"q", q}, {"p", p}}, samples, worst, tol, seed);
    r.metrics = {{"theta", theta},
                 {"functional_exponent", kappa},
                 {"interpolation_slack", min_of(direct)},
                 {"dual_interpolation_slack", min_of(dual)},
                 {"functional_slack", min_of(functional)}};
    return r;
}

CheckResult verify_reduction_q_lt_2_le_p(double q, double p, std::size_t samples, std::uint64_t seed,
                                         double tol, const VerifyOptions& options) {
    require(q > 1.0 && q < 2.0 && p >= 2.0 && std::isfinite(p),
            "verify_reduction: requires 1 < q < 2 <= p < inf");
    require(1.0 / p + 1.0 / q >= 1.0 - 1e-15, "verify_reduction: requires 1/p + 1/q >= 1");
    const double pc = conjugate_exponent(p);
    const bool boundary = std::abs(pc - q) <= 1e-12 * q;
    const auto functions = random_test_suite(samples, seed);

    std::vector<double> reduction(samples), hy(samples);
    parallel_for(samples, options.threads, [&](std::size_t i) {
        const TestFunction hat = fourier_transform(functions[i]);
        const PairNorm nq = norms_at(functions[i], hat, q, options.quad_tol);
        const PairNorm np = norms_at(functions[i], hat, p, options.quad_tol);
        const PairNorm npc = boundary ? nq : norms_at(functions[i], hat, pc, options.quad_tol);
        const double fqp = (nq.f * nq.fhat) / (np.f * np.fhat);
        const double fqpc = boundary ? 1.0 : (nq.f * nq.fhat) / (npc.f * npc.fhat);
        reduction[i] = fqp - fqpc;
        hy[i] = std::min(1.0 - np.fhat / npc.f, 1.0 - np.f / npc.fhat);
    });
    const double worst = std::min(min_of(reduction), min_of(hy));
    CheckResult r = make_result("reduction", {{"q", q}, {"p", p}}, samples, worst, tol, seed);
    r.metrics = {{"conjugate_p", pc},
                 {"boundary_case", boundary ? 1.0 : 0.0},
                 {"reduction_slack", min_of(reduction)},
                 {"hausdorff_young_slack", min_of(hy)}};
    return r;
}

CheckResult verify_asymptotics(double q, std::optional<double> p, std::span<const double> c_grid, double tol,
                               const VerifyOptions& options) {
    require(c_grid.size() >= kSlopeWindow, "verify_asymptotics: grid needs at least 4 points");
    for (std::size_t i = 0; i + 1 < c_grid.size(); ++i) {
        require(c_grid[i] > 0.0 && c_grid[i + 1] > c_grid[i], "verify_asymptotics: grid must increase");
    }
    if (p) {
        require(q > 1.0 && *p > q && 1.0 / *p + 1.0 / q < 1.0,
                "verify_asymptotics: vanishing mode requires 1 < q < p and 1/p + 1/q < 1");
    } else {
        require(q > 2.0, "verify_asymptotics: divergence mode requires q > 2");
    }

    std::vector<double> values(c_grid.size());
    parallel_for(c_grid.size(), options.threads, [&](std::size_t i) {
        const TestFunction g = make_two_scale(TwoScaleParams(c_grid[i]));
        values[i] = p ? eval_Fqp(g, q, *p, EvalMethod::quadrature, options.quad_tol).value
                      : eval_Fq(g, q, EvalMethod::quadrature, options.quad_tol).value;
    });

    double trend = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < c_grid.size(); ++i) {
        if (c_grid[i] < 10.0) {
            continue;
        }
        const double step = (values[i + 1] - values[i]) / values[i];
        trend = std::min(trend, p ? -step : step);
    }

    CheckResult r;
    if (!p) {
        double bound_slack = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < c_grid.size(); ++i) {
            bound_slack = std::min(bound_slack, values[i] - fq_gc_lower_bound(c_grid[i], q));
        }
        // strict increase: a zero step counts as a violation
        const double strict = trend > 0.0 ? trend : std::min(trend, -2.0 * tol - 1e-300);
        r = make_result("asymptotics", {{"q", q}}, c_grid.size(), std::min(strict, bound_slack), tol, 0);
        r.metrics = {{"trend_slack", trend},
                     {"bound_slack", bound_slack},
                     {"last_c", c_grid.back()},
                     {"last_value", values.back()},
                     {"last_bound", fq_gc_lower_bound(c_grid.back(), q)}};
    } else {
        const std::size_t first = c_grid.size() - kSlopeWindow;
        const double slope =
            fitted_slope(c_grid.subspan(first), std::span<const double>(values).subspan(first));
        const double predicted = q <= 2.0 ? 2.0 * (1.0 / q + 1.0 / *p - 1.0) : 2.0 * (1.0 / *p - 1.0 / q);
        const double slope_slack = kSlopeTolerance - std::abs(slope - predicted);
        r = make_result("asymptotics", {{"q", q}, {"p", *p}}, c_grid.size(), std::min(trend, slope_slack), tol, 0);
        r.metrics = {{"trend_slack", trend},
                     {"slope", slope},
                     {"predicted_slope", predicted},
                     {"slope_slack", slope_slack},
                     {"last_c", c_grid.back()},
                     {"last_value", values.back()}};
    }
    return r;
}

CheckResult verify_superadditivity(std::size_t samples, std::uint64_t seed, double tol) {
    constexpr std::array<double, 4> kS = {0.6, 1.0, 1.5, 3.0};
    std::mt19937_64 rng(seed);
    auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    double forward = std::numeric_limits<double>::infinity();
    double reversed = std::numeric_limits<double>::infinity();
    for (double s : kS) {
        const double factor = std::max(1.0, std::pow(3.0, s - 1.0));
        for (std::size_t i = 0; i < samples; ++i) {
            const std::array<double, 3> a = {unit(), unit(), unit()};
            const double sum = a[0] + a[1] + a[2];
            const double lhs = std::pow(sum, s);
            const double rhs = std::pow(a[0], s) + std::pow(a[1], s) + std::pow(a[2], s);
            if (s >= 1.0) {
                forward = std::min(forward, lhs - rhs);
            }
            reversed = std::min(reversed, factor * rhs - lhs);
        }
    }
    CheckResult r = make_result("superadd", {}, samples * kS.size(), std::min(forward, reversed), tol, seed);
    r.metrics = {{"superadditive_slack", forward}, {"reversed_slack", reversed}};
    return r;
}

std::vector<CheckResult> run_suite(std::string_view suite, const SuiteConfig& config) {
    static constexpr std::array<std::string_view, 8> kSuites = {
        "all", "closed-forms", "fq-lower", "hy", "interp", "reduction", "asymptotics", "superadd"};
    if (std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end()) {
        throw DomainError("unknown verify suite '" + std::string(suite) + "'");
    }
    const bool all = suite == "all";
    auto n = [&config](std::size_t fallback) { return config.samples.value_or(fallback); };
    const auto& opt = config.options;
    const std::uint64_t seed = config.seed;
    const double tol = kDefaultSlackTolerance;

    std::vector<CheckResult> out;
    if (all || suite == "closed-forms") {
        out.push_back(verify_closed_forms(1e-8, opt));
    }
    if (all || suite == "fq-lower") {
        out.push_back(verify_fq_lower_bound(1.5, n(500), seed, tol, opt));
    }
    if (all || suite == "hy") {
        out.push_back(verify_hausdorff_young(4.0 / 3.0, n(200), seed, tol, opt));
        out.push_back(verify_hausdorff_young(1.5, n(200), seed, tol, opt));
    }
    if (all || suite == "interp") {
        out.push_back(verify_interpolation(1.2, 1.5, n(200), seed, tol, opt));
    }
    if (all || suite == "reduction") {
        out.push_back(verify_reduction_q_lt_2_le_p(1.3, 3.0, n(200), seed, tol, opt));
        out.push_back(verify_reduction_q_lt_2_le_p(1.5, 3.0, n(200), seed, tol, opt));
    }
    if (all || suite == "asymptotics") {
        const auto divergence = log_grid(10.0, 1e4, 9);
        const auto vanishing = log_grid(10.0, 1e6, 11);
        out.push_back(verify_asymptotics(4.0, std::nullopt, divergence, tol, opt));
        out.push_back(verify_asymptotics(3.0, 6.0, vanishing, tol, opt));
        out.push_back(verify_asymptotics(1.5, 4.0, vanishing, tol, opt));
    }
    if (all || suite == "superadd") {
        out.push_back(verify_superadditivity(n(10000), seed, tol));
    }
    return out;
}

bool all_passed(std::span<const CheckResult> results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

}  // namespace uflab
