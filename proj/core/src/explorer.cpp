#include "uflab/explorer.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "uflab/error.hpp"
#include "uflab/parallel.hpp"
#include "uflab/verifier.hpp"

namespace uflab {
namespace {

double parse_double(std::string_view text, std::string_view what) {
    double v = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(v)) {
        throw DomainError("grid: bad " + std::string(what) + " '" + std::string(text) + "'");
    }
    return v;
}

TestFunction family_function(Family family, double param) {
    if (family == Family::chirp) {
        return GaussianMixture(make_chirp(ChirpParams::from_t(param)));
    }
    return make_two_scale(TwoScaleParams(param));
}

double relative_error(const NormEstimate& n) { return n.value > 0.0 ? n.abs_error_estimate / n.value : 0.0; }

SweepRow evaluate_row(Family family, double param, double q, std::optional<double> p, EvalMethod method,
                      double tol) {
    const TestFunction f = family_function(family, param);
    const FunctionalReport r = p ? eval_Fqp(f, q, *p, method, tol) : eval_Fq(f, q, method, tol);
    SweepRow row;
    row.family = family;
    row.param = param;
    row.q = r.q;
    row.p = r.p;
    row.norm_f_q = r.norm_f_q.value;
    row.norm_fhat_q = r.norm_fhat_q.value;
    row.norm_f_p = r.norm_f_p.value;
    row.norm_fhat_p = r.norm_fhat_p.value;
    row.value = r.value;
    row.method = r.method;
    if (method == EvalMethod::both) {
        row.err_est = r.discrepancy.value_or(0.0);
    } else if (method == EvalMethod::quadrature) {
        row.err_est = relative_error(r.norm_f_q) + relative_error(r.norm_fhat_q) + relative_error(r.norm_f_p) +
                      relative_error(r.norm_fhat_p);
    }
    return row;
}

// +1 strictly increasing, -1 strictly decreasing, 0 otherwise.
int direction(const std::vector<SweepRow>& rows) {
    bool up = true;
    bool down = true;
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        up = up && rows[i + 1].value > rows[i].value;
        down = down && rows[i + 1].value < rows[i].value;
    }
    return up ? 1 : (down ? -1 : 0);
}

}  // namespace

std::string_view to_string(Family family) { return family == Family::chirp ? "chirp" : "twoscale"; }

Family parse_family(std::string_view text) {
    if (text == "chirp") {
        return Family::chirp;
    }
    if (text == "twoscale") {
        return Family::twoscale;
    }
    throw DomainError("unknown family '" + std::string(text) + "'");
}

GridSpec parse_grid(std::string_view text) {
    const auto first = text.find(':');
    const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
    if (second == std::string_view::npos) {
        throw DomainError("grid: expected start:stop:count[log|lin], got '" + std::string(text) + "'");
    }
    GridSpec g;
    g.start = parse_double(text.substr(0, first), "start");
    g.stop = parse_double(text.substr(first + 1, second - first - 1), "stop");
    std::string_view tail = text.substr(second + 1);
    if (tail.ends_with("log")) {
        g.scale = GridScale::log;
        tail.remove_suffix(3);
    } else if (tail.ends_with("lin")) {
        tail.remove_suffix(3);
    }
    unsigned long long count = 0;
    const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), count);
    if (tail.empty() || ec != std::errc() || ptr != tail.data() + tail.size()) {
        throw DomainError("grid: bad count '" + std::string(tail) + "'");
    }
    g.count = static_cast<std::size_t>(count);
    if (!(g.start < g.stop) || g.count < 2) {
        throw DomainError("grid: need start < stop and count >= 2");
    }
    if (g.scale == GridScale::log && g.start <= 0.0) {
        throw DomainError("grid: log grid needs start > 0");
    }
    return g;
}

std::string to_string(const GridSpec& grid) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%.17g:%.17g:%zu%s", grid.start, grid.stop, grid.count,
                  grid.scale == GridScale::log ? "log" : "lin");
    return buf;
}

std::vector<double> grid_points(const GridSpec& grid) {
    if (grid.scale == GridScale::log) {
        return log_grid(grid.start, grid.stop, grid.count);
    }
    if (!(grid.start < grid.stop) || grid.count < 2) {
        throw DomainError("grid: need start < stop and count >= 2");
    }
    std::vector<double> out(grid.count);
    const double step = (grid.stop - grid.start) / static_cast<double>(grid.count - 1);
    for (std::size_t i = 0; i < grid.count; ++i) {
        out[i] = grid.start + step * static_cast<double>(i);
    }
    out.back() = grid.stop;
    return out;
}

SweepResult sweep(Family family, double q, std::optional<double> p, const GridSpec& grid,
                  const SweepOptions& options) {
    const auto points = grid_points(grid);
    return sweep(family, q, p, points, options);
}

SweepResult sweep(Family family, double q, std::optional<double> p, std::span<const double> params,
                  const SweepOptions& options) {
    for (std::size_t i = 0; i + 1 < params.size(); ++i) {
        if (!(params[i] < params[i + 1])) {
            throw DomainError("sweep: parameters must be strictly increasing");
        }
    }
    // validate every parameter before doing any work
    for (double v : params) {
        (void)family_function(family, v);
    }
    SweepResult result;
    result.rows.resize(params.size());
    parallel_for(params.size(), options.threads, [&](std::size_t i) {
        EvalMethod method = EvalMethod::quadrature;
        if (family == Family::chirp) {
            method = i % kSpotCheckStride == 0 ? EvalMethod::both : EvalMethod::closed_form;
        }
        result.rows[i] = evaluate_row(family, params[i], q, p, method, options.tol);
    });
    return result;
}

IntervalReport estimate_image_interval(double q, std::optional<double> p, const IntervalBudget& budget) {
    if (!(q >= kMinExponent && q <= kMaxExponent) || (p && !(*p > q && *p <= kMaxExponent))) {
        throw DomainError("estimate_image_interval: need q in [1.001, 64] and q < p <= 64");
    }
    if (budget.chirp_points < 2 || budget.twoscale_points < 2) {
        throw DomainError("estimate_image_interval: budget needs at least 2 points per family");
    }
    const SweepOptions opts{budget.tol, budget.threads};

    auto s = log_grid(3e-6, 1e8, budget.chirp_points);
    for (double& v : s) {
        v += 1.0;
    }
    const SweepResult chirp = sweep(Family::chirp, q, p, s, opts);
    const auto c = log_grid(1.0, 1e4, budget.twoscale_points);
    const SweepResult two = sweep(Family::twoscale, q, p, c, opts);

    IntervalReport r;
    r.q = q;
    r.p = p;
    r.observed_min = std::numeric_limits<double>::infinity();
    r.observed_max = -std::numeric_limits<double>::infinity();
    for (const auto* rows : {&chirp.rows, &two.rows}) {
        for (const auto& row : *rows) {
            r.observed_min = std::min(r.observed_min, row.value);
            r.observed_max = std::max(r.observed_max, row.value);
        }
    }
    r.evaluations = chirp.rows.size() + two.rows.size();

    // chirp: value ~ ((t+1)/(t-1))^e as t -> 1+, e = 1/q - 1/p
    const double e = 1.0 / q - 1.0 / p.value_or(2.0);
    const int trend = direction(chirp.rows);
    const bool chirp_diverges = e > 0.0 && trend == -1;
    const bool chirp_vanishes = e < 0.0 && trend == 1;

    const VerifyOptions vopts{budget.tol, budget.threads};
    if (!p) {
        r.vanishing_flag = chirp_vanishes;
        if (q > 2.0) {
            const auto grid = log_grid(10.0, 1e4, 9);
            r.divergence_flag = verify_asymptotics(q, std::nullopt, grid, kDefaultSlackTolerance, vopts).pass;
            r.evaluations += grid.size();
        } else {
            r.divergence_flag = chirp_diverges;
        }
        if (q < 2.0) {
            r.proved_lower_bound = 1.0 / beckner_constant(q);
        }
    } else {
        r.divergence_flag = chirp_diverges;
        if (1.0 / *p + 1.0 / q < 1.0) {
            const auto grid = log_grid(10.0, 1e6, 11);
            r.vanishing_flag = verify_asymptotics(q, *p, grid, kDefaultSlackTolerance, vopts).pass;
            r.evaluations += grid.size();
        } else {
            r.vanishing_flag = chirp_vanishes;
        }
        if (q < 2.0 && 1.0 / *p + 1.0 / q >= 1.0) {
            r.proved_lower_bound = 1.0;
        }
    }
    return r;
}

}  // namespace uflab
