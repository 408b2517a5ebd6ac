#include "uflab/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "uflab/error.hpp"
#include "uflab/functionals.hpp"
#include "uflab/parallel.hpp"

namespace uflab {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t per_term(const MixtureFamilySpec& f, std::size_t k) {
    const std::size_t amp = k == 0 ? 0 : (f.chirp ? 2 : 1);
    return amp + (f.chirp ? 2 : 1);
}

}  // namespace

std::size_t search_dimension(const MixtureFamilySpec& family) {
    if (family.terms < 1) {
        throw DomainError("minimize: need at least one term");
    }
    std::size_t n = 0;
    for (std::size_t k = 0; k < static_cast<std::size_t>(family.terms); ++k) {
        n += per_term(family, k);
    }
    return n;
}

GaussianMixture decode_mixture(const MixtureFamilySpec& family, const std::vector<double>& x) {
    if (x.size() != search_dimension(family)) {
        throw DomainError("decode_mixture: wrong parameter count");
    }
    std::vector<ComplexGaussianTerm> terms;
    std::size_t i = 0;
    for (int k = 0; k < family.terms; ++k) {
        Complex amp{1.0, 0.0};
        if (k > 0) {
            amp = {x[i++], 0.0};
            if (family.chirp) {
                amp.imag(x[i++]);
            }
        }
        const double re = std::exp(x[i++]);
        const double im = family.chirp ? 4.0 * re * std::tanh(x[i++]) : 0.0;
        terms.push_back(make_term(amp, {re, im}));
    }
    return GaussianMixture(std::move(terms));
}

SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                          std::vector<double> start, const SimplexOptions& options, std::mt19937_64& rng) {
    const std::size_t n = start.size();
    if (n == 0) {
        throw DomainError("nelder_mead: empty start point");
    }
    SimplexResult out;
    auto eval = [&](const std::vector<double>& x) {
        ++out.evaluations;
        const double v = objective(x);
        return std::isfinite(v) ? v : kInf;
    };

    std::vector<std::vector<double>> simplex(n + 1, start);
    std::vector<double> values(n + 1);
    values[0] = eval(start);
    for (std::size_t attempt = 0; !std::isfinite(values[0]) && attempt < options.resample_attempts; ++attempt) {
        for (std::size_t j = 0; j < n; ++j) {
            simplex[0][j] = start[j] + options.scale * (2.0 * unit(rng) - 1.0);
        }
        values[0] = eval(simplex[0]);
    }
    start = simplex[0];
    for (auto& v : simplex) {
        v = start;
    }
    if (!std::isfinite(values[0])) {
        throw DomainError("nelder_mead: objective is not finite at the start point");
    }
    for (std::size_t i = 1; i <= n; ++i) {
        simplex[i][i - 1] += options.scale;
        values[i] = eval(simplex[i]);
        for (std::size_t attempt = 0; !std::isfinite(values[i]) && attempt < options.resample_attempts; ++attempt) {
            simplex[i] = start;
            for (double& c : simplex[i]) {
                c += options.scale * (2.0 * unit(rng) - 1.0);
            }
            values[i] = eval(simplex[i]);
        }
    }

    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), trial(n), trial2(n);
    auto along = [&](double t, std::vector<double>& dst) {
        const auto& worst = simplex[order[n]];
        for (std::size_t j = 0; j < n; ++j) {
            dst[j] = centroid[j] + t * (worst[j] - centroid[j]);
        }
    };

    for (; out.iterations < options.max_iter; ++out.iterations) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        {
            std::vector<std::vector<double>> s(n + 1);
            std::vector<double> v(n + 1);
            for (std::size_t i = 0; i <= n; ++i) {
                s[i] = simplex[order[i]];
                v[i] = values[order[i]];
            }
            simplex.swap(s);
            values.swap(v);
            std::iota(order.begin(), order.end(), 0);
        }
        if (std::isfinite(values[n]) && values[n] - values[0] <= options.ftol * std::abs(values[0])) {
            out.converged = true;
            break;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                centroid[j] += simplex[i][j] / static_cast<double>(n);
            }
        }

        along(-1.0, trial);
        const double fr = eval(trial);
        if (fr < values[0]) {
            along(-2.0, trial2);
            const double fe = eval(trial2);
            if (fe < fr) {
                simplex[n] = trial2;
                values[n] = fe;
            } else {
                simplex[n] = trial;
                values[n] = fr;
            }
            continue;
        }
        if (fr < values[n - 1]) {
            simplex[n] = trial;
            values[n] = fr;
            continue;
        }
        const bool outside = fr < values[n];
        along(outside ? -0.5 : 0.5, trial2);
        const double fc = eval(trial2);
        if (fc < std::min(fr, values[n])) {
            simplex[n] = trial2;
            values[n] = fc;
            continue;
        }
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                simplex[i][j] = simplex[0][j] + 0.5 * (simplex[i][j] - simplex[0][j]);
            }
            values[i] = eval(simplex[i]);
        }
    }

    const auto best = static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
    out.x = simplex[best];
    out.value = values[best];
    return out;
}

MinimizeReport minimize_Fq(double q, const MixtureFamilySpec& family, const OptimizerConfig& config) {
    if (!(q >= kMinExponent && q <= kMaxExponent) || q == 2.0) {
        throw DomainError("minimize: need q in [1.001, 64] with q != 2");
    }
    const std::size_t dim = search_dimension(family);
    if (dim > kMaxSearchDimension) {
        throw DomainError("minimize: search dimension " + std::to_string(dim) + " exceeds the cap of 12");
    }
    if (config.restarts < 1) {
        throw DomainError("minimize: need at least one restart");
    }

    auto objective = [&](const std::vector<double>& x) {
        std::size_t i = 0;
        for (int k = 0; k < family.terms; ++k) {
            i += k == 0 ? 0 : (family.chirp ? 2 : 1);
            if (std::abs(x[i]) > kLogWidthBound) {
                return kInf;
            }
            i += family.chirp ? 2 : 1;
        }
        try {
            return eval_Fq(decode_mixture(family, x), q, EvalMethod::quadrature, config.tol).value;
        } catch (const Error&) {
            return kInf;
        }
    };

    SimplexOptions sopts;
    sopts.max_iter = config.max_iter;
    sopts.scale = config.simplex_scale;

    std::vector<SimplexResult> runs(config.restarts);
    parallel_for(config.restarts, config.threads, [&](std::size_t r) {
        std::mt19937_64 rng(mix(config.seed ^ mix(r)));
        std::vector<double> start(dim, 0.0);
        if (r > 0) {
            std::size_t i = 0;
            for (int k = 0; k < family.terms; ++k) {
                for (std::size_t j = 0; j < per_term(family, static_cast<std::size_t>(k)); ++j, ++i) {
                    const bool log_width = j == (k == 0 ? 0 : (family.chirp ? 2 : 1));
                    start[i] = log_width ? 2.0 * (2.0 * unit(rng) - 1.0) : 2.0 * unit(rng) - 1.0;
                }
            }
        }
        runs[r] = nelder_mead(objective, start, sopts, rng);
    });

    MinimizeReport rep;
    rep.q = q;
    rep.family = family;
    rep.restarts = config.restarts;
    rep.best_value = kInf;
    for (std::size_t r = 0; r < runs.size(); ++r) {
        rep.iterations += runs[r].iterations;
        rep.evaluations += runs[r].evaluations;
        if (runs[r].value < rep.best_value) {
            rep.best_value = runs[r].value;
            rep.best_parameters = runs[r].x;
            rep.best_restart = r;
            rep.converged = runs[r].converged;
        }
    }
    rep.comparison_gaussian = std::sqrt(2.0) * std::pow(q, -1.0 / q);
    if (q < 2.0) {
        rep.comparison_inverse_beckner = 1.0 / beckner_constant(q);
    }
    return rep;
}

}  // namespace uflab
