#include <cmath>
#include <random>

#include "uflab/error.hpp"
#include "uflab/hermite_basis.hpp"

namespace uflab {
namespace {

// Portable [0, 1) draw; std::uniform_real_distribution is not specified
// bit-for-bit across standard libraries.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * unit(rng); }

Complex box(std::mt19937_64& rng, double half) {
    const double re = uniform(rng, -half, half);
    const double im = uniform(rng, -half, half);
    return {re, im};
}

GaussianMixture draw_mixture(std::mt19937_64& rng, const TestFunctionSpec& spec) {
    std::vector<ComplexGaussianTerm> terms;
    terms.reserve(static_cast<std::size_t>(spec.size));
    const double log_lo = std::log(spec.width_min);
    const double log_hi = std::log(spec.width_max);
    for (int k = 0; k < spec.size; ++k) {
        const double re = std::exp(uniform(rng, log_lo, log_hi));
        const bool chirped = unit(rng) < 0.5;
        const double chirp = uniform(rng, -4.0, 4.0);
        const Complex amplitude = box(rng, spec.amplitude_box);
        terms.push_back(make_term(amplitude, Complex{re, chirped ? chirp * re : 0.0}));
    }
    return GaussianMixture(std::move(terms));
}

HermiteExpansion draw_expansion(std::mt19937_64& rng, const TestFunctionSpec& spec) {
    std::vector<Complex> coeffs;
    coeffs.reserve(static_cast<std::size_t>(spec.size));
    for (int k = 0; k < spec.size; ++k) {
        coeffs.push_back(box(rng, spec.amplitude_box));
    }
    return HermiteExpansion(std::move(coeffs));
}

}  // namespace

Complex evaluate(const TestFunction& f, double x) {
    return std::visit([x](const auto& g) { return g(x); }, f);
}

TestFunction fourier_transform(const TestFunction& f) {
    return std::visit([](const auto& g) -> TestFunction { return fourier_transform(g); }, f);
}

double l2_norm_sq(const TestFunction& f) {
    return std::visit(
        [](const auto& g) {
            if constexpr (std::is_same_v<std::decay_t<decltype(g)>, GaussianMixture>) {
                return mixture_l2_norm_sq(g);
            } else {
                return l2_norm_sq(g);
            }
        },
        f);
}

TestFunction random_schwartz(const TestFunctionSpec& spec) {
    if (spec.size < 1) {
        throw DomainError("random_schwartz: size must be >= 1");
    }
    if (spec.family == TestFamily::hermite && spec.size > kHermiteMaxDegree + 1) {
        throw DomainError("random_schwartz: hermite size exceeds the supported degree");
    }
    if (!(spec.width_min > 0.0) || !(spec.width_max >= spec.width_min) ||
        !std::isfinite(spec.width_max)) {
        throw DomainError("random_schwartz: invalid width range");
    }
    if (!(spec.amplitude_box > 0.0) || !std::isfinite(spec.amplitude_box)) {
        throw DomainError("random_schwartz: invalid amplitude box");
    }

    std::mt19937_64 rng(spec.seed);
    constexpr int kMaxRedraws = 1000;
    for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
        TestFunction f = spec.family == TestFamily::hermite ? TestFunction{draw_expansion(rng, spec)}
                                                            : TestFunction{draw_mixture(rng, spec)};
        if (std::sqrt(l2_norm_sq(f)) >= kMinTestNorm) {
            return f;
        }
    }
    throw DomainError("random_schwartz: could not draw a nonzero function");
}

}  // namespace uflab
