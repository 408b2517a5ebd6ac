#include "uflab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <variant>

#include "uflab/error.hpp"
#include "uflab/quadrature.hpp"

namespace uflab {
namespace {

// log(erfc(u)) without underflow for large u.
double log_erfc(double u) {
    if (u < 25.0) {
        return std::log(std::erfc(u));
    }
    // erfc(u) = exp(-u^2) / (u sqrt(pi)) * (1 - 1/(2u^2) + ...)
    const double inv = 1.0 / (2.0 * u * u);
    return -u * u - std::log(u * std::sqrt(std::numbers::pi)) + std::log1p(-inv + 3.0 * inv * inv);
}

double log_tail_bound(const Envelope& env, double q, double radius) {
    const double wq = env.width_floor * q;
    return q * std::log(env.amplitude) - 0.5 * std::log(wq) +
           log_erfc(radius * std::sqrt(std::numbers::pi * wq));
}

void require_exponent(double q) {
    if (!std::isfinite(q) || !(q >= 1.0)) {
        throw DomainError("lq norm: q must be a finite exponent >= 1");
    }
}

std::vector<double> breakpoints(const Envelope& env, double q, double radius) {
    double smallest_scale = radius;
    for (double w : env.widths) {
        smallest_scale = std::min(smallest_scale, 1.0 / std::sqrt(q * w));
    }
    std::vector<double> positive;
    for (double x = smallest_scale / 16.0; x < radius; x *= 2.0) {
        positive.push_back(x);
    }
    positive.push_back(radius);

    std::vector<double> points;
    points.reserve(2 * positive.size() + 1);
    for (auto it = positive.rbegin(); it != positive.rend(); ++it) {
        points.push_back(-*it);
    }
    points.push_back(0.0);
    points.insert(points.end(), positive.begin(), positive.end());
    return points;
}

}  // namespace

std::string_view to_string(NormMethod method) {
    switch (method) {
        case NormMethod::closed_form: return "closed-form";
        case NormMethod::quadrature: return "quadrature";
        case NormMethod::dft: return "dft";
    }
    return "unknown";
}

Envelope envelope(const GaussianMixture& f) {
    Envelope env{0.0, std::numeric_limits<double>::infinity(), {}};
    for (const auto& t : f.terms()) {
        env.amplitude += std::abs(t.amplitude);
        env.width_floor = std::min(env.width_floor, t.width.real());
        env.widths.push_back(t.width.real());
    }
    return env;
}

Envelope envelope(const HermiteExpansion& f) {
    Envelope env{0.0, 0.5, {}};
    const auto coeffs = f.coefficients();
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        env.amplitude += std::abs(coeffs[n]) * hermite_envelope_constant(static_cast<int>(n));
    }
    // h_n lives on |x| <~ sqrt((2n + 1) / (2 pi)); the unit width sets the inner scale
    env.widths.push_back(1.0);
    return env;
}

Envelope envelope(const TestFunction& f) {
    return std::visit([](const auto& g) { return envelope(g); }, f);
}

double gaussian_tail_bound(const Envelope& env, double q, double radius) {
    require_exponent(q);
    if (env.amplitude == 0.0) {
        return 0.0;
    }
    return std::exp(log_tail_bound(env, q, radius));
}

double truncation_radius(const Envelope& env, double q, double tol) {
    require_exponent(q);
    if (!(tol > 0.0)) {
        throw DomainError("truncation_radius: tol must be positive");
    }
    if (!(env.width_floor > 0.0) || !std::isfinite(env.width_floor)) {
        throw DomainError("truncation_radius: envelope width floor must be positive");
    }
    if (env.amplitude == 0.0) {
        return 0.0;
    }
    const double target = std::log(0.5 * tol);
    if (log_tail_bound(env, q, 0.0) <= target) {
        return 0.0;
    }
    double lo = 0.0;
    double hi = 1.0 / std::sqrt(env.width_floor * q);
    while (log_tail_bound(env, q, hi) > target) {
        lo = hi;
        hi *= 2.0;
    }
    for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (log_tail_bound(env, q, mid) > target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return hi;
}

NormEstimate lq_norm_quad(const std::function<Complex(double)>& f,
                          const Envelope& env,
                          double q,
                          double tol) {
    require_exponent(q);
    if (!(tol >= kMinQuadTol && tol <= kMaxQuadTol)) {
        throw DomainError("lq_norm_quad: tol must lie in [1e-13, 1e-2]");
    }
    if (env.amplitude == 0.0) {
        return NormEstimate{0.0, NormMethod::quadrature, 0.0, q};
    }

    auto integrand = [&f, q](double x) {
        const double m = std::abs(f(x));
        return q == 2.0 ? m * m : std::pow(m, q);
    };

    // The radius is fixed by the tightest admissible tolerance, so breakpoints
    // and hence the refinement sequence do not depend on `tol`.
    const double upper = std::exp(q * std::log(env.amplitude)) / std::sqrt(env.width_floor * q);
    double scale = upper;
    QuadratureResult quad;
    double tail = 0.0;
    for (int pass = 0; pass < 4; ++pass) {
        const double radius = truncation_radius(env, q, kMinQuadTol * scale);
        const std::vector<double> points = breakpoints(env, q, std::max(radius, 1e-300));
        quad = integrate(integrand, points, 0.0, 0.5 * tol);
        tail = gaussian_tail_bound(env, q, radius);
        if (quad.value <= 0.0 || tail <= 0.5 * tol * quad.value) {
            break;
        }
        scale = 0.5 * quad.value;
    }

    if (quad.value <= 0.0) {
        return NormEstimate{0.0, NormMethod::quadrature, std::pow(quad.abs_error + tail, 1.0 / q), q};
    }
    const double value = std::pow(quad.value, 1.0 / q);
    const double rel = (quad.abs_error + tail) / quad.value;
    return NormEstimate{value, NormMethod::quadrature, value * rel / q, q};
}

NormEstimate lq_norm_quad(const TestFunction& f, double q, double tol) {
    return std::visit(
        [&](const auto& g) {
            return lq_norm_quad([&g](double x) { return g(x); }, envelope(g), q, tol);
        },
        f);
}

}  // namespace uflab
