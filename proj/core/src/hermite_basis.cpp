#include "uflab/hermite_basis.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "uflab/error.hpp"
#include "uflab/quadrature.hpp"

namespace uflab {
namespace {

constexpr double kSqrt2Pi = 2.5066282746310002;  // sqrt(2 pi)
constexpr double kExpCutoff = 700.0;

void require_degree(int n) {
    if (n < 0 || n > kHermiteMaxDegree) {
        throw DomainError("hermite degree " + std::to_string(n) + " outside [0, " +
                          std::to_string(kHermiteMaxDegree) + "]");
    }
}

// Physicists' H_0..H_n at y into out[0..n].
void hermite_polynomials(int n, double y, std::span<double> out) {
    out[0] = 1.0;
    if (n >= 1) {
        out[1] = 2.0 * y;
    }
    for (int k = 1; k < n; ++k) {
        out[k + 1] = 2.0 * y * out[k] - 2.0 * k * out[k - 1];
    }
}

double raw_hermite(int n, double y) {
    std::array<double, kHermiteMaxDegree + 1> h{};
    hermite_polynomials(n, y, h);
    return h[n];
}

struct HermiteTables {
    std::array<double, kHermiteMaxDegree + 1> kappa{};
    std::array<double, kHermiteMaxDegree + 1> envelope{};
};

HermiteTables build_tables() {
    HermiteTables tables;
    std::vector<double> breaks;
    for (int i = -8; i <= 8; ++i) {
        breaks.push_back(static_cast<double>(i));
    }
    for (int n = 0; n <= kHermiteMaxDegree; ++n) {
        auto integrand = [n](double x) {
            const double h = raw_hermite(n, kSqrt2Pi * x);
            return h * h * std::exp(-2.0 * std::numbers::pi * x * x);
        };
        const QuadratureResult r = integrate(integrand, breaks, 0.0, 1e-14);
        tables.kappa[n] = 1.0 / std::sqrt(r.value);
    }
    // sup |h_n(x)| exp(pi x^2 / 2) on a fine grid, padded by 1%.
    for (int n = 0; n <= kHermiteMaxDegree; ++n) {
        double sup = 0.0;
        for (int i = 0; i <= 20000; ++i) {
            const double x = 1e-3 * i;
            const double v = std::abs(raw_hermite(n, kSqrt2Pi * x)) *
                             std::exp(-0.5 * std::numbers::pi * x * x);
            sup = std::max(sup, v);
        }
        tables.envelope[n] = 1.01 * tables.kappa[n] * sup;
    }
    return tables;
}

const HermiteTables& tables() {
    static const HermiteTables t = build_tables();
    return t;
}

}  // namespace

double hermite_normalization(int n) {
    require_degree(n);
    return tables().kappa[n];
}

double hermite_envelope_constant(int n) {
    require_degree(n);
    return tables().envelope[n];
}

double hermite_eval(int n, double x) {
    require_degree(n);
    const double gauss_exponent = std::numbers::pi * x * x;
    if (gauss_exponent > kExpCutoff) {
        return 0.0;
    }
    return tables().kappa[n] * raw_hermite(n, kSqrt2Pi * x) * std::exp(-gauss_exponent);
}

std::vector<Complex> hermite_ft_coeffs(std::span<const Complex> coeffs) {
    // (-i)^n cycles through 1, -i, -1, i
    static constexpr std::array<Complex, 4> kPhase = {
        Complex{1.0, 0.0}, Complex{0.0, -1.0}, Complex{-1.0, 0.0}, Complex{0.0, 1.0}};
    std::vector<Complex> out(coeffs.size());
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        out[n] = coeffs[n] * kPhase[n % 4];
    }
    return out;
}

HermiteExpansion::HermiteExpansion(std::vector<Complex> coefficients)
    : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) {
        throw DomainError("hermite expansion: at least one coefficient required");
    }
    require_degree(max_degree());
    for (const Complex& c : coefficients_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw DomainError("hermite expansion: non-finite coefficient");
        }
    }
}

Complex HermiteExpansion::operator()(double x) const {
    const double gauss_exponent = std::numbers::pi * x * x;
    if (gauss_exponent > kExpCutoff) {
        return Complex{0.0, 0.0};
    }
    const int n = max_degree();
    std::array<double, kHermiteMaxDegree + 1> h{};
    hermite_polynomials(n, kSqrt2Pi * x, h);
    const auto& kappa = tables().kappa;
    Complex sum{0.0, 0.0};
    for (int k = 0; k <= n; ++k) {
        sum += coefficients_[k] * (kappa[k] * h[k]);
    }
    return sum * std::exp(-gauss_exponent);
}

HermiteExpansion fourier_transform(const HermiteExpansion& f) {
    return HermiteExpansion(hermite_ft_coeffs(f.coefficients()));
}

double l2_norm_sq(const HermiteExpansion& f) {
    double sum = 0.0;
    for (const Complex& c : f.coefficients()) {
        sum += std::norm(c);
    }
    return sum;
}

}  // namespace uflab
