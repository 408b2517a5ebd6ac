#include "uflab/gaussian_core.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "uflab/error.hpp"

namespace uflab {
namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_chirp_a(double a) {
    if (!std::isfinite(a) || !(a > 1.0 + kChirpDeltaMin)) {
        throw DomainError("degenerate width: chirp parameter a = " + std::to_string(a) +
                          " must exceed 1 + 1e-6");
    }
}

void require_exponent(double q, double lower, const char* who) {
    if (!std::isfinite(q) || !(q > lower)) {
        throw DomainError(std::string(who) + ": exponent " + std::to_string(q) + " out of range");
    }
}

}  // namespace

Complex ComplexGaussianTerm::operator()(double x) const {
    return amplitude * std::exp(-std::numbers::pi * width * (x * x));
}

double ComplexGaussianTerm::modulus(double x) const {
    return std::abs(amplitude) * std::exp(-std::numbers::pi * width.real() * x * x);
}

ComplexGaussianTerm make_term(Complex amplitude, Complex width) {
    if (!finite(amplitude) || !finite(width)) {
        throw DomainError("gaussian term: non-finite amplitude or width");
    }
    if (!(width.real() > 0.0)) {
        throw DomainError("gaussian term: width must have positive real part");
    }
    return ComplexGaussianTerm{amplitude, width};
}

GaussianMixture::GaussianMixture(std::vector<ComplexGaussianTerm> terms)
    : terms_(std::move(terms)) {
    if (terms_.empty()) {
        throw DomainError("gaussian mixture: at least one term required");
    }
    for (const auto& t : terms_) {
        make_term(t.amplitude, t.width);
    }
}

GaussianMixture::GaussianMixture(ComplexGaussianTerm term)
    : GaussianMixture(std::vector<ComplexGaussianTerm>{term}) {}

Complex GaussianMixture::operator()(double x) const {
    Complex sum{0.0, 0.0};
    for (const auto& t : terms_) {
        sum += t(x);
    }
    return sum;
}

ChirpParams::ChirpParams(double a) : a_(a) { require_chirp_a(a); }

ChirpParams ChirpParams::from_t(double t) {
    if (!std::isfinite(t) || !(t > 1.0)) {
        throw DomainError("degenerate width: chirp parameter t = " + std::to_string(t) +
                          " must exceed 1");
    }
    return ChirpParams(std::sqrt(t));
}

TwoScaleParams::TwoScaleParams(double c) : c_(c) {
    if (!std::isfinite(c) || !(c > 0.0)) {
        throw DomainError("two-scale parameter c must be positive, got " + std::to_string(c));
    }
}

ComplexGaussianTerm make_chirp(const ChirpParams& params) {
    const double a = params.a();
    // (a + i)^2 expanded; (a-1)(a+1) avoids cancellation near a = 1
    return make_term(Complex{1.0, 0.0}, Complex{(a - 1.0) * (a + 1.0), 2.0 * a});
}

GaussianMixture make_two_scale(const TwoScaleParams& params) {
    const double c = params.c();
    return GaussianMixture({
        make_term(Complex{1.0 / std::sqrt(c), 0.0}, Complex{1.0 / (c * c), 0.0}),
        make_term(Complex{std::sqrt(c), 0.0}, Complex{c * c, 0.0}),
    });
}

ComplexGaussianTerm fourier_transform(const ComplexGaussianTerm& term) {
    const Complex root = std::sqrt(term.width);  // principal branch, Re > 0
    return make_term(term.amplitude / root, 1.0 / term.width);
}

GaussianMixture fourier_transform(const GaussianMixture& f) {
    std::vector<ComplexGaussianTerm> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        out.push_back(fourier_transform(t));
    }
    return GaussianMixture(std::move(out));
}

Complex eval_mixture(const GaussianMixture& f, double x) { return f(x); }

double term_lq_norm(const ComplexGaussianTerm& term, double q) {
    if (!std::isfinite(q) || !(q >= 1.0)) {
        throw DomainError("term_lq_norm: q must be a finite exponent >= 1");
    }
    return std::abs(term.amplitude) * std::pow(q * term.width.real(), -1.0 / (2.0 * q));
}

double mixture_l2_norm_sq(const GaussianMixture& f) {
    Complex sum{0.0, 0.0};
    for (const auto& a : f.terms()) {
        for (const auto& b : f.terms()) {
            sum += a.amplitude * std::conj(b.amplitude) / std::sqrt(a.width + std::conj(b.width));
        }
    }
    return std::max(sum.real(), 0.0);
}

double closed_form_Fq_chirp(double a, double q) {
    require_chirp_a(a);
    require_exponent(q, 1.0, "closed_form_Fq_chirp");
    const double ratio = (a * a + 1.0) / ((a - 1.0) * (a + 1.0));
    return std::numbers::sqrt2 * std::pow(1.0 / q, 1.0 / q) * std::pow(ratio, 1.0 / q - 0.5);
}

double closed_form_Fqp_chirp(double a, double q, double p) {
    require_chirp_a(a);
    require_exponent(q, 1.0, "closed_form_Fqp_chirp");
    if (!std::isfinite(p) || !(p > q)) {
        throw DomainError("closed_form_Fqp_chirp: need 1 < q < p < inf");
    }
    const double ratio = (a * a + 1.0) / ((a - 1.0) * (a + 1.0));
    return std::pow(1.0 / q, 1.0 / q) / std::pow(1.0 / p, 1.0 / p) *
           std::pow(ratio, 1.0 / q - 1.0 / p);
}

}  // namespace uflab
