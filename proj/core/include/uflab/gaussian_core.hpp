#pragma once

#include <complex>
#include <span>
#include <vector>

namespace uflab {

using Complex = std::complex<double>;

/// Smallest admissible distance of the chirp parameter a from 1. As a -> 1+
/// the width a^2 - 1 collapses and every L^q norm diverges.
inline constexpr double kChirpDeltaMin = 1e-6;

/// x -> amplitude * exp(-pi * width * x^2), with Re(width) > 0.
struct ComplexGaussianTerm {
    Complex amplitude{1.0, 0.0};
    Complex width{1.0, 0.0};

    Complex operator()(double x) const;
    double modulus(double x) const;
};

/// Validates Re(width) > 0 and finiteness; throws DomainError otherwise.
ComplexGaussianTerm make_term(Complex amplitude, Complex width);

/// Finite nonempty sum of chirped Gaussians. Terms are kept as given, equal
/// widths are never merged.
class GaussianMixture {
public:
    explicit GaussianMixture(std::vector<ComplexGaussianTerm> terms);
    GaussianMixture(ComplexGaussianTerm term);  // NOLINT(google-explicit-constructor)

    std::span<const ComplexGaussianTerm> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    Complex operator()(double x) const;

private:
    std::vector<ComplexGaussianTerm> terms_;
};

class ChirpParams {
public:
    /// Throws DomainError("degenerate width ...") unless a > 1 + kChirpDeltaMin.
    explicit ChirpParams(double a);

    static ChirpParams from_t(double t);

    double a() const noexcept { return a_; }
    double t() const noexcept { return a_ * a_; }

private:
    double a_;
};

class TwoScaleParams {
public:
    explicit TwoScaleParams(double c);
    double c() const noexcept { return c_; }

private:
    double c_;
};

/// f_a(x) = exp(-pi (a^2 - 1) x^2) exp(-2 pi i a x^2), i.e. width (a + i)^2.
ComplexGaussianTerm make_chirp(const ChirpParams& params);

/// g_c(x) = c^{-1/2} exp(-pi x^2 / c^2) + c^{1/2} exp(-pi c^2 x^2).
GaussianMixture make_two_scale(const TwoScaleParams& params);

/// Fourier transform under f^(xi) = int f(x) exp(-2 pi i x xi) dx:
/// (A, z) -> (A / sqrt(z), 1 / z), principal square root.
ComplexGaussianTerm fourier_transform(const ComplexGaussianTerm& term);
GaussianMixture fourier_transform(const GaussianMixture& f);

Complex eval_mixture(const GaussianMixture& f, double x);

/// Closed-form |A| (q Re z)^{-1/(2q)}. Requires q >= 1.
double term_lq_norm(const ComplexGaussianTerm& term, double q);

/// Exact ||f||_2^2 = sum_{j,k} A_j conj(A_k) (z_j + conj(z_k))^{-1/2}.
double mixture_l2_norm_sq(const GaussianMixture& f);

/// sqrt(2) (1/q)^{1/q} ((t+1)/(t-1))^{1/q - 1/2}, t = a^2.
double closed_form_Fq_chirp(double a, double q);

/// (1/q)^{1/q} / (1/p)^{1/p} * ((t+1)/(t-1))^{1/q - 1/p}, for 1 < q < p.
double closed_form_Fqp_chirp(double a, double q, double p);

}  // namespace uflab
