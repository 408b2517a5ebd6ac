#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "uflab/gaussian_core.hpp"

namespace uflab {

/// Highest supported Hermite degree. The raw three-term recurrence stays
/// well conditioned on the quadrature range up to here.
inline constexpr int kHermiteMaxDegree = 32;

/// h_n(x) = kappa_n H_n(sqrt(2 pi) x) exp(-pi x^2), L^2-normalized, with
/// h_n^ = (-i)^n h_n. Throws DomainError for n outside [0, kHermiteMaxDegree].
double hermite_eval(int n, double x);

/// kappa_n, obtained once by quadrature of H_n^2 exp(-2 pi x^2).
double hermite_normalization(int n);

/// M_n >= sup_x |h_n(x)| exp(pi x^2 / 2); lets sum |c_n| M_n exp(-pi x^2 / 2)
/// bound an expansion pointwise.
double hermite_envelope_constant(int n);

/// Elementwise c_n -> (-i)^n c_n.
std::vector<Complex> hermite_ft_coeffs(std::span<const Complex> coeffs);

/// sum_n c_n h_n(x), degrees 0..size()-1.
class HermiteExpansion {
public:
    explicit HermiteExpansion(std::vector<Complex> coefficients);

    std::span<const Complex> coefficients() const noexcept { return coefficients_; }
    int max_degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }

    Complex operator()(double x) const;

private:
    std::vector<Complex> coefficients_;
};

HermiteExpansion fourier_transform(const HermiteExpansion& f);

/// sum |c_n|^2 (orthonormality).
double l2_norm_sq(const HermiteExpansion& f);

// ---------------------------------------------------------------------------
// Test functions

using TestFunction = std::variant<GaussianMixture, HermiteExpansion>;

Complex evaluate(const TestFunction& f, double x);
TestFunction fourier_transform(const TestFunction& f);

/// Exact ||f||_2^2 (Gram sum for mixtures, Parseval for expansions).
double l2_norm_sq(const TestFunction& f);

enum class TestFamily { gaussian_mixture, hermite };

struct TestFunctionSpec {
    TestFamily family = TestFamily::gaussian_mixture;
    int size = 3;                 // terms, or number of coefficients
    std::uint64_t seed = 0;
    double width_min = 0.1;       // Re z is log-uniform in [width_min, width_max]
    double width_max = 10.0;
    double amplitude_box = 1.0;   // Re, Im of amplitudes in [-box, box]
};

/// Minimum L^2 norm accepted from the generator.
inline constexpr double kMinTestNorm = 1e-6;

/// Deterministic for a fixed spec. Mixtures: each term is unchirped or
/// carries |Im z| <= 4 Re z with equal probability. Candidates with
/// ||f||_2 < kMinTestNorm are redrawn.
TestFunction random_schwartz(const TestFunctionSpec& spec);

}  // namespace uflab
