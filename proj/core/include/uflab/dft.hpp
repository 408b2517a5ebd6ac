#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "uflab/gaussian_core.hpp"
#include "uflab/norms.hpp"

namespace uflab {

/// Samples on the centered grid x_j = (j - n/2) dx, j = 0..n-1.
/// n is a power of two >= 16 and dx > 0.
class SampledFunction {
public:
    SampledFunction(double dx, std::vector<Complex> samples);

    std::size_t size() const noexcept { return samples_.size(); }
    double dx() const noexcept { return dx_; }
    double x(std::size_t j) const noexcept {
        return (static_cast<double>(j) - static_cast<double>(samples_.size() / 2)) * dx_;
    }
    /// Spacing 1 / (n dx) of the reciprocal grid.
    double reciprocal_dx() const noexcept { return 1.0 / (static_cast<double>(size()) * dx_); }

    const std::vector<Complex>& samples() const noexcept { return samples_; }
    const Complex& operator[](std::size_t j) const { return samples_[j]; }

private:
    double dx_;
    std::vector<Complex> samples_;
};

SampledFunction sample(const std::function<Complex(double)>& f, std::size_t n, double dx);

/// Riemann-sum approximation of the continuous transform,
/// f^(xi_k) ~ dx * sum_j s_j exp(-2 pi i x_j xi_k), xi_k = (k - n/2) / (n dx),
/// evaluated with one FFT and the centering sign flips.
/// The result is a SampledFunction on the frequency grid.
SampledFunction dft_approx(const SampledFunction& s);

/// dx = min(1 / (2 Omega), R / (n / 2)) where R and Omega are the
/// truncation radii (q = 1) of f and f^ at `tol`.
double select_grid_dx(const Envelope& f, const Envelope& fhat, std::size_t n, double tol);

/// Max |dft_approx(sample(f)) - fhat| over the frequency grid.
double dft_max_error(const std::function<Complex(double)>& f,
                     const std::function<Complex(double)>& fhat,
                     std::size_t n,
                     double dx);

}  // namespace uflab
