#include "uflab/dft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <string>

#include "uflab/error.hpp"

namespace uflab {
namespace {

// FFTW's planner is not reentrant; execution on a finished plan is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void validate_grid(std::size_t n, double dx) {
    if (n < 16 || !is_power_of_two(n)) {
        throw DomainError("sampled grid: n = " + std::to_string(n) +
                          " must be a power of two >= 16");
    }
    if (!(dx > 0.0) || !std::isfinite(dx)) {
        throw DomainError("sampled grid: dx must be positive and finite");
    }
}

}  // namespace

SampledFunction::SampledFunction(double dx, std::vector<Complex> samples)
    : dx_(dx), samples_(std::move(samples)) {
    validate_grid(samples_.size(), dx_);
}

SampledFunction sample(const std::function<Complex(double)>& f, std::size_t n, double dx) {
    validate_grid(n, dx);
    std::vector<Complex> values(n);
    const auto half = static_cast<double>(n / 2);
    for (std::size_t j = 0; j < n; ++j) {
        values[j] = f((static_cast<double>(j) - half) * dx);
    }
    return SampledFunction(dx, std::move(values));
}

SampledFunction dft_approx(const SampledFunction& s) {
    const std::size_t n = s.size();
    std::vector<Complex> data(n);
    for (std::size_t j = 0; j < n; ++j) {
        data[j] = (j % 2 == 0) ? s[j] : -s[j];
    }

    auto* buffer = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(n), buffer, buffer, FFTW_FORWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan);
    }

    // exp(-2 pi i x_j xi_k) = exp(-2 pi i jk/n) (-1)^j (-1)^k, since n/2 is even
    const double dx = s.dx();
    for (std::size_t k = 0; k < n; ++k) {
        data[k] *= (k % 2 == 0) ? dx : -dx;
    }
    return SampledFunction(s.reciprocal_dx(), std::move(data));
}

double select_grid_dx(const Envelope& f, const Envelope& fhat, std::size_t n, double tol) {
    validate_grid(n, 1.0);
    const double radius = truncation_radius(f, 1.0, tol);
    const double omega = truncation_radius(fhat, 1.0, tol);
    const double aliasing = omega > 0.0 ? 1.0 / (2.0 * omega) : std::numeric_limits<double>::infinity();
    const double covering = radius / static_cast<double>(n / 2);
    const double dx = std::min(aliasing, covering);
    if (!(dx > 0.0) || !std::isfinite(dx)) {
        throw DomainError("select_grid_dx: degenerate envelope");
    }
    return dx;
}

double dft_max_error(const std::function<Complex(double)>& f,
                     const std::function<Complex(double)>& fhat,
                     std::size_t n,
                     double dx) {
    const SampledFunction spectrum = dft_approx(sample(f, n, dx));
    double worst = 0.0;
    for (std::size_t k = 0; k < spectrum.size(); ++k) {
        worst = std::max(worst, std::abs(spectrum[k] - fhat(spectrum.x(k))));
    }
    return worst;
}

}  // namespace uflab
