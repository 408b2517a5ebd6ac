#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "uflab/gaussian_core.hpp"
#include "uflab/hermite_basis.hpp"

namespace uflab {

enum class NormMethod { closed_form, quadrature, dft };

std::string_view to_string(NormMethod method);

struct NormEstimate {
    double value = 0.0;
    NormMethod method = NormMethod::quadrature;
    double abs_error_estimate = 0.0;
    double q = 2.0;
};

/// Pointwise Gaussian majorant |f(x)| <= amplitude * exp(-pi * width_floor * x^2).
/// `scales` lists the characteristic widths (Re z per term) used to place
/// quadrature breakpoints.
struct Envelope {
    double amplitude = 1.0;
    double width_floor = 1.0;
    std::vector<double> widths;
};

Envelope envelope(const GaussianMixture& f);
Envelope envelope(const HermiteExpansion& f);
Envelope envelope(const TestFunction& f);

/// Upper bound on int_{|x|>R} (amplitude exp(-pi w x^2))^q dx.
double gaussian_tail_bound(const Envelope& env, double q, double radius);

/// Smallest R (to bisection accuracy) with gaussian_tail_bound(env, q, R) <= tol / 2.
/// Nonincreasing in width_floor and in tol.
double truncation_radius(const Envelope& env, double q, double tol);

inline constexpr double kMinQuadTol = 1e-13;
inline constexpr double kMaxQuadTol = 1e-2;

/// (int |f|^q)^{1/q} by truncation to [-R, R] followed by adaptive
/// Gauss-Kronrod. The relative error budget `tol` is split between the
/// tail bound and the quadrature estimate; the reported error estimate is
/// what was actually achieved. Throws ToleranceNotAchieved (with the best
/// estimate) when the panel budget runs out.
NormEstimate lq_norm_quad(const std::function<Complex(double)>& f,
                          const Envelope& env,
                          double q,
                          double tol);

NormEstimate lq_norm_quad(const TestFunction& f, double q, double tol);

}  // namespace uflab
