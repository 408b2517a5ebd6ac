#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "uflab/hermite_basis.hpp"
#include "uflab/norms.hpp"

namespace uflab {

/// Exponents accepted by the public evaluation interface.
inline constexpr double kMinExponent = 1.0 + 1e-3;
inline constexpr double kMaxExponent = 64.0;

enum class EvalMethod { closed_form, quadrature, both };

std::string_view to_string(EvalMethod method);
EvalMethod parse_eval_method(std::string_view text);

/// F_{q,p}(f) = ||f||_q ||f^||_q / (||f||_p ||f^||_p); plain F_q has p = 2.
struct FunctionalReport {
    double q = 2.0;
    double p = 2.0;
    NormEstimate norm_f_q;
    NormEstimate norm_fhat_q;
    NormEstimate norm_f_p;
    NormEstimate norm_fhat_p;
    double value = 0.0;
    EvalMethod method = EvalMethod::quadrature;
    /// |closed - quad| / closed, only for EvalMethod::both.
    std::optional<double> discrepancy;
    std::optional<double> quadrature_value;
};

double conjugate_exponent(double q);

/// Closed-form evaluation is available for single-term mixtures (chirps and
/// plain Gaussians); anything else with closed_form or both throws.
FunctionalReport eval_Fq(const TestFunction& f, double q, EvalMethod method, double tol);
FunctionalReport eval_Fqp(const TestFunction& f, double q, double p, EvalMethod method, double tol);

/// theta = (1/p - 1/2) / (1/q - 1/2), the weight on ||f||_q in
/// ||f||_p <= ||f||_q^theta ||f||_2^{1-theta}, for 1 < q < p < 2.
double interpolation_exponent(double q, double p);

/// B_p = (p^{1/p} / p'^{1/p'})^{1/2}, the sharp Hausdorff-Young constant, 1 < p <= 2.
double beckner_constant(double p);

/// ||g_c||_2^2 = sqrt(2) + 2c / sqrt(c^4 + 1).
double gc_l2_norm_sq(double c);

/// q^{-1/2} c^{1-q/2} + q^{-1/2} c^{q/2-1} + 2^{(q+1)/2} q^{-1/2} c / sqrt(c^4 + 1),
/// the sum of the integrals of the three squared-modulus pieces raised to q/2.
double gc_braced_sum(double c, double q);

/// ||g_c||_q^2 >= gc_braced_sum(c, q)^{2/q}, for q > 2.
double gc_lq_lower_bound(double c, double q);

/// The coarser (1/q)^{1/q} c^{1 - 2/q}, for q > 2.
double gc_lq_weak_lower_bound(double c, double q);

enum class BoundKind { gc_l2, gc_lower, gc_upper, fq_gc_lower, beckner, interpolation_exponent };

std::string_view to_string(BoundKind kind);

struct BoundReport {
    double c = 0.0;
    double q = 2.0;
    std::optional<double> p;
    double bound_value = 0.0;
    BoundKind kind = BoundKind::gc_upper;
    std::string case_tag;
};

/// Upper bound on ||g_c||_q^2: 4 when q = 2, otherwise
/// max{1, 3^{q/2-1}}^{2/q} * gc_braced_sum(c, q)^{2/q}; case_tag is one of
/// "q=2", "q<2", "q>2".
BoundReport gc_lq_upper_bound(double c, double q);

/// (1/q)^{1/q} c^{1-2/q} / gc_l2_norm_sq(c), for q > 2.
double fq_gc_lower_bound(double c, double q);

}  // namespace uflab
