#include "uflab/functionals.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <variant>

#include "uflab/error.hpp"

namespace uflab {
namespace {

void require_public_exponent(double q, const char* who) {
    if (!std::isfinite(q) || q < kMinExponent || q > kMaxExponent) {
        throw DomainError(std::string(who) + ": exponent " + std::to_string(q) +
                          " outside [1.001, 64]");
    }
}

void require_positive_c(double c, const char* who) {
    if (!std::isfinite(c) || !(c > 0.0)) {
        throw DomainError(std::string(who) + ": c must be positive");
    }
}

void require_q_above_two(double q, const char* who) {
    if (!std::isfinite(q) || !(q > 2.0)) {
        throw DomainError(std::string(who) + ": requires q > 2");
    }
}

// c / sqrt(c^4 + 1), arranged so c^4 never overflows.
double overlap(double c) {
    return c >= 1.0 ? 1.0 / (c * std::sqrt(1.0 + 1.0 / (c * c * c * c)))
                    : c / std::sqrt(c * c * c * c + 1.0);
}

const ComplexGaussianTerm* single_term(const TestFunction& f) {
    const auto* mixture = std::get_if<GaussianMixture>(&f);
    if (mixture == nullptr || mixture->size() != 1) {
        return nullptr;
    }
    return &mixture->terms()[0];
}

struct NormQuad {
    NormEstimate f_q, fhat_q, f_p, fhat_p;
};

NormEstimate closed_norm(const ComplexGaussianTerm& term, double r) {
    return NormEstimate{term_lq_norm(term, r), NormMethod::closed_form, 0.0, r};
}

double ratio(const NormQuad& n) {
    return (n.f_q.value * n.fhat_q.value) / (n.f_p.value * n.fhat_p.value);
}

NormQuad closed_norms(const ComplexGaussianTerm& term, double q, double p) {
    const ComplexGaussianTerm hat = fourier_transform(term);
    return {closed_norm(term, q), closed_norm(hat, q), closed_norm(term, p), closed_norm(hat, p)};
}

NormQuad quadrature_norms(const TestFunction& f, double q, double p, double tol) {
    const TestFunction hat = fourier_transform(f);
    return {lq_norm_quad(f, q, tol), lq_norm_quad(hat, q, tol), lq_norm_quad(f, p, tol),
            lq_norm_quad(hat, p, tol)};
}

FunctionalReport evaluate(const TestFunction& f, double q, double p, EvalMethod method, double tol) {
    if (!(l2_norm_sq(f) > 0.0)) {
        throw DomainError("functional: zero function");
    }
    const ComplexGaussianTerm* term = single_term(f);
    if (method != EvalMethod::quadrature && term == nullptr) {
        throw DomainError("functional: closed form requires a single Gaussian term (chirp or Gaussian)");
    }

    FunctionalReport report;
    report.q = q;
    report.p = p;
    report.method = method;

    NormQuad norms;
    if (method == EvalMethod::quadrature) {
        norms = quadrature_norms(f, q, p, tol);
    } else {
        norms = closed_norms(*term, q, p);
    }
    report.norm_f_q = norms.f_q;
    report.norm_fhat_q = norms.fhat_q;
    report.norm_f_p = norms.f_p;
    report.norm_fhat_p = norms.fhat_p;
    report.value = ratio(norms);
    if (!(report.value > 0.0) || !std::isfinite(report.value)) {
        throw DomainError("functional: zero function or non-finite norms");
    }

    if (method == EvalMethod::both) {
        const double quad = ratio(quadrature_norms(f, q, p, tol));
        report.quadrature_value = quad;
        report.discrepancy = std::abs(report.value - quad) / report.value;
    }
    return report;
}

}  // namespace

std::string_view to_string(EvalMethod method) {
    switch (method) {
        case EvalMethod::closed_form: return "closed-form";
        case EvalMethod::quadrature: return "quadrature";
        case EvalMethod::both: return "both";
    }
    return "unknown";
}

EvalMethod parse_eval_method(std::string_view text) {
    if (text == "closed" || text == "closed-form") return EvalMethod::closed_form;
    if (text == "quad" || text == "quadrature") return EvalMethod::quadrature;
    if (text == "both") return EvalMethod::both;
    throw DomainError("unknown evaluation method '" + std::string(text) + "'");
}

std::string_view to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::gc_l2: return "gc-l2";
        case BoundKind::gc_lower: return "gc-lower";
        case BoundKind::gc_upper: return "gc-upper";
        case BoundKind::fq_gc_lower: return "fq-gc-lower";
        case BoundKind::beckner: return "beckner";
        case BoundKind::interpolation_exponent: return "interpolation-exponent";
    }
    return "unknown";
}

double conjugate_exponent(double q) {
    if (!std::isfinite(q) || !(q > 1.0)) {
        throw DomainError("conjugate_exponent: requires finite q > 1");
    }
    return q / (q - 1.0);
}

FunctionalReport eval_Fq(const TestFunction& f, double q, EvalMethod method, double tol) {
    require_public_exponent(q, "eval_Fq");
    return evaluate(f, q, 2.0, method, tol);
}

FunctionalReport eval_Fqp(const TestFunction& f, double q, double p, EvalMethod method, double tol) {
    require_public_exponent(q, "eval_Fqp");
    require_public_exponent(p, "eval_Fqp");
    if (!(q < p)) {
        throw DomainError("eval_Fqp: requires q < p");
    }
    return evaluate(f, q, p, method, tol);
}

double interpolation_exponent(double q, double p) {
    if (!(q > 1.0) || !(q < p) || !(p < 2.0)) {
        throw DomainError("interpolation_exponent: requires 1 < q < p < 2");
    }
    return (1.0 / p - 0.5) / (1.0 / q - 0.5);
}

double beckner_constant(double p) {
    if (!std::isfinite(p) || !(p > 1.0) || !(p <= 2.0)) {
        throw DomainError("beckner_constant: requires 1 < p <= 2");
    }
    const double pc = conjugate_exponent(p);
    return std::sqrt(std::pow(p, 1.0 / p) / std::pow(pc, 1.0 / pc));
}

double gc_l2_norm_sq(double c) {
    require_positive_c(c, "gc_l2_norm_sq");
    return std::numbers::sqrt2 + 2.0 * overlap(c);
}

double gc_braced_sum(double c, double q) {
    require_positive_c(c, "gc_braced_sum");
    if (!std::isfinite(q) || !(q > 1.0)) {
        throw DomainError("gc_braced_sum: requires q > 1");
    }
    const double inv_sqrt_q = 1.0 / std::sqrt(q);
    const double cross = overlap(c);
    return inv_sqrt_q * std::pow(c, 1.0 - 0.5 * q) + inv_sqrt_q * std::pow(c, 0.5 * q - 1.0) +
           std::pow(2.0, 0.5 * (q + 1.0)) * inv_sqrt_q * cross;
}

double gc_lq_lower_bound(double c, double q) {
    require_q_above_two(q, "gc_lq_lower_bound");
    return std::pow(gc_braced_sum(c, q), 2.0 / q);
}

double gc_lq_weak_lower_bound(double c, double q) {
    require_q_above_two(q, "gc_lq_weak_lower_bound");
    require_positive_c(c, "gc_lq_weak_lower_bound");
    return std::pow(1.0 / q, 1.0 / q) * std::pow(c, 1.0 - 2.0 / q);
}

BoundReport gc_lq_upper_bound(double c, double q) {
    require_positive_c(c, "gc_lq_upper_bound");
    if (!std::isfinite(q) || !(q > 1.0)) {
        throw DomainError("gc_lq_upper_bound: requires q > 1");
    }
    BoundReport report;
    report.c = c;
    report.q = q;
    report.kind = BoundKind::gc_upper;
    if (q == 2.0) {
        report.bound_value = 4.0;
        report.case_tag = "q=2";
        return report;
    }
    const double factor = std::pow(std::max(1.0, std::pow(3.0, 0.5 * q - 1.0)), 2.0 / q);
    report.bound_value = factor * std::pow(gc_braced_sum(c, q), 2.0 / q);
    report.case_tag = q < 2.0 ? "q<2" : "q>2";
    return report;
}

double fq_gc_lower_bound(double c, double q) {
    require_q_above_two(q, "fq_gc_lower_bound");
    return gc_lq_weak_lower_bound(c, q) / gc_l2_norm_sq(c);
}

}  // namespace uflab
