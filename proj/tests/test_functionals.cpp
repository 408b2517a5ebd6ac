#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "uflab/error.hpp"
#include "uflab/functionals.hpp"

using namespace uflab;

namespace {

const TestFunction kGaussian = GaussianMixture(make_term({1.0, 0.0}, {1.0, 0.0}));

TestFunction chirp(double a) { return GaussianMixture(make_chirp(ChirpParams(a))); }
TestFunction two_scale(double c) { return make_two_scale(TwoScaleParams(c)); }

TestFunction scaled(const TestFunction& f, Complex lambda) {
    if (const auto* m = std::get_if<GaussianMixture>(&f)) {
        std::vector<ComplexGaussianTerm> terms;
        for (const auto& t : m->terms()) {
            terms.push_back(make_term(lambda * t.amplitude, t.width));
        }
        return GaussianMixture(std::move(terms));
    }
    std::vector<Complex> c;
    for (const auto& v : std::get<HermiteExpansion>(f).coefficients()) {
        c.push_back(lambda * v);
    }
    return HermiteExpansion(std::move(c));
}

}  // namespace

TEST_CASE("conjugate_exponent") {
    CHECK(conjugate_exponent(2.0) == 2.0);
    CHECK(conjugate_exponent(4.0 / 3.0) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(std::abs(conjugate_exponent(conjugate_exponent(1.7)) - 1.7) <= 1e-15);
    CHECK_THROWS_AS(conjugate_exponent(1.0), DomainError);
    CHECK_THROWS_AS(conjugate_exponent(0.5), DomainError);
}

TEST_CASE("eval_Fq examples") {
    CHECK(eval_Fq(kGaussian, 2.0, EvalMethod::quadrature, 1e-10).value == doctest::Approx(1.0).epsilon(1e-10));

    const auto r = eval_Fq(chirp(std::sqrt(3.0)), 4.0, EvalMethod::both, 1e-10);
    CHECK(r.value == doctest::Approx(std::pow(2.0, -0.25)).epsilon(1e-13));
    REQUIRE(r.discrepancy.has_value());
    CHECK(*r.discrepancy <= 10 * 1e-10);
    CHECK(r.norm_f_q.method == NormMethod::closed_form);
    CHECK(r.value == doctest::Approx(r.norm_f_q.value * r.norm_fhat_q.value /
                                     (r.norm_f_p.value * r.norm_fhat_p.value)).epsilon(1e-15));
    // closed form of the Gaussian, sqrt(2) q^{-1/q}, equals 1 at q = 4
    CHECK(eval_Fq(kGaussian, 4.0, EvalMethod::both, 1e-10).value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(eval_Fq(kGaussian, 4.0, EvalMethod::quadrature, 1e-10).value == doctest::Approx(1.0).epsilon(1e-9));
    // independent route: the explicit chirp display
    CHECK(oracle::rel_diff(eval_Fq(chirp(3.0), 1.7, EvalMethod::closed_form, 1e-10).value,
                           closed_form_Fq_chirp(3.0, 1.7)) < 1e-13);
}

TEST_CASE("eval_Fq error paths") {
    CHECK_THROWS_AS(eval_Fq(two_scale(2.0), 3.0, EvalMethod::closed_form, 1e-8), DomainError);
    CHECK_THROWS_AS(eval_Fq(two_scale(2.0), 3.0, EvalMethod::both, 1e-8), DomainError);
    CHECK_THROWS_AS(eval_Fq(kGaussian, 1.0, EvalMethod::quadrature, 1e-8), DomainError);
    CHECK_THROWS_AS(eval_Fq(kGaussian, 65.0, EvalMethod::quadrature, 1e-8), DomainError);
    const TestFunction zero = HermiteExpansion({{0.0, 0.0}, {0.0, 0.0}});
    CHECK_THROWS_AS(eval_Fq(zero, 3.0, EvalMethod::quadrature, 1e-8), DomainError);
}

TEST_CASE("eval_Fqp examples") {
    const auto r = eval_Fqp(chirp(std::sqrt(3.0)), 3.0, 6.0, EvalMethod::both, 1e-10);
    CHECK(r.value == doctest::Approx(1.049115063421648).epsilon(1e-13));
    CHECK(*r.discrepancy < 1e-9);

    const double gaussian = std::pow(1.0 / 3.0, 1.0 / 3.0) / std::pow(1.0 / 6.0, 1.0 / 6.0);
    CHECK(eval_Fqp(kGaussian, 3.0, 6.0, EvalMethod::quadrature, 1e-10).value ==
          doctest::Approx(gaussian).epsilon(1e-9));
    CHECK(gaussian == doctest::Approx(0.93466).epsilon(1e-5));

    const double g1 = eval_Fqp(two_scale(1.0), 1.5, 3.0, EvalMethod::quadrature, 1e-10).value;
    const double g = eval_Fqp(kGaussian, 1.5, 3.0, EvalMethod::quadrature, 1e-10).value;
    CHECK(oracle::rel_diff(g1, g) < 1e-9);

    // self-dual input: F_{q,p} = (||f||_q / ||f||_p)^2
    const auto s = eval_Fqp(two_scale(5.0), 3.0, 6.0, EvalMethod::quadrature, 1e-10);
    CHECK(oracle::rel_diff(s.value, std::pow(s.norm_f_q.value / s.norm_f_p.value, 2.0)) < 1e-9);

    CHECK_THROWS_AS(eval_Fqp(kGaussian, 3.0, 3.0, EvalMethod::quadrature, 1e-8), DomainError);
    CHECK_THROWS_AS(eval_Fqp(kGaussian, 4.0, 3.0, EvalMethod::quadrature, 1e-8), DomainError);
}

TEST_CASE("interpolation_exponent") {
    CHECK(interpolation_exponent(1.2, 1.5) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(interpolation_exponent(1.3, 1.3 + 1e-9) == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(interpolation_exponent(1.3, 2.0 - 1e-9) == doctest::Approx(0.0).epsilon(1e-7));
    CHECK_THROWS_AS(interpolation_exponent(1.5, 1.2), DomainError);
    CHECK_THROWS_AS(interpolation_exponent(1.5, 2.0), DomainError);
}

TEST_CASE("beckner_constant") {
    CHECK(beckner_constant(2.0) == 1.0);
    CHECK(beckner_constant(4.0 / 3.0) == doctest::Approx(0.936687074375248).epsilon(1e-13));
    CHECK(1.0 / beckner_constant(1.5) == doctest::Approx(1.049115063421648).epsilon(1e-13));
    for (double p = 1.05; p < 2.0; p += 0.1) {
        CHECK(beckner_constant(p) < 1.0);
    }
    // the Gaussian is an extremizer: ||f^||_4 / ||f||_{4/3} = B_{4/3}
    const double ratio = lq_norm_quad(fourier_transform(kGaussian), 4.0, 1e-11).value /
                         lq_norm_quad(kGaussian, 4.0 / 3.0, 1e-11).value;
    CHECK(ratio == doctest::Approx(beckner_constant(4.0 / 3.0)).epsilon(1e-9));
    CHECK_THROWS_AS(beckner_constant(1.0), DomainError);
    CHECK_THROWS_AS(beckner_constant(2.5), DomainError);
}

TEST_CASE("gc_l2_norm_sq") {
    CHECK(gc_l2_norm_sq(1.0) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));
    CHECK(std::pow(lq_norm_quad(two_scale(1.0), 2.0, 1e-11).value, 2.0) ==
          doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-10));
    CHECK(gc_l2_norm_sq(2.0) == doctest::Approx(2.384356062518427).epsilon(1e-14));
    CHECK(gc_l2_norm_sq(1e200) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(gc_l2_norm_sq(1e-200) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    for (double c : {0.3, 0.9, 1.1, 4.0}) {
        CHECK(gc_l2_norm_sq(c) < gc_l2_norm_sq(1.0));
    }
    CHECK_THROWS_AS(gc_l2_norm_sq(0.0), DomainError);
}

TEST_CASE("gc_lq_lower_bound") {
    for (auto [c, q] : {std::pair{5.0, 4.0}, {50.0, 3.0}, {0.2, 6.0}}) {
        const double quad = std::pow(lq_norm_quad(two_scale(c), q, 1e-10).value, 2.0);
        CHECK(quad >= gc_lq_lower_bound(c, q));
        CHECK(gc_lq_lower_bound(c, q) >= gc_lq_weak_lower_bound(c, q));
    }
    // 1/2 + 1/2 + 2^{5/2}/2 * 2^{-1/2} = 3
    CHECK(gc_braced_sum(1.0, 4.0) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(gc_lq_lower_bound(1.0, 4.0) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    CHECK(gc_lq_weak_lower_bound(100.0, 4.0) == doctest::Approx(7.0710678118654755).epsilon(1e-14));
    CHECK_THROWS_AS(gc_lq_lower_bound(2.0, 2.0), DomainError);
    CHECK_THROWS_AS(gc_lq_lower_bound(2.0, 1.5), DomainError);
}

TEST_CASE("gc_lq_upper_bound") {
    for (double c : {0.1, 1.0, 3.0, 100.0}) {
        const auto b = gc_lq_upper_bound(c, 2.0);
        CHECK(b.bound_value == 4.0);
        CHECK(b.case_tag == "q=2");
        CHECK(std::pow(lq_norm_quad(two_scale(c), 2.0, 1e-10).value, 2.0) <= 2.0 * std::sqrt(2.0) + 1e-9);
    }
    const auto b4 = gc_lq_upper_bound(10.0, 4.0);
    CHECK(b4.case_tag == "q>2");
    CHECK(b4.bound_value == doctest::Approx(std::sqrt(3.0) * std::sqrt(gc_braced_sum(10.0, 4.0))).epsilon(1e-14));
    CHECK(std::pow(lq_norm_quad(two_scale(10.0), 4.0, 1e-10).value, 2.0) <= b4.bound_value);

    for (auto [c, q] : {std::pair{1000.0, 1.5}, {0.3, 1.2}, {7.0, 3.0}, {50.0, 8.0}}) {
        const auto b = gc_lq_upper_bound(c, q);
        CHECK(b.case_tag == (q < 2 ? "q<2" : "q>2"));
        CHECK(std::pow(lq_norm_quad(two_scale(c), q, 1e-10).value, 2.0) <= b.bound_value);
    }
    // growth exponent 2/q - 1 = 1/3 at q = 1.5; the c^{q/2-1} term decays
    // like c^{-1/2} relative to the leading one, so the fit tightens with c
    auto slope = [](double lo, double hi) {
        return (std::log(gc_lq_upper_bound(hi, 1.5).bound_value) -
                std::log(gc_lq_upper_bound(lo, 1.5).bound_value)) /
               (std::log(hi) - std::log(lo));
    };
    CHECK(slope(1e3, 1e6) == doctest::Approx(1.0 / 3.0).epsilon(0.02));
    CHECK(slope(1e9, 1e12) == doctest::Approx(1.0 / 3.0).epsilon(1e-4));
}

TEST_CASE("fq_gc_lower_bound") {
    CHECK(fq_gc_lower_bound(100.0, 4.0) == doctest::Approx(4.930275377300498).epsilon(1e-13));
    CHECK(fq_gc_lower_bound(1e4, 4.0) == doctest::Approx(49.99292993204674).epsilon(1e-13));
    for (auto [c, q] : {std::pair{10.0, 3.0}, {1e3, 4.0}, {1e2, 8.0}}) {
        CHECK(eval_Fq(two_scale(c), q, EvalMethod::quadrature, 1e-10).value >= fq_gc_lower_bound(c, q));
    }
    CHECK(fq_gc_lower_bound(1e8, 4.0) > fq_gc_lower_bound(1e6, 4.0));
    CHECK_THROWS_AS(fq_gc_lower_bound(10.0, 2.0), DomainError);
}

TEST_CASE("F_q is invariant under scalar multiples") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        TestFunctionSpec spec;
        spec.seed = seed;
        spec.family = seed % 2 ? TestFamily::hermite : TestFamily::gaussian_mixture;
        const TestFunction f = random_schwartz(spec);
        for (Complex lambda : {Complex{3.0, 0.0}, Complex{-0.2, 0.7}, Complex{0.0, 1e-3}}) {
            const double a = eval_Fq(f, 3.0, EvalMethod::quadrature, 1e-11).value;
            const double b = eval_Fq(scaled(f, lambda), 3.0, EvalMethod::quadrature, 1e-11).value;
            CHECK(oracle::rel_diff(b, a) < 1e-10);
        }
    }
}

TEST_CASE("F_2 = 1 for every test function") {
    for (std::uint64_t seed = 100; seed < 130; ++seed) {
        TestFunctionSpec spec;
        spec.seed = seed;
        spec.size = 1 + static_cast<int>(seed % 6);
        spec.family = seed % 3 == 0 ? TestFamily::hermite : TestFamily::gaussian_mixture;
        CHECK(std::abs(eval_Fq(random_schwartz(spec), 2.0, EvalMethod::quadrature, 1e-10).value - 1.0) < 1e-9);
    }
    for (double c : {0.1, 1.0, 30.0}) {
        CHECK(std::abs(eval_Fq(two_scale(c), 2.0, EvalMethod::quadrature, 1e-10).value - 1.0) < 1e-9);
    }
}
