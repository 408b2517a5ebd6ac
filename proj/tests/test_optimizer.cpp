#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "uflab/error.hpp"
#include "uflab/functionals.hpp"
#include "uflab/optimizer.hpp"

using namespace uflab;

TEST_CASE("nelder-mead on a quadratic") {
    std::mt19937_64 rng(1);
    auto f = [](const std::vector<double>& x) { return 1.0 + (x[0] - 1) * (x[0] - 1) + 4 * (x[1] + 2) * (x[1] + 2); };
    SimplexOptions opts;
    opts.max_iter = 2000;
    opts.ftol = 1e-14;
    const auto r = nelder_mead(f, {0.0, 0.0}, opts, rng);
    CHECK(r.converged);
    CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(r.x[1] == doctest::Approx(-2.0).epsilon(1e-5));
}

TEST_CASE("nelder-mead on rosenbrock") {
    std::mt19937_64 rng(1);
    auto f = [](const std::vector<double>& x) {
        return 1.0 + 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
    };
    SimplexOptions opts;
    opts.max_iter = 5000;
    opts.ftol = 1e-15;
    const auto r = nelder_mead(f, {-1.2, 1.0}, opts, rng);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("nelder-mead resamples non-finite vertices") {
    std::mt19937_64 rng(3);
    // +x direction from the start is forbidden
    auto f = [](const std::vector<double>& x) {
        return x[0] > 0.1 ? std::numeric_limits<double>::quiet_NaN() : (x[0] + 1) * (x[0] + 1) + x[1] * x[1];
    };
    const auto r = nelder_mead(f, {0.0, 0.0}, {}, rng);
    CHECK(std::isfinite(r.value));
    CHECK(r.value < 1e-6);
}

TEST_CASE("decode mixture layout") {
    const MixtureFamilySpec real{2, false};
    CHECK(search_dimension(real) == 3);
    const auto m = decode_mixture(real, {0.0, -0.5, std::log(2.0)});
    REQUIRE(m.size() == 2);
    CHECK(m.terms()[0].amplitude == Complex(1.0, 0.0));
    CHECK(m.terms()[0].width == Complex(1.0, 0.0));
    CHECK(m.terms()[1].amplitude == Complex(-0.5, 0.0));
    CHECK(m.terms()[1].width.real() == doctest::Approx(2.0));

    const MixtureFamilySpec chirp{2, true};
    CHECK(search_dimension(chirp) == 6);
    const auto c = decode_mixture(chirp, {0.0, 100.0, 0.3, 0.2, 0.0, 0.0});
    CHECK(c.terms()[0].width.imag() == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(c.terms()[1].amplitude == Complex(0.3, 0.2));
    CHECK_THROWS_AS(decode_mixture(chirp, {0.0}), DomainError);
    CHECK(search_dimension({4, true}) == 14);
}

TEST_CASE("single term family gives the Gaussian value") {
    OptimizerConfig cfg;
    cfg.restarts = 4;
    const auto r = minimize_Fq(1.5, {1, false}, cfg);
    CHECK(r.best_value == doctest::Approx(std::sqrt(2.0) * std::pow(1.5, -2.0 / 3.0)).epsilon(1e-9));
    CHECK(r.comparison_gaussian == doctest::Approx(1.07925).epsilon(1e-5));
}

TEST_CASE("two-term real mixture at q=1.5 lands in the bracket") {
    const auto r = minimize_Fq(1.5, {2, false}, {});
    CHECK(r.restarts == 16);
    CHECK(r.best_value <= r.comparison_gaussian + 1e-9);
    CHECK(r.best_value <= 1.07925);
    REQUIRE(r.comparison_inverse_beckner.has_value());
    CHECK(r.best_value >= *r.comparison_inverse_beckner - 1e-6);
    CHECK(r.best_value >= 1.04911 - 1e-6);
    CHECK(r.best_parameters.size() == 3);
    // the reported parameters reproduce the reported value
    const TestFunction f = decode_mixture(r.family, r.best_parameters);
    CHECK(eval_Fq(f, 1.5, EvalMethod::quadrature, 1e-10).value == r.best_value);
}

TEST_CASE("minimize is deterministic and thread independent") {
    OptimizerConfig cfg;
    cfg.restarts = 6;
    cfg.max_iter = 150;
    cfg.seed = 9;
    const auto a = minimize_Fq(1.3, {2, false}, cfg);
    const auto b = minimize_Fq(1.3, {2, false}, cfg);
    cfg.threads = 3;
    const auto c = minimize_Fq(1.3, {2, false}, cfg);
    for (const auto* x : {&b, &c}) {
        CHECK(x->best_value == a.best_value);
        CHECK(x->best_parameters == a.best_parameters);
        CHECK(x->iterations == a.iterations);
        CHECK(x->evaluations == a.evaluations);
        CHECK(x->best_restart == a.best_restart);
    }
    cfg.seed = 10;
    cfg.threads = 1;
    const auto d = minimize_Fq(1.3, {2, false}, cfg);
    CHECK(d.best_value <= d.comparison_gaussian + 1e-9);
}

TEST_CASE("q > 2 reports a value below the Gaussian") {
    OptimizerConfig cfg;
    cfg.restarts = 4;
    const auto r = minimize_Fq(4.0, {2, false}, cfg);
    CHECK(r.best_value < r.comparison_gaussian);
    CHECK_FALSE(r.comparison_inverse_beckner.has_value());
}

TEST_CASE("minimize argument checks") {
    CHECK_THROWS_AS(minimize_Fq(2.0, {2, false}), DomainError);
    CHECK_THROWS_AS(minimize_Fq(0.5, {2, false}), DomainError);
    CHECK_THROWS_AS(minimize_Fq(1.5, {4, true}), DomainError);
    CHECK_THROWS_AS(minimize_Fq(1.5, {0, false}), DomainError);
    OptimizerConfig none;
    none.restarts = 0;
    CHECK_THROWS_AS(minimize_Fq(1.5, {2, false}, none), DomainError);
}
