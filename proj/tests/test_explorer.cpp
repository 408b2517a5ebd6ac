#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "uflab/error.hpp"
#include "uflab/explorer.hpp"

using namespace uflab;

TEST_CASE("grid parsing") {
    const auto g = parse_grid("10:10000:9log");
    CHECK(g.start == 10.0);
    CHECK(g.stop == 10000.0);
    CHECK(g.count == 9);
    CHECK(g.scale == GridScale::log);
    CHECK(parse_grid("1.5:2:3").scale == GridScale::linear);
    CHECK(parse_grid("1.5:2:3lin").scale == GridScale::linear);
    CHECK(parse_grid("1e-3:1e2:4log").start == 1e-3);

    const auto lin = grid_points(parse_grid("1:2:5"));
    REQUIRE(lin.size() == 5);
    CHECK(lin[1] == doctest::Approx(1.25));
    CHECK(lin.back() == 2.0);

    CHECK(parse_grid(to_string(g)).stop == g.stop);

    for (const char* bad : {"", "1:2", "1:2:x", "2:1:4", "1:2:1", "0:10:3log", "1:2:3cubic", "a:2:3", "1:2:-3"}) {
        CHECK_THROWS_AS(parse_grid(bad), DomainError);
    }
}

TEST_CASE("family names") {
    CHECK(parse_family("chirp") == Family::chirp);
    CHECK(parse_family("twoscale") == Family::twoscale);
    CHECK(to_string(Family::twoscale) == "twoscale");
    CHECK_THROWS_AS(parse_family("gauss"), DomainError);
}

TEST_CASE("chirp sweep q=4 is monotone toward 1") {
    const auto s = sweep(Family::chirp, 4.0, std::nullopt, parse_grid("1.02:10000:17log"));
    REQUIRE(s.rows.size() == 17);
    for (std::size_t i = 0; i + 1 < s.rows.size(); ++i) {
        CHECK(s.rows[i + 1].value > s.rows[i].value);
        CHECK(s.rows[i + 1].param > s.rows[i].param);
    }
    CHECK(s.rows.back().value < 1.0);
    CHECK(s.rows.back().value > 0.9999);
    CHECK(s.rows.front().value < 0.35);
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
        const auto& r = s.rows[i];
        CHECK(r.family == Family::chirp);
        CHECK(r.p == 2.0);
        CHECK(std::isfinite(r.value));
        if (i % kSpotCheckStride == 0) {
            CHECK(r.method == EvalMethod::both);
            CHECK(r.err_est <= 1e-7);
        } else {
            CHECK(r.method == EvalMethod::closed_form);
            CHECK(r.err_est == 0.0);
        }
    }
}

TEST_CASE("chirp sweep q=1.5 stays above the Gaussian value and grows toward t=1") {
    const double gaussian = std::sqrt(2.0) * std::pow(1.5, -1.0 / 1.5);
    const auto s = sweep(Family::chirp, 1.5, std::nullopt, parse_grid("1.0001:1000:12log"));
    for (std::size_t i = 0; i + 1 < s.rows.size(); ++i) {
        CHECK(s.rows[i + 1].value < s.rows[i].value);
    }
    for (const auto& r : s.rows) {
        CHECK(r.value > gaussian);
    }
    CHECK(s.rows.front().value > 5.0);
}

TEST_CASE("two-scale sweep q=4") {
    const auto s = sweep(Family::twoscale, 4.0, std::nullopt, parse_grid("10:10000:9log"));
    REQUIRE(s.rows.size() == 9);
    CHECK(s.rows.back().value >= 50.0);
    for (const auto& r : s.rows) {
        CHECK(r.method == EvalMethod::quadrature);
        CHECK(r.err_est < 1e-6);
    }
}

TEST_CASE("sweep is independent of thread count") {
    const auto grid = parse_grid("0.5:50:10log");
    const auto a = sweep(Family::twoscale, 3.0, 6.0, grid, {kSweepTol, 1});
    const auto b = sweep(Family::twoscale, 3.0, 6.0, grid, {kSweepTol, 4});
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].value == b.rows[i].value);
        CHECK(a.rows[i].p == 6.0);
    }
}

TEST_CASE("sweep parameter errors") {
    CHECK_THROWS_AS(sweep(Family::chirp, 4.0, std::nullopt, parse_grid("0.5:2:3")), DomainError);
    CHECK_THROWS_AS(sweep(Family::twoscale, 4.0, std::nullopt, parse_grid("-1:2:3")), DomainError);
    const std::vector<double> unsorted = {3.0, 2.0};
    CHECK_THROWS_AS(sweep(Family::twoscale, 4.0, std::nullopt, unsorted), DomainError);
}

TEST_CASE("image interval q=4") {
    const auto r = estimate_image_interval(4.0, std::nullopt);
    CHECK(r.divergence_flag);
    CHECK(r.vanishing_flag);
    CHECK(r.observed_min < 0.05);
    CHECK(r.observed_max >= 50.0);
    CHECK_FALSE(r.proved_lower_bound.has_value());
}

TEST_CASE("image interval q=1.5") {
    const auto r = estimate_image_interval(1.5, std::nullopt);
    REQUIRE(r.proved_lower_bound.has_value());
    CHECK(*r.proved_lower_bound == doctest::Approx(1.04911).epsilon(1e-5));
    CHECK(r.observed_min >= *r.proved_lower_bound - 1e-6);
    CHECK(r.observed_min >= 1.04);
    CHECK(r.observed_min <= 1.07926);
    CHECK(r.divergence_flag);
    CHECK_FALSE(r.vanishing_flag);
    CHECK(r.observed_min <= r.observed_max);
}

TEST_CASE("image interval q=3 p=6") {
    const auto r = estimate_image_interval(3.0, 6.0);
    CHECK(r.vanishing_flag);
    CHECK(r.divergence_flag);
    CHECK_FALSE(r.proved_lower_bound.has_value());
}

TEST_CASE("image interval q=1.2 p=1.5 has lower bound 1") {
    const auto r = estimate_image_interval(1.2, 1.5);
    REQUIRE(r.proved_lower_bound.has_value());
    CHECK(*r.proved_lower_bound == 1.0);
    CHECK(r.observed_min >= 1.0 - 1e-6);
    CHECK_FALSE(r.vanishing_flag);
}

TEST_CASE("image interval argument checks") {
    CHECK_THROWS_AS(estimate_image_interval(1.0, std::nullopt), DomainError);
    CHECK_THROWS_AS(estimate_image_interval(3.0, 2.0), DomainError);
    IntervalBudget tiny;
    tiny.chirp_points = 1;
    CHECK_THROWS_AS(estimate_image_interval(4.0, std::nullopt, tiny), DomainError);
}
