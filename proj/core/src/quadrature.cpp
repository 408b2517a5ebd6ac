#include "uflab/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "uflab/error.hpp"

namespace uflab {
namespace {

// Kronrod abscissae on [0, 1]; odd indices are the embedded Gauss nodes.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a;
    double b;
    double value;
    double error;
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    for (std::size_t i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[i];
        const double sum = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[i] * sum;
        if (i % 2 == 1) {
            gauss += kGaussWeights[i / 2] * sum;
        }
    }
    kronrod *= half;
    gauss *= half;
    return Panel{a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f,
                           std::span<const double> breakpoints,
                           double abs_tol,
                           double rel_tol,
                           std::size_t max_panels) {
    if (breakpoints.size() < 2) {
        throw DomainError("integrate: need at least two breakpoints");
    }
    if (!std::is_sorted(breakpoints.begin(), breakpoints.end())) {
        throw DomainError("integrate: breakpoints must be sorted");
    }
    if (!(abs_tol >= 0.0) || !(rel_tol >= 0.0)) {
        throw DomainError("integrate: tolerances must be nonnegative");
    }

    std::vector<Panel> panels;
    panels.reserve(std::min<std::size_t>(max_panels, 4096));
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (breakpoints[i + 1] > breakpoints[i]) {
            panels.push_back(gauss_kronrod(f, breakpoints[i], breakpoints[i + 1]));
        }
    }
    if (panels.empty()) {
        return {};
    }

    // Largest error first; ties resolved by panel index so the order never
    // depends on anything but the integrand.
    auto worse = [&panels](std::size_t lhs, std::size_t rhs) {
        if (panels[lhs].error != panels[rhs].error) {
            return panels[lhs].error < panels[rhs].error;
        }
        return lhs > rhs;
    };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(worse)> queue(worse);

    auto exact_sums = [&panels] {
        double value = 0.0;
        double error = 0.0;
        for (const Panel& p : panels) {
            value += p.value;
            error += p.error;
        }
        return std::pair{value, error};
    };

    for (std::size_t i = 0; i < panels.size(); ++i) {
        queue.push(i);
    }
    auto [value, error] = exact_sums();

    while (true) {
        if (error <= std::max(abs_tol, rel_tol * std::abs(value))) {
            // running sums drift; confirm on the exact totals before stopping
            std::tie(value, error) = exact_sums();
            if (error <= std::max(abs_tol, rel_tol * std::abs(value))) {
                break;
            }
        }
        if (panels.size() >= max_panels) {
            std::tie(value, error) = exact_sums();
            throw ToleranceNotAchieved("integrate: tolerance not achieved within " +
                                           std::to_string(max_panels) + " panels",
                                       value, error);
        }

        const std::size_t worst = queue.top();
        queue.pop();
        const Panel parent = panels[worst];
        const double mid = 0.5 * (parent.a + parent.b);
        if (!(mid > parent.a && mid < parent.b)) {
            // panel cannot be split in double precision; its error is final
            panels[worst].error = 0.0;
            error -= parent.error;
            queue.push(worst);
            continue;
        }
        const Panel left = gauss_kronrod(f, parent.a, mid);
        const Panel right = gauss_kronrod(f, mid, parent.b);
        value += left.value + right.value - parent.value;
        error += left.error + right.error - parent.error;
        panels[worst] = left;
        panels.push_back(right);
        queue.push(worst);
        queue.push(panels.size() - 1);
    }

    return QuadratureResult{value, error, panels.size()};
}

}  // namespace uflab
