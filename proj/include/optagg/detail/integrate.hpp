#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace optagg::detail {

/// Gauss-Legendre nodes and weights on [-1, 1], computed once per order by
/// Newton iteration on the Legendre recurrence.
template <int N>
struct GaussLegendre {
    std::array<double, N> node{};
    std::array<double, N> weight{};

    GaussLegendre() {
        for (int i = 0; i < (N + 1) / 2; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (N + 0.5));
            double p1 = 0.0;
            for (int it = 0; it < 100; ++it) {
                p1 = 1.0;
                double p2 = 0.0;
                for (int j = 0; j < N; ++j) {
                    const double p3 = p2;
                    p2 = p1;
                    p1 = ((2.0 * j + 1.0) * x * p2 - j * p3) / (j + 1.0);
                }
                const double dp = N * (x * p1 - p2) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) {
                    p1 = 1.0;
                    p2 = 0.0;
                    for (int j = 0; j < N; ++j) {
                        const double p3 = p2;
                        p2 = p1;
                        p1 = ((2.0 * j + 1.0) * x * p2 - j * p3) / (j + 1.0);
                    }
                    break;
                }
            }
            const double dp = N * (x * p1 - p2) / (x * x - 1.0);
            node[i] = -x;
            node[N - 1 - i] = x;
            weight[i] = weight[N - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

template <int N, class F>
double gauss_panel(const F& f, double a, double b) {
    static const GaussLegendre<N> rule;
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < N; ++i) {
        acc += rule.weight[i] * f(mid + half * rule.node[i]);
    }
    return half * acc;
}

/// Adaptive bisection quadrature with a Gauss-Legendre base rule. The local
/// error estimate compares a panel against its two halves. Throws if the
/// requested tolerance is not reached before the depth cap.
template <class F>
double integrate_adaptive(const F& f, double a, double b, double abs_tol,
                          int max_depth = 52) {
    struct Seg {
        double a, b, whole, tol;
        int depth;
    };
    if (!(b > a)) return 0.0;
    std::vector<Seg> stack;
    stack.push_back({a, b, gauss_panel<12>(f, a, b), abs_tol, 0});
    double total = 0.0;
    while (!stack.empty()) {
        const Seg s = stack.back();
        stack.pop_back();
        const double mid = 0.5 * (s.a + s.b);
        const double left = gauss_panel<12>(f, s.a, mid);
        const double right = gauss_panel<12>(f, mid, s.b);
        const double err = std::abs(left + right - s.whole);
        if (err < s.tol || s.b - s.a < 1e-15 * (b - a)) {
            total += left + right;
        } else if (s.depth >= max_depth) {
            throw std::runtime_error(
                "integrate_adaptive: quadrature did not converge");
        } else {
            stack.push_back({s.a, mid, left, 0.5 * s.tol, s.depth + 1});
            stack.push_back({mid, s.b, right, 0.5 * s.tol, s.depth + 1});
        }
    }
    return total;
}

/// Fixed-cost composite Gauss-Legendre over [a, b] with panel widths graded
/// geometrically into each end. Handles integrands that are analytic inside
/// but only C^1 (x^2 log x type) at the endpoints.
template <int N, class F>
double integrate_graded(const F& f, double a, double b, double first_frac,
                        double ratio) {
    const double len = b - a;
    if (!(len > 0.0)) return 0.0;
    double acc = 0.0;
    // matching panel ladders from both ends, meeting at the midpoint
    double offset = first_frac * len;
    double prev_lo = 0.0, prev_hi = 0.0;
    acc += gauss_panel<N>(f, a, a + offset);
    acc += gauss_panel<N>(f, b - offset, b);
    prev_lo = prev_hi = offset;
    while (prev_lo < 0.5 * len) {
        const double next = std::min(prev_lo * ratio, 0.5 * len);
        acc += gauss_panel<N>(f, a + prev_lo, a + next);
        acc += gauss_panel<N>(f, b - next, b - prev_hi);
        prev_lo = prev_hi = next;
    }
    return acc;
}

}  // namespace optagg::detail
