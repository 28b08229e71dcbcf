#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace optagg {

/// Feasible intervals narrower than this are treated as "joint fully
/// determined": the posterior collapses to a point mass and the
/// normalization of the truncated arcsine density is no longer usable.
inline constexpr double kDegenerateWidth = 1e-12;

/// Thrown when an operation requires a non-degenerate feasible interval.
struct degenerate_interval_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// A pair of marginal probabilities (P(X), P(Y)). Validated once at
/// construction; everything downstream may assume both lie in [0,1].
struct Marginals {
    double a;
    double b;

    Marginals(double a_, double b_) : a(a_), b(b_) {
        if (!(a >= 0.0 && a <= 1.0) || !(b >= 0.0 && b <= 1.0)) {
            throw std::domain_error("Marginals: (" + std::to_string(a_) + ", " +
                                    std::to_string(b_) +
                                    ") outside the unit square");
        }
    }
};

/// Sharp bounds [lo, hi] on the joint probability theta11 compatible with
/// given marginals (the Frechet-Hoeffding interval).
struct FeasibleInterval {
    double lo;
    double hi;

    double width() const { return hi - lo; }
    bool degenerate() const { return width() < kDegenerateWidth; }
    bool contains_open(double t) const { return t > lo && t < hi; }
};

inline FeasibleInterval feasible_interval(const Marginals& m) {
    return {std::max(m.a + m.b - 1.0, 0.0), std::min(m.a, m.b)};
}

/// A point of the 3-simplex of joint distributions over two Booleans.
/// theta00 is derived, not stored.
struct JointDistribution {
    double theta11;
    double theta10;
    double theta01;

    JointDistribution(double t11, double t10, double t01)
        : theta11(t11), theta10(t10), theta01(t01) {
        if (!(t11 >= 0.0) || !(t10 >= 0.0) || !(t01 >= 0.0) ||
            !(t11 + t10 + t01 <= 1.0)) {
            throw std::domain_error(
                "JointDistribution: coordinates outside the 3-simplex");
        }
    }

    double theta00() const { return 1.0 - theta11 - theta10 - theta01; }
};

/// The joint implied by marginals (a,b) and a feasible theta11. Rounding
/// residue of order eps is flushed to zero so that endpoints of the
/// feasible interval produce valid simplex points.
inline JointDistribution joint_from_marginals(const Marginals& m,
                                              double theta11) {
    const FeasibleInterval iv = feasible_interval(m);
    if (!(theta11 >= iv.lo && theta11 <= iv.hi)) {
        throw std::domain_error(
            "joint_from_marginals: theta11 outside the feasible interval");
    }
    auto flush = [](double v) {
        return (v < 0.0 && v > -1e-15) ? 0.0 : v;
    };
    const double t10 = flush(m.a - theta11);
    const double t01 = flush(m.b - theta11);
    double t11 = theta11;
    if (t11 + t10 + t01 > 1.0 && t11 + t10 + t01 < 1.0 + 1e-15) {
        t11 = 1.0 - t10 - t01;
    }
    return {t11, t10, t01};
}

namespace detail {

/// asin(sqrt(t)) evaluated as atan2(sqrt(t), sqrt(1-t)); well conditioned
/// at both ends of [0,1].
inline double asin_sqrt(double t) {
    return std::atan2(std::sqrt(t), std::sqrt(1.0 - t));
}

/// Mass of the untruncated arcsine measure dx / sqrt(x(1-x)) over [lo, hi]:
/// 2 asin(sqrt(hi)) - 2 asin(sqrt(lo)).
inline double arcsine_mass(const FeasibleInterval& iv) {
    return 2.0 * (asin_sqrt(iv.hi) - asin_sqrt(iv.lo));
}

}  // namespace detail

/// Posterior density of theta11 given the marginals: the Beta(1/2,1/2)
/// shape restricted to the feasible interval and renormalized.
inline double truncated_arcsine_pdf(double theta11, const Marginals& m) {
    const FeasibleInterval iv = feasible_interval(m);
    if (iv.degenerate()) {
        throw degenerate_interval_error(
            "truncated_arcsine_pdf: feasible interval is degenerate");
    }
    if (!iv.contains_open(theta11)) {
        throw std::domain_error(
            "truncated_arcsine_pdf: theta11 outside the open feasible interval");
    }
    const double z = detail::arcsine_mass(iv);
    return 1.0 / (z * std::sqrt(theta11 * (1.0 - theta11)));
}

}  // namespace optagg
