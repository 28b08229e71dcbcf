#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "optagg/marginals.hpp"

namespace optagg {

namespace detail {

/// Carlson symmetric integral R_F(x,y,z), duplication algorithm
/// [Carlson, Numer. Math. 33 (1979)]. errtol 2.5e-3 leaves the series
/// truncation error below 1e-16 relative.
inline double carlson_rf(double x, double y, double z) {
    constexpr double errtol = 2.5e-3;
    double xn = x, yn = y, zn = z;
    double mu, xdev, ydev, zdev;
    for (int it = 0; it < 200; ++it) {
        mu = (xn + yn + zn) / 3.0;
        xdev = 2.0 - (mu + xn) / mu;
        ydev = 2.0 - (mu + yn) / mu;
        zdev = 2.0 - (mu + zn) / mu;
        if (std::max({std::abs(xdev), std::abs(ydev), std::abs(zdev)}) <
            errtol) {
            break;
        }
        const double xroot = std::sqrt(xn);
        const double yroot = std::sqrt(yn);
        const double zroot = std::sqrt(zn);
        const double lam = xroot * (yroot + zroot) + yroot * zroot;
        xn = 0.25 * (xn + lam);
        yn = 0.25 * (yn + lam);
        zn = 0.25 * (zn + lam);
    }
    const double e2 = xdev * ydev - zdev * zdev;
    const double e3 = xdev * ydev * zdev;
    const double s =
        1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0;
    return s / std::sqrt(mu);
}

}  // namespace detail

/// Arguments of the Legendre-form integral K(phi, m) with parameter m
/// (the square of the modulus).
struct EllipticArgs {
    double phi;
    double m;

    EllipticArgs(double phi_, double m_) : phi(phi_), m(m_) {
        if (!(phi >= 0.0 && phi <= M_PI / 2.0)) {
            throw std::domain_error("EllipticArgs: phi outside [0, pi/2]");
        }
        if (!(m >= 0.0 && m <= 1.0)) {
            throw std::domain_error("EllipticArgs: m outside [0, 1]");
        }
        if (m == 1.0 && phi >= M_PI / 2.0) {
            throw std::domain_error("EllipticArgs: divergent at m=1, phi=pi/2");
        }
    }
};

/// Incomplete elliptic integral of the first kind,
/// K(phi, m) = int_0^phi (1 - m sin^2 t)^(-1/2) dt,
/// via K(phi, m) = sin(phi) R_F(cos^2 phi, 1 - m sin^2 phi, 1).
inline double incomplete_elliptic_k(const EllipticArgs& args) {
    const double s = std::sin(args.phi);
    if (s == 0.0) return 0.0;
    const double s2 = s * s;
    const double c2 = std::max(0.0, 1.0 - s2);
    const double y = 1.0 - args.m * s2;
    if (!(y > 0.0)) {
        throw std::domain_error("incomplete_elliptic_k: m sin^2(phi) >= 1");
    }
    return s * detail::carlson_rf(c2, y, 1.0);
}

inline double incomplete_elliptic_k(double phi, double m) {
    return incomplete_elliptic_k(EllipticArgs{phi, m});
}

/// Complete integral K(pi/2, m), by the arithmetic-geometric mean:
/// K = pi / (2 agm(1, sqrt(1-m))). Diverges logarithmically as m -> 1.
inline double complete_elliptic_k(double m) {
    if (!(m >= 0.0 && m < 1.0)) {
        throw std::domain_error("complete_elliptic_k: m outside [0, 1)");
    }
    double an = 1.0;
    double gn = std::sqrt(1.0 - m);
    while (an - gn > 1e-16 * an) {
        const double am = 0.5 * (an + gn);
        gn = std::sqrt(an * gn);
        an = am;
    }
    return M_PI / (an + gn);
}

/// Antiderivative of the marginal-prior integrand
/// pi^-2 (x(a-x)(b-x)(1+x-a-b))^(-1/2), valid for b < a, a+b > 1 and
/// x in the feasible interval [a+b-1, b]. Increases from a negative value
/// at the lower limit to 0 at x = b.
inline double antiderivative_I(double x, const Marginals& m) {
    const double a = m.a, b = m.b;
    if (!(b < a && a + b > 1.0)) {
        throw std::domain_error(
            "antiderivative_I: requires b < a and a + b > 1");
    }
    const FeasibleInterval iv = feasible_interval(m);
    if (!(x >= iv.lo && x <= iv.hi)) {
        throw std::domain_error(
            "antiderivative_I: x outside the feasible interval");
    }
    const double param = a * (1.0 - a) / (b * (1.0 - b));
    double ratio = ((1.0 - b) * (b - x)) / ((1.0 - a) * (a - x));
    ratio = std::clamp(ratio, 0.0, 1.0);
    const double phi = std::asin(std::sqrt(ratio));
    const double k = incomplete_elliptic_k(phi, param);
    // sign factor (b-a)/|b-a| = -1 on the validity region
    return -2.0 / (M_PI * M_PI) / std::sqrt(b * (1.0 - b)) * k;
}

}  // namespace optagg
