#pragma once

// Monic cubic characteristic polynomials of 3x3 symmetric matrices, their
// discriminant (zero exactly at repeated eigenvalues), and a trigonometric
// real-root solver used as an independent oracle against eig_sym.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "rewebs/core/linalg.hpp"

namespace rewebs {

// chi(t) = c3 t^3 + c2 t^2 + c1 t + c0 with the convention chi(t) = det(t I - S),
// so c3 = +1 for every char_poly result.
struct CubicPoly {
    double c0 = 0.0, c1 = 0.0, c2 = 0.0, c3 = 1.0;

    double eval(double t) const { return ((c3 * t + c2) * t + c1) * t + c0; }
};

inline CubicPoly char_poly(const Sym3& s) {
    double tr = s.trace();
    double m01 = s(0, 0) * s(1, 1) - s(0, 1) * s(0, 1);
    double m02 = s(0, 0) * s(2, 2) - s(0, 2) * s(0, 2);
    double m12 = s(1, 1) * s(2, 2) - s(1, 2) * s(1, 2);
    double det = s(0, 0) * (s(1, 1) * s(2, 2) - s(1, 2) * s(1, 2)) -
                 s(0, 1) * (s(0, 1) * s(2, 2) - s(1, 2) * s(0, 2)) +
                 s(0, 2) * (s(0, 1) * s(1, 2) - s(1, 1) * s(0, 2));
    CubicPoly p;
    p.c3 = 1.0;
    p.c2 = -tr;
    p.c1 = m01 + m02 + m12;
    p.c0 = -det;
    return p;
}

// Standard cubic discriminant; nonnegative for real spectra, zero iff a root
// is repeated.
inline double discriminant(const CubicPoly& p) {
    double a = p.c3, b = p.c2, c = p.c1, d = p.c0;
    return 18.0 * a * b * c * d - 4.0 * b * b * b * d + b * b * c * c - 4.0 * a * c * c * c -
           27.0 * a * a * d * d;
}

// Real roots, ascending. Assumes a real spectrum (clamps the trig argument),
// which holds for characteristic polynomials of symmetric matrices.
inline std::array<double, 3> cubic_roots(const CubicPoly& p) {
    double b = p.c2 / p.c3, c = p.c1 / p.c3, d = p.c0 / p.c3;
    double q = (b * b - 3.0 * c) / 9.0;
    double r = (b * (2.0 * b * b - 9.0 * c) + 27.0 * d) / 54.0;
    std::array<double, 3> roots;
    if (q <= 0.0) {
        // triple or near-triple root
        double x = -b / 3.0;
        roots = {x, x, x};
        return roots;
    }
    double t = r / std::sqrt(q * q * q);
    t = std::clamp(t, -1.0, 1.0);
    double phi = std::acos(t);
    double m = -2.0 * std::sqrt(q);
    roots[0] = m * std::cos(phi / 3.0) - b / 3.0;
    roots[1] = m * std::cos((phi + 2.0 * std::numbers::pi) / 3.0) - b / 3.0;
    roots[2] = m * std::cos((phi - 2.0 * std::numbers::pi) / 3.0) - b / 3.0;
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace rewebs
