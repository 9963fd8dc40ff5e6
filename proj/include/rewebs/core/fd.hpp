#pragma once

// Finite-difference stencils shared by the solver and stability modules.
// Second derivatives use 5-point central differences with one Richardson
// extrapolation step; the amended potential has poles near vanishing inertia
// eigenvalues and collisions, so steps scale with the base point.

#include <array>
#include <cmath>
#include <functional>

#include "rewebs/core/linalg.hpp"

namespace rewebs {

inline double fd_step(double x_scale) { return 1e-4 * (1.0 + std::abs(x_scale)); }

template <typename F>
inline double deriv_central(F&& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

// 5-point first derivative.
template <typename F>
inline double deriv5(F&& f, double x, double h) {
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12.0 * h);
}

// 5-point second derivative.
template <typename F>
inline double deriv2_5(F&& f, double x, double h) {
    return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) /
           (12.0 * h * h);
}

template <int N, typename F>
inline Vec<N> gradient_fd(F&& f, const Vec<N>& x, double h) {
    Vec<N> g;
    for (int i = 0; i < N; ++i) {
        auto fi = [&](double s) {
            Vec<N> y = x;
            y[i] = s;
            return f(y);
        };
        g[i] = deriv5(fi, x[i], h);
    }
    return g;
}

namespace detail {

template <int N, typename F>
inline Sym<N> hessian_fd_once(F&& f, const Vec<N>& x, double h) {
    Sym<N> out;
    for (int i = 0; i < N; ++i) {
        auto fi = [&](double s) {
            Vec<N> y = x;
            y[i] = s;
            return f(y);
        };
        out(i, i) = deriv2_5(fi, x[i], h);
    }
    for (int i = 0; i < N; ++i) {
        for (int j = i + 1; j < N; ++j) {
            auto fij = [&](double a, double b) {
                Vec<N> y = x;
                y[i] = a;
                y[j] = b;
                return f(y);
            };
            double xi = x[i], xj = x[j];
            out(i, j) = (fij(xi + h, xj + h) - fij(xi + h, xj - h) - fij(xi - h, xj + h) +
                         fij(xi - h, xj - h)) /
                        (4.0 * h * h);
        }
    }
    return out;
}

}  // namespace detail

template <int N, typename F>
inline Sym<N> hessian_fd(F&& f, const Vec<N>& x, double h) {
    Sym<N> coarse = detail::hessian_fd_once(f, x, h);
    Sym<N> fine = detail::hessian_fd_once(f, x, 0.5 * h);
    Sym<N> out;
    // diagonal entries are O(h^4), mixed O(h^2); extrapolate each at its order
    for (int i = 0; i < N; ++i)
        out(i, i) = (16.0 * fine(i, i) - coarse(i, i)) / 15.0;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) out(i, j) = (4.0 * fine(i, j) - coarse(i, j)) / 3.0;
    return out;
}

// Bracketed bisection to ~1e-15 relative; f(lo) and f(hi) must differ in sign.
template <typename F>
inline double bisect(F&& f, double lo, double hi, int iters = 200) {
    double flo = f(lo);
    for (int i = 0; i < iters; ++i) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        double fm = f(mid);
        if ((flo <= 0.0) == (fm <= 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace rewebs
