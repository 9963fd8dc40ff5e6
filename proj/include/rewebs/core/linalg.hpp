#pragma once

// Small fixed-size dense linear algebra used throughout: R^3 vectors under the
// standard identification with so(3), triangularly-stored symmetric matrices
// (3x3 for rotational inertia, 6x6 for the two-factor ellipsoid problem),
// symmetric eigensolvers and inertia signatures.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <utility>

namespace rewebs {

template <int N>
struct Vec {
    std::array<double, N> c{};

    double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

    Vec& operator+=(const Vec& o) {
        for (int i = 0; i < N; ++i) c[i] += o.c[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (int i = 0; i < N; ++i) c[i] -= o.c[i];
        return *this;
    }
    Vec& operator*=(double s) {
        for (auto& v : c) v *= s;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(double s, Vec a) { return a *= s; }
    friend Vec operator*(Vec a, double s) { return a *= s; }
    friend Vec operator/(Vec a, double s) { return a *= (1.0 / s); }
    friend Vec operator-(Vec a) { return a *= -1.0; }
};

using Vec3 = Vec<3>;
using Vec6 = Vec<6>;

template <int N>
inline double dot(const Vec<N>& a, const Vec<N>& b) {
    double s = 0.0;
    for (int i = 0; i < N; ++i) s += a[i] * b[i];
    return s;
}

template <int N>
inline double norm(const Vec<N>& a) {
    return std::sqrt(dot(a, a));
}

template <int N>
inline Vec<N> normalized(const Vec<N>& a) {
    return a / norm(a);
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return Vec3{{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]}};
}

inline Vec6 join(const Vec3& a, const Vec3& b) {
    return Vec6{{a[0], a[1], a[2], b[0], b[1], b[2]}};
}

inline std::pair<Vec3, Vec3> split(const Vec6& v) {
    return {Vec3{{v[0], v[1], v[2]}}, Vec3{{v[3], v[4], v[5]}}};
}

template <int N>
struct Mat {
    std::array<double, static_cast<std::size_t>(N) * N> a{};

    double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * N + j]; }
    double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * N + j]; }

    static Mat identity() {
        Mat m;
        for (int i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    Vec<N> col(int j) const {
        Vec<N> v;
        for (int i = 0; i < N; ++i) v[i] = (*this)(i, j);
        return v;
    }

    friend Vec<N> operator*(const Mat& m, const Vec<N>& v) {
        Vec<N> r;
        for (int i = 0; i < N; ++i) {
            double s = 0.0;
            for (int j = 0; j < N; ++j) s += m(i, j) * v[j];
            r[i] = s;
        }
        return r;
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        Mat r;
        for (int i = 0; i < N; ++i)
            for (int k = 0; k < N; ++k) {
                double s = 0.0;
                for (int j = 0; j < N; ++j) s += x(i, j) * y(j, k);
                r(i, k) = s;
            }
        return r;
    }
};

using Mat3 = Mat<3>;

// Symmetric matrix stored by its lower triangle, so S(i,j) == S(j,i) holds
// bit-for-bit by construction.
template <int N>
struct Sym {
    static constexpr int dim = N;
    std::array<double, static_cast<std::size_t>(N) * (N + 1) / 2> t{};

    static constexpr int idx(int i, int j) {
        if (i < j) std::swap(i, j);
        return i * (i + 1) / 2 + j;
    }

    double& operator()(int i, int j) { return t[static_cast<std::size_t>(idx(i, j))]; }
    double operator()(int i, int j) const { return t[static_cast<std::size_t>(idx(i, j))]; }

    static Sym identity() {
        Sym s;
        for (int i = 0; i < N; ++i) s(i, i) = 1.0;
        return s;
    }

    static Sym diagonal(const Vec<N>& d) {
        Sym s;
        for (int i = 0; i < N; ++i) s(i, i) = d[i];
        return s;
    }

    Mat<N> full() const {
        Mat<N> m;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) m(i, j) = (*this)(i, j);
        return m;
    }

    double trace() const {
        double s = 0.0;
        for (int i = 0; i < N; ++i) s += (*this)(i, i);
        return s;
    }

    Sym& operator+=(const Sym& o) {
        for (std::size_t i = 0; i < t.size(); ++i) t[i] += o.t[i];
        return *this;
    }
    Sym& operator-=(const Sym& o) {
        for (std::size_t i = 0; i < t.size(); ++i) t[i] -= o.t[i];
        return *this;
    }
    Sym& operator*=(double s) {
        for (auto& v : t) v *= s;
        return *this;
    }
    friend Sym operator+(Sym a, const Sym& b) { return a += b; }
    friend Sym operator-(Sym a, const Sym& b) { return a -= b; }
    friend Sym operator*(double s, Sym a) { return a *= s; }

    friend Vec<N> operator*(const Sym& m, const Vec<N>& v) {
        Vec<N> r;
        for (int i = 0; i < N; ++i) {
            double s = 0.0;
            for (int j = 0; j < N; ++j) s += m(i, j) * v[j];
            r[i] = s;
        }
        return r;
    }
};

using Sym3 = Sym<3>;
using Sym6 = Sym<6>;

template <int N>
inline double quad_form(const Sym<N>& s, const Vec<N>& v) {
    return dot(v, s * v);
}

template <int N>
inline double frobenius(const Sym<N>& s) {
    double q = 0.0;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) q += s(i, j) * s(i, j);
    return std::sqrt(q);
}

// g S g^T for an orthogonal change of frame; this is how the locked inertia
// tensor transforms under a rotation of the section.
inline Sym3 conjugate(const Mat3& g, const Sym3& s) {
    Mat3 m = g * (s.full() * [&] {
                Mat3 gt;
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) gt(i, j) = g(j, i);
                return gt;
            }());
    Sym3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j <= i; ++j) r(i, j) = 0.5 * (m(i, j) + m(j, i));
    return r;
}

// so(3) <-> R^3: hat(v) w = v x w.
inline Mat3 hat(const Vec3& v) {
    Mat3 m;
    m(0, 1) = -v[2];
    m(0, 2) = v[1];
    m(1, 0) = v[2];
    m(1, 2) = -v[0];
    m(2, 0) = -v[1];
    m(2, 1) = v[0];
    return m;
}

inline Vec3 unhat(const Mat3& m) { return Vec3{{m(2, 1), m(0, 2), m(1, 0)}}; }

// Componentwise cross products: the Lie bracket on so(3) (+) so(3).
inline std::pair<Vec3, Vec3> bracket_so3xso3(const std::pair<Vec3, Vec3>& a,
                                             const std::pair<Vec3, Vec3>& b) {
    return {cross(a.first, b.first), cross(a.second, b.second)};
}

struct Signature {
    int n_plus = 0;
    int n_zero = 0;
    int n_minus = 0;

    friend bool operator==(const Signature&, const Signature&) = default;
};

namespace detail {

// Cyclic Jacobi sweeps; deterministic and accurate enough for the 1e-10
// reconstruction bound at any dimension we use.
template <int N>
inline void jacobi_eig(const Sym<N>& s, std::array<double, static_cast<std::size_t>(N)>& w,
                       Mat<N>& v) {
    Mat<N> a = s.full();
    v = Mat<N>::identity();
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j) off += a(i, j) * a(i, j);
        if (off < 1e-300) break;
        double thresh = (sweep < 3) ? 0.2 * off / (N * N) : 0.0;
        for (int p = 0; p < N; ++p) {
            for (int q = p + 1; q < N; ++q) {
                double apq = a(p, q);
                double g = 100.0 * std::abs(apq);
                if (sweep > 3 && std::abs(a(p, p)) + g == std::abs(a(p, p)) &&
                    std::abs(a(q, q)) + g == std::abs(a(q, q))) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                if (apq * apq <= thresh) continue;
                double theta = 0.5 * (a(q, q) - a(p, p)) / apq;
                double t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                if (theta < 0.0) t = -t;
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double sn = t * c;
                double tau = sn / (1.0 + c);
                double h = t * apq;
                a(p, p) -= h;
                a(q, q) += h;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                auto rotate = [&](double& x, double& y) {
                    double xo = x, yo = y;
                    x = xo - sn * (yo + xo * tau);
                    y = yo + sn * (xo - yo * tau);
                };
                for (int i = 0; i < N; ++i) {
                    if (i != p && i != q) {
                        double aip = a(i, p), aiq = a(i, q);
                        rotate(aip, aiq);
                        a(i, p) = aip;
                        a(p, i) = aip;
                        a(i, q) = aiq;
                        a(q, i) = aiq;
                    }
                    double vip = v(i, p), viq = v(i, q);
                    rotate(vip, viq);
                    v(i, p) = vip;
                    v(i, q) = viq;
                }
            }
        }
    }
    for (int i = 0; i < N; ++i) w[i] = a(i, i);
}

// Closed-form eigenvalues of a symmetric 3x3 (trigonometric form of the
// cubic), ascending.
inline std::array<double, 3> eig3_values_analytic(const Sym3& s) {
    double p1 = s(0, 1) * s(0, 1) + s(0, 2) * s(0, 2) + s(1, 2) * s(1, 2);
    if (p1 == 0.0) {
        std::array<double, 3> w{s(0, 0), s(1, 1), s(2, 2)};
        std::sort(w.begin(), w.end());
        return w;
    }
    double q = s.trace() / 3.0;
    double p2 = 0.0;
    for (int i = 0; i < 3; ++i) p2 += (s(i, i) - q) * (s(i, i) - q);
    p2 += 2.0 * p1;
    double p = std::sqrt(p2 / 6.0);
    // det((S - q I)/p) / 2
    Sym3 b = s;
    for (int i = 0; i < 3; ++i) b(i, i) -= q;
    double det = b(0, 0) * (b(1, 1) * b(2, 2) - b(1, 2) * b(1, 2)) -
                 b(0, 1) * (b(0, 1) * b(2, 2) - b(1, 2) * b(0, 2)) +
                 b(0, 2) * (b(0, 1) * b(1, 2) - b(1, 1) * b(0, 2));
    double r = det / (2.0 * p * p * p);
    r = std::clamp(r, -1.0, 1.0);
    double phi = std::acos(r) / 3.0;
    double big = q + 2.0 * p * std::cos(phi);
    double small = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
    return {small, 3.0 * q - big - small, big};
}

}  // namespace detail

template <int N>
struct EigenFrame {
    std::array<double, N> values{};   // ascending
    Mat<N> vectors;                   // orthonormal columns, vectors.col(j) <-> values[j]
    std::array<int, N> cluster{};     // multiplicity flag: shared id within a tolerance cluster

    int cluster_size(int j) const {
        int n = 0;
        for (int i = 0; i < N; ++i)
            if (cluster[i] == cluster[j]) ++n;
        return n;
    }
};

using EigenFrame3 = EigenFrame<3>;
using EigenFrame6 = EigenFrame<6>;

namespace detail {

template <int N>
inline void assign_clusters(EigenFrame<N>& f, double tau_mult) {
    int id = 0;
    f.cluster[0] = 0;
    for (int i = 1; i < N; ++i) {
        if (std::abs(f.values[i] - f.values[i - 1]) >= tau_mult * (1.0 + std::abs(f.values[i])))
            ++id;
        f.cluster[i] = id;
    }
}

template <int N>
inline void sort_frame(std::array<double, static_cast<std::size_t>(N)>& w, Mat<N>& v) {
    std::array<int, N> order;
    for (int i = 0; i < N; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return w[a] < w[b]; });
    std::array<double, N> ws = w;
    Mat<N> vs = v;
    for (int j = 0; j < N; ++j) {
        w[j] = ws[order[j]];
        for (int i = 0; i < N; ++i) v(i, j) = vs(i, order[j]);
    }
}

}  // namespace detail

// Symmetric eigenframe, eigenvalues ascending, eigenvectors orthonormal.
// 3x3 takes the closed-form eigenvalues and builds eigenvectors by cross
// products of rows of S - lambda I, falling back to Jacobi whenever the
// spectrum is too clustered for that to be stable.
inline EigenFrame3 eig_sym(const Sym3& s, double tau_mult = 1e-8) {
    EigenFrame3 f;
    std::array<double, 3> w = detail::eig3_values_analytic(s);
    double scale = std::max({std::abs(w[0]), std::abs(w[2]), 1e-300});
    double gap01 = w[1] - w[0], gap12 = w[2] - w[1];
    bool ok = false;
    if (gap01 > 1e-6 * scale && gap12 > 1e-6 * scale) {
        ok = true;
        Mat3 v;
        for (int j = 0; j < 3 && ok; ++j) {
            Sym3 b = s;
            for (int i = 0; i < 3; ++i) b(i, i) -= w[j];
            Vec3 r0{{b(0, 0), b(0, 1), b(0, 2)}};
            Vec3 r1{{b(1, 0), b(1, 1), b(1, 2)}};
            Vec3 r2{{b(2, 0), b(2, 1), b(2, 2)}};
            Vec3 c01 = cross(r0, r1), c02 = cross(r0, r2), c12 = cross(r1, r2);
            Vec3 best = c01;
            if (dot(c02, c02) > dot(best, best)) best = c02;
            if (dot(c12, c12) > dot(best, best)) best = c12;
            double n = norm(best);
            if (n < 1e-12 * scale * scale) {
                ok = false;
                break;
            }
            best = best / n;
            for (int i = 0; i < 3; ++i) v(i, j) = best[i];
        }
        if (ok) {
            // residual check; near-degenerate input goes to Jacobi
            double fn = std::max(frobenius(s), 1e-300);
            for (int j = 0; j < 3; ++j) {
                Vec3 vj = v.col(j);
                Vec3 res = s * vj - w[j] * vj;
                if (norm(res) > 1e-11 * fn) ok = false;
            }
            for (int a = 0; a < 3 && ok; ++a)
                for (int b = a + 1; b < 3; ++b)
                    if (std::abs(dot(v.col(a), v.col(b))) > 1e-12) ok = false;
            if (ok) f.vectors = v;
        }
    }
    if (ok) {
        f.values = w;
    } else {
        detail::jacobi_eig(s, f.values, f.vectors);
        detail::sort_frame(f.values, f.vectors);
    }
    detail::assign_clusters(f, tau_mult);
    return f;
}

inline EigenFrame6 eig_sym(const Sym6& s, double tau_mult = 1e-8) {
    EigenFrame6 f;
    detail::jacobi_eig(s, f.values, f.vectors);
    detail::sort_frame(f.values, f.vectors);
    detail::assign_clusters(f, tau_mult);
    return f;
}

// Counts of eigenvalues above +tau_zero / within the band / below -tau_zero.
template <int N>
inline Signature signature(const Sym<N>& s, double tau_zero = 1e-8) {
    std::array<double, N> w;
    Mat<N> v;
    detail::jacobi_eig(s, w, v);
    Signature sig;
    for (int i = 0; i < N; ++i) {
        if (w[i] > tau_zero)
            ++sig.n_plus;
        else if (w[i] < -tau_zero)
            ++sig.n_minus;
        else
            ++sig.n_zero;
    }
    return sig;
}

}  // namespace rewebs
