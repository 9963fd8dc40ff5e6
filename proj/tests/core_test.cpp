#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "rewebs/core/cubic.hpp"
#include "rewebs/core/fd.hpp"
#include "rewebs/core/linalg.hpp"

namespace {

using namespace rewebs;

Sym3 random_sym3(std::mt19937_64& rng, double scale = 2.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    Sym3 s;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j <= i; ++j) s(i, j) = u(rng);
    return s;
}

Vec3 random_vec3(std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return Vec3{{u(rng), u(rng), u(rng)}};
}

Mat3 random_rotation(std::mt19937_64& rng) {
    // exp of a random skew matrix via Rodrigues
    Vec3 axis = normalized(random_vec3(rng));
    std::uniform_real_distribution<double> u(0.0, std::numbers::pi);
    double t = u(rng);
    Mat3 k = hat(axis);
    Mat3 r = Mat3::identity();
    Mat3 k2 = k * k;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r(i, j) += std::sin(t) * k(i, j) + (1.0 - std::cos(t)) * k2(i, j);
    return r;
}

TEST(Hat, ZeroVectorGivesZeroMatrix) {
    Mat3 m = hat(Vec3{{0, 0, 0}});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) EXPECT_EQ(m(i, j), 0.0);
}

TEST(Hat, MatchesCrossProduct) {
    Vec3 e3{{0, 0, 1}}, e1{{1, 0, 0}};
    Vec3 r = hat(e3) * e1;
    EXPECT_EQ(r[0], 0.0);
    EXPECT_EQ(r[1], 1.0);
    EXPECT_EQ(r[2], 0.0);

    std::mt19937_64 rng(7);
    for (int k = 0; k < 100; ++k) {
        Vec3 v = random_vec3(rng, 3.0), w = random_vec3(rng, 3.0);
        Vec3 a = hat(v) * w, b = cross(v, w);
        for (int i = 0; i < 3; ++i) EXPECT_NEAR(a[i], b[i], 1e-14);
    }
}

TEST(Hat, UnhatRoundTrip) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 100; ++k) {
        Vec3 v = random_vec3(rng, 5.0);
        Vec3 w = unhat(hat(v));
        for (int i = 0; i < 3; ++i) EXPECT_EQ(w[i], v[i]);
    }
}

TEST(EigSym, ScalarMatrixIsOneCluster) {
    Sym3 s = Sym3::diagonal(Vec3{{2, 2, 2}});
    EigenFrame3 f = eig_sym(s);
    for (int i = 0; i < 3; ++i) EXPECT_DOUBLE_EQ(f.values[i], 2.0);
    EXPECT_EQ(f.cluster[0], f.cluster[2]);
    EXPECT_EQ(f.cluster_size(0), 3);
}

TEST(EigSym, TripleCollisionShapeHasZeroModeAlongOnes) {
    // pi(Q) at x = (1,1,1): diagonal 2, off-diagonal -1; row sums vanish
    Sym3 s;
    for (int i = 0; i < 3; ++i) s(i, i) = 2.0;
    s(0, 1) = s(0, 2) = s(1, 2) = -1.0;
    EigenFrame3 f = eig_sym(s);
    EXPECT_NEAR(f.values[0], 0.0, 1e-12);
    EXPECT_NEAR(f.values[1], 3.0, 1e-12);
    EXPECT_NEAR(f.values[2], 3.0, 1e-12);
    Vec3 v0 = f.vectors.col(0);
    Vec3 ones = normalized(Vec3{{1, 1, 1}});
    EXPECT_NEAR(std::abs(dot(v0, ones)), 1.0, 1e-12);
    EXPECT_EQ(f.cluster_size(1), 2);
    EXPECT_EQ(f.cluster_size(0), 1);
}

TEST(EigSym, MatchesCharPolyRoots) {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 200; ++k) {
        Sym3 s = random_sym3(rng);
        EigenFrame3 f = eig_sym(s);
        auto roots = cubic_roots(char_poly(s));
        for (int i = 0; i < 3; ++i) EXPECT_NEAR(f.values[i], roots[i], 1e-9);
    }
}

TEST(EigSym, Reconstruction3) {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 300; ++k) {
        Sym3 s = random_sym3(rng);
        EigenFrame3 f = eig_sym(s);
        double fn = frobenius(s);
        for (int j = 0; j < 3; ++j) {
            Vec3 v = f.vectors.col(j);
            EXPECT_NEAR(norm(s * v - f.values[j] * v), 0.0, 1e-10 * std::max(fn, 1.0));
        }
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                EXPECT_NEAR(dot(f.vectors.col(a), f.vectors.col(b)), a == b ? 1.0 : 0.0, 1e-12);
    }
}

TEST(EigSym, Reconstruction6) {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int k = 0; k < 100; ++k) {
        Sym6 s;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j <= i; ++j) s(i, j) = u(rng);
        EigenFrame6 f = eig_sym(s);
        double fn = frobenius(s);
        for (int j = 0; j < 6; ++j) {
            Vec6 v = f.vectors.col(j);
            EXPECT_NEAR(norm(s * v - f.values[j] * v), 0.0, 1e-10 * std::max(fn, 1.0));
        }
        for (int j = 0; j + 1 < 6; ++j) EXPECT_LE(f.values[j], f.values[j + 1]);
    }
}

TEST(CharPoly, TwoBodyFactoredFormAtConcreteAngle) {
    // Locked inertia of the spherical pair at theta = pi/3, m1 = 1, m2 = 2.
    double m1 = 1.0, m2 = 2.0, th = std::numbers::pi / 3.0;
    Sym3 s;
    s(0, 0) = m2 * std::sin(th) * std::sin(th);
    s(0, 1) = -0.5 * m2 * std::sin(2.0 * th);
    s(1, 1) = m1 + m2 * std::cos(th) * std::cos(th);
    s(2, 2) = m1 + m2;
    CubicPoly p = char_poly(s);
    // (m1+m2-t)(2t-m1-m2-sqrt(D))(2t-m1-m2+sqrt(D)) equals -4 * det(tI - S);
    // the monic convention absorbs the -4.
    double d = m1 * m1 + 2.0 * m1 * m2 * std::cos(2.0 * th) + m2 * m2;
    auto factored = [&](double t) {
        return (m1 + m2 - t) * (2.0 * t - m1 - m2 - std::sqrt(d)) *
               (2.0 * t - m1 - m2 + std::sqrt(d)) / (-4.0);
    };
    for (double t : {-1.0, 0.0, 0.5, 1.7, 3.0, 4.2}) EXPECT_NEAR(p.eval(t), factored(t), 1e-12);
}

TEST(Discriminant, RepeatedEigenvalueGivesZero) {
    CubicPoly p = char_poly(Sym3::diagonal(Vec3{{1, 1, 5}}));
    EXPECT_NEAR(discriminant(p), 0.0, 1e-12);
}

TEST(Discriminant, NonnegativeForSymmetricMatrices) {
    std::mt19937_64 rng(23);
    for (int k = 0; k < 500; ++k) {
        Sym3 s = random_sym3(rng);
        EXPECT_GE(discriminant(char_poly(s)), -1e-12);
    }
}

TEST(Discriminant, ThreeBodyRepeatedLocusIsTheDiagonalLine) {
    // pi(Q) with x = (t,t,t) sits on the repeated locus; generic points do not.
    auto pi_of = [](const Vec3& x) {
        Sym3 s;
        for (int i = 0; i < 3; ++i) s(i, i) = 2.0;
        s(0, 1) = -x[0];
        s(0, 2) = -x[1];
        s(1, 2) = -x[2];
        return s;
    };
    for (double t : {-0.4, -0.2, 0.1, 0.3, 0.6, 0.9}) {
        double disc = discriminant(char_poly(pi_of(Vec3{{t, t, t}})));
        EXPECT_NEAR(disc, 0.0, 1e-12) << "t=" << t;
    }
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(-0.6, 0.6);
    int off_line_checked = 0;
    for (int k = 0; k < 100; ++k) {
        Vec3 x{{u(rng), u(rng), u(rng)}};
        double spread = std::abs(x[0] * x[0] - x[1] * x[1]) + std::abs(x[1] * x[1] - x[2] * x[2]);
        if (spread < 0.05) continue;
        ++off_line_checked;
        EXPECT_GT(discriminant(char_poly(pi_of(x))), 1e-8);
    }
    EXPECT_GT(off_line_checked, 50);
}

TEST(SignatureOf, IdentityAndIndefinite) {
    Signature s1 = signature(Sym3::identity());
    EXPECT_EQ(s1, (Signature{3, 0, 0}));
    Signature s2 = signature(Sym3::diagonal(Vec3{{1, -1, 0}}), 1e-8);
    EXPECT_EQ(s2, (Signature{1, 1, 1}));
}

TEST(SignatureOf, InvariantUnderOrthogonalConjugation) {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 100; ++k) {
        Sym3 s = random_sym3(rng);
        Mat3 g = random_rotation(rng);
        EXPECT_EQ(signature(s, 1e-10), signature(conjugate(g, s), 1e-10));
    }
}

TEST(Bracket, AntisymmetryAndBasisCase) {
    std::pair<Vec3, Vec3> a{Vec3{{1, 2, 3}}, Vec3{{-1, 0, 2}}};
    auto z = bracket_so3xso3(a, a);
    EXPECT_EQ(norm(z.first), 0.0);
    EXPECT_EQ(norm(z.second), 0.0);
    std::pair<Vec3, Vec3> e{Vec3{{1, 0, 0}}, Vec3{{0, 1, 0}}};
    auto z2 = bracket_so3xso3(e, e);
    EXPECT_EQ(norm(z2.first), 0.0);
    EXPECT_EQ(norm(z2.second), 0.0);
}

TEST(Bracket, JacobiIdentity) {
    std::mt19937_64 rng(37);
    for (int k = 0; k < 50; ++k) {
        std::pair<Vec3, Vec3> a{random_vec3(rng), random_vec3(rng)};
        std::pair<Vec3, Vec3> b{random_vec3(rng), random_vec3(rng)};
        std::pair<Vec3, Vec3> c{random_vec3(rng), random_vec3(rng)};
        auto t1 = bracket_so3xso3(a, bracket_so3xso3(b, c));
        auto t2 = bracket_so3xso3(b, bracket_so3xso3(c, a));
        auto t3 = bracket_so3xso3(c, bracket_so3xso3(a, b));
        Vec3 r1 = t1.first + t2.first + t3.first;
        Vec3 r2 = t1.second + t2.second + t3.second;
        EXPECT_LT(norm(r1), 1e-12);
        EXPECT_LT(norm(r2), 1e-12);
    }
}

TEST(Fd, HessianOfQuadraticIsExact) {
    auto f = [](const Vec3& x) {
        return 2.0 * x[0] * x[0] - x[0] * x[1] + 3.0 * x[1] * x[2] + 0.5 * x[2] * x[2];
    };
    Sym3 h = hessian_fd(f, Vec3{{0.3, -0.2, 0.9}}, 1e-3);
    EXPECT_NEAR(h(0, 0), 4.0, 1e-8);
    EXPECT_NEAR(h(0, 1), -1.0, 1e-8);
    EXPECT_NEAR(h(1, 2), 3.0, 1e-8);
    EXPECT_NEAR(h(2, 2), 1.0, 1e-8);
    EXPECT_NEAR(h(0, 2), 0.0, 1e-8);
}

}  // namespace
