#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "reference.hpp"
#include "superosc/oracle.hpp"
#include "superosc/specfun.hpp"

using namespace superosc;
using namespace superosc::specfun;

TEST(Hypergeometric, DegreeZeroIsOne) { EXPECT_EQ(hyp2f1_terminating(0, -5, -7, 2), 1.0); }

TEST(Hypergeometric, FirstDegreeMatchesHandExpansion) {
    for (double p : {0.2, 0.5, 0.7})
        for (int N = 1; N <= 6; ++N)
            for (int x = 0; x <= N; ++x)
                EXPECT_NEAR(hyp2f1_terminating(1, -x, -N, 1.0 / p), 1.0 - x / (p * N), 1e-14);
}

TEST(Hypergeometric, ZeroUpperParameterKillsTail) { EXPECT_EQ(hyp2f1_terminating(3, 0, -3, 1), 1.0); }

TEST(Hypergeometric, VanishingDenominatorThrows) {
    EXPECT_THROW(hyp2f1_terminating(3, -5, -1, 1.0), std::domain_error);
    EXPECT_THROW(hyp2f1_terminating(-1, 1, 1, 1.0), std::domain_error);
}

TEST(Hypergeometric, OneF1AndThreeF2AgainstDirectSums) {
    // 1F1(-2; 3; z) = 1 - 2z/3 + z^2/12
    EXPECT_NEAR(hyp1f1_terminating(2, 3.0, 1.5), 1.0 - 1.0 + 2.25 / 12.0, 1e-15);
    // 3F2(-1, a, b; c, d; 1) = 1 - ab/(cd)
    EXPECT_NEAR(hyp3f2_terminating_unit(1, 2.0, 3.0, -4.0, 1.5), 1.0 + 6.0 / 6.0, 1e-15);
}

TEST(Krawtchouk, TrivialValues) {
    for (int N = 0; N <= 10; ++N)
        for (int x = 0; x <= N; ++x) {
            EXPECT_EQ(krawtchouk(0, x, 0.3, N), 1.0);
            EXPECT_EQ(krawtchouk(x, 0, 0.3, N), 1.0);
        }
    EXPECT_DOUBLE_EQ(krawtchouk(1, 1, 0.5, 1), -1.0);
}

TEST(Krawtchouk, SymmetricInDegreeAndArgument) {
    for (double p : {0.1, 0.5, 0.85})
        for (int n = 0; n <= 20; ++n)
            for (int x = 0; x <= 20; ++x) {
                const double a = krawtchouk(n, x, p, 20);
                EXPECT_NEAR(a, krawtchouk(x, n, p, 20), 1e-12 * std::max(1.0, std::fabs(a)));
            }
}

TEST(Krawtchouk, MatchesExactRationals) {
    struct Frac { long num, den; };
    for (Frac f : {Frac{1, 3}, Frac{2, 7}, Frac{5, 6}, Frac{1, 2}}) {
        const double p = static_cast<double>(f.num) / f.den;
        for (int N = 1; N <= oracle::kExactMaxOrder; ++N)
            for (int n = 0; n <= N; ++n)
                for (int x = 0; x <= N; ++x) {
                    const double exact =
                        static_cast<double>(oracle::krawtchouk_exact(n, x, f.num, f.den, N));
                    EXPECT_NEAR(krawtchouk(n, x, p, N), exact, 1e-13 * std::max(1.0, std::fabs(exact)))
                        << "n=" << n << " x=" << x << " N=" << N << " p=" << p;
                }
    }
}

TEST(Krawtchouk, WeightAndNorm) {
    EXPECT_NEAR(krawtchouk_weight(0, 0.3, 7), std::pow(0.7, 7), 1e-15);
    EXPECT_DOUBLE_EQ(krawtchouk_norm(0, 0.3, 7), 1.0);
    double sum = 0.0;
    for (int x = 0; x <= 2; ++x) sum += krawtchouk_weight(x, 0.5, 2) * std::pow(krawtchouk(1, x, 0.5, 2), 2);
    EXPECT_NEAR(sum, 0.5, 1e-15);
    EXPECT_NEAR(krawtchouk_norm(1, 0.5, 2), 0.5, 1e-15);
}

TEST(Krawtchouk, WeightsSurviveLargeOrder) {
    double total = 0.0;
    for (int x = 0; x <= 200; ++x) {
        const double w = krawtchouk_weight(x, 0.37, 200);
        ASSERT_TRUE(std::isfinite(w));
        total += w;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
    EXPECT_TRUE(std::isfinite(krawtchouk_norm(100, 0.37, 200)));
}

TEST(Krawtchouk, NormalizedSmallValues) {
    for (double p : {0.2, 0.6})
        EXPECT_NEAR(krawtchouk_normalized(0, 0, p, 9), std::pow(1 - p, 4.5), 1e-15);
    EXPECT_NEAR(krawtchouk_normalized(1, 0, 0.5, 1), 1 / std::numbers::sqrt2, 1e-15);
}

TEST(Krawtchouk, NormalizedMatchesHighPrecisionReference) {
    for (double p : {0.1, 0.5, 0.9})
        for (int N : {7, 30, 60})
            for (int n = 0; n <= N; n += (N > 10 ? 7 : 1))
                for (int x = 0; x <= N; x += (N > 10 ? 5 : 1))
                    EXPECT_NEAR(krawtchouk_normalized(n, x, p, N),
                                reference::krawtchouk_normalized(n, x, p, N), 1e-13)
                        << "n=" << n << " x=" << x << " N=" << N << " p=" << p;
}

TEST(KrawtchoukTable, MatchesHighPrecisionReference) {
    for (double p : {0.1, 0.5, 0.9}) {
        const KrawtchoukTable t(p, 60);
        for (int n = 0; n <= 60; n += 3)
            for (int x = 0; x <= 60; x += 4)
                EXPECT_NEAR(t(n, x), reference::krawtchouk_normalized(n, x, p, 60), 1e-13)
                    << "n=" << n << " x=" << x << " p=" << p;
    }
}

TEST(KrawtchoukTable, Orthonormal) {
    for (double p : {0.1, 0.5, 0.9})
        for (int N = 0; N <= 60; ++N) {
            const KrawtchoukTable t(p, N);
            const auto& m = t.matrix();
            const double r = (m * m.transpose() - Eigen::MatrixXd::Identity(N + 1, N + 1)).cwiseAbs().maxCoeff();
            EXPECT_LE(r, 1e-10) << "N=" << N << " p=" << p;
        }
}

TEST(KrawtchoukTable, EmptyFamilyAndBadParameter) {
    EXPECT_EQ(KrawtchoukTable(0.4, -1).matrix().size(), 0);
    EXPECT_THROW(KrawtchoukTable(1.0, 3), std::domain_error);
    EXPECT_THROW(KrawtchoukTable(0.4, -2), std::domain_error);
}

TEST(Krawtchouk, ForwardShift) {
    // K_k(n+1; p, j) - K_k(n; p, j) = -(k/(p j)) K_{k-1}(n; p, j-1)
    for (double p : {0.1, 0.3, 0.5, 0.7, 0.9})
        for (int j = 1; j <= 60; j += (j < 10 ? 1 : 7))
            for (int k = 1; k <= j; ++k)
                for (int n = 0; n <= j - 1; ++n) {
                    const double a = krawtchouk(k, n + 1, p, j);
                    const double b = krawtchouk(k, n, p, j);
                    const double c = -(k / (p * j)) * krawtchouk(k - 1, n, p, j - 1);
                    const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
                    ASSERT_LE(std::fabs(a - b - c) / scale, 1e-10)
                        << "j=" << j << " k=" << k << " n=" << n << " p=" << p;
                }
}

namespace {

using oracle::Rational;

// (j-n) K_{k-1}(n; p, j-1) - n ((1-p)/p) K_{k-1}(n-1; p, j-1), p = pn/pd.
// The first term carries the factor 0 at n = j, where K_{k-1}(j; p, j-1) is undefined.
Rational backward_lhs(int j, int k, int n, long pn, long pd) {
    const Rational ratio(pd - pn, pn);
    Rational out(0);
    if (n < j) out += Rational(j - n) * oracle::krawtchouk_exact(k - 1, n, pn, pd, j - 1);
    if (n > 0) out -= Rational(n) * ratio * oracle::krawtchouk_exact(k - 1, n - 1, pn, pd, j - 1);
    return out;
}

}  // namespace

TEST(Krawtchouk, BackwardShiftExact) {
    EXPECT_EQ(backward_lhs(1, 1, 0, 1, 3), Rational(1));
    EXPECT_EQ(backward_lhs(1, 1, 1, 1, 3), Rational(-2));
    EXPECT_EQ(oracle::krawtchouk_exact(1, 1, 1, 3, 1), Rational(-2));
    for (long pn : {1L, 2L, 4L})
        for (int j = 1; j <= 8; ++j)
            for (int k = 1; k <= j; ++k)
                for (int n = 0; n <= j; ++n)
                    EXPECT_EQ(backward_lhs(j, k, n, pn, 5),
                              Rational(j) * oracle::krawtchouk_exact(k, n, pn, 5, j))
                        << "j=" << j << " k=" << k << " n=" << n << " p=" << pn << "/5";
}

TEST(Krawtchouk, BackwardShiftNumeric) {
    for (double p : {0.1, 0.5, 0.9})
        for (int j = 1; j <= 60; j += (j < 10 ? 1 : 9))
            for (int k = 1; k <= j; ++k)
                for (int n = 0; n <= j; ++n) {
                    const double t1 = n < j ? (j - n) * krawtchouk(k - 1, n, p, j - 1) : 0.0;
                    const double t2 = n > 0 ? n * ((1 - p) / p) * krawtchouk(k - 1, n - 1, p, j - 1) : 0.0;
                    const double rhs = j * krawtchouk(k, n, p, j);
                    const double scale = std::max({1.0, std::fabs(t1), std::fabs(t2)});
                    ASSERT_LE(std::fabs(t1 - t2 - rhs) / scale, 1e-10)
                        << "j=" << j << " k=" << k << " n=" << n << " p=" << p;
                }
}

TEST(Krawtchouk, ErrorPaths) {
    EXPECT_THROW(krawtchouk(3, 1, 0.5, 2), std::domain_error);
    EXPECT_THROW(krawtchouk(1, 1, 0.0, 2), std::domain_error);
    EXPECT_THROW(krawtchouk_weight(4, 0.5, 3), std::domain_error);
    EXPECT_THROW(krawtchouk_norm(0, 1.0, 3), std::domain_error);
    EXPECT_THROW(krawtchouk_normalized(0, -1, 0.5, 3), std::domain_error);
    EXPECT_THROW(log_binomial(3, 4), std::domain_error);
    EXPECT_THROW(log_factorial(-1), std::domain_error);
    EXPECT_THROW(log_pochhammer(-2.0, 4), std::domain_error);
}

TEST(DualHahn, TrivialValues) {
    for (int x = 0; x <= 8; ++x) EXPECT_EQ(dual_hahn(0, x, 0.5, 1.5, 8), 1.0);
    for (int n = 0; n <= 8; ++n) EXPECT_EQ(dual_hahn(n, 0, 0.5, 1.5, 8), 1.0);
    EXPECT_EQ(dual_hahn_lattice(3, 1.0, 2.0), 3.0 * 7.0);
}

TEST(DualHahn, NormalizedMatchesHighPrecisionReference) {
    for (auto [g, d] : {std::pair{0.5, 0.5}, std::pair{3.0, 7.0}, std::pair{10.0, 10.0}})
        for (int N : {5, 20, 40})
            for (int n = 0; n <= N; n += (N > 5 ? 3 : 1))
                for (int x = 0; x <= N; x += (N > 5 ? 4 : 1))
                    EXPECT_NEAR(dual_hahn_normalized(n, x, g, d, N),
                                reference::dual_hahn_normalized(n, x, g, d, N), 1e-13)
                        << "n=" << n << " x=" << x << " N=" << N << " g=" << g << " d=" << d;
}

TEST(DualHahn, Orthonormal) {
    for (auto [g, d] : {std::pair{0.5, 0.5}, std::pair{3.0, 7.0}})
        for (int N = 0; N <= 40; N += 4) {
            Eigen::MatrixXd m(N + 1, N + 1);
            for (int n = 0; n <= N; ++n)
                for (int x = 0; x <= N; ++x) m(n, x) = dual_hahn_normalized(n, x, g, d, N);
            EXPECT_LE((m * m.transpose() - Eigen::MatrixXd::Identity(N + 1, N + 1)).cwiseAbs().maxCoeff(), 1e-10)
                << "N=" << N << " g=" << g << " d=" << d;
        }
}

TEST(DualHahn, WeightAndNormFormulas) {
    // N = 1, gamma = delta = 1: wbar(0) = 3/(3)_2 = 1/4, wbar(1) = 5*2/((4)_2*2) = 1/4;
    // R_1 takes the values 1 and -1, so the two weights must agree
    EXPECT_NEAR(dual_hahn_weight(0, 1.0, 1.0, 1), 0.25, 1e-15);
    EXPECT_NEAR(dual_hahn_weight(1, 1.0, 1.0, 1), 0.25, 1e-15);
    // hbar(0) = 1/C(delta+1, 1) = 1/2, hbar(1) = 1/C(gamma+1, 1) = 1/2
    EXPECT_NEAR(dual_hahn_norm(0, 1.0, 1.0, 1), 0.5, 1e-15);
    EXPECT_NEAR(dual_hahn_norm(1, 1.0, 1.0, 1), 0.5, 1e-15);
}

TEST(DualHahn, LargeParametersApproachKrawtchouk) {
    const double alpha = 1e6;
    for (int n = 0; n <= 20; ++n)
        for (int k = 0; k <= 20; ++k)
            EXPECT_LE(std::fabs(dual_hahn_normalized(n, k, alpha, alpha, 20) -
                                krawtchouk_normalized(n, k, 0.5, 20)),
                      1e-4);
}

TEST(DualHahn, ErrorPaths) {
    EXPECT_THROW(dual_hahn(1, 1, -1.0, 0.5, 3), std::domain_error);
    EXPECT_THROW(dual_hahn(1, 1, 0.5, -2.0, 3), std::domain_error);
    EXPECT_THROW(dual_hahn_normalized(4, 1, 0.5, 0.5, 3), std::domain_error);
}

TEST(Laguerre, LowDegrees) {
    for (double a : {0.0, 0.5, 3.0})
        for (double x : {0.0, 0.7, 4.0}) {
            EXPECT_DOUBLE_EQ(laguerre(0, a, x), 1.0);
            EXPECT_NEAR(laguerre(1, a, x), a + 1 - x, 1e-14);
            EXPECT_NEAR(laguerre(2, a, x), (x * x - 2 * (a + 2) * x + (a + 1) * (a + 2)) / 2, 1e-13);
        }
}

TEST(Laguerre, OneF1Identity) {
    // 1F1(-n; c+1; x^2) = n!/(c+1)_n L_n^{(c)}(x^2)
    for (double c : {0.4, 2.0, 7.5})
        for (int n = 0; n <= 8; ++n)
            for (double x : {0.3, 1.1, 2.5}) {
                const double lhs = hyp1f1_terminating(n, c + 1, x * x);
                const double rhs = std::exp(log_factorial(n) - log_pochhammer(c + 1, n).log_abs) *
                                   laguerre(n, c, x * x);
                EXPECT_NEAR(lhs, rhs, 1e-12 * std::max(1.0, std::fabs(lhs)));
            }
}

TEST(Laguerre, ErrorPaths) {
    EXPECT_THROW(laguerre(-1, 0.0, 1.0), std::domain_error);
    EXPECT_THROW(laguerre(2, -1.0, 1.0), std::domain_error);
}

TEST(Paraboson, ValueAtOriginAndGroundState) {
    for (double c : {0.3, 1.0, 5.0}) {
        EXPECT_EQ(paraboson_even_wavefunction(3, c, 0.0), 0.0);
        for (double x : {-1.5, 0.4, 2.0})
            EXPECT_NEAR(paraboson_even_wavefunction(0, c, x),
                        std::sqrt(1 / std::tgamma(c + 1)) * std::pow(std::fabs(x), c + 0.5) * std::exp(-x * x / 2),
                        1e-14);
    }
    EXPECT_THROW(paraboson_even_wavefunction(0, 0.0, 1.0), std::domain_error);
}

TEST(Paraboson, UnitNormByQuadrature) {
    for (double c : {0.5, 2.0, 5.0})
        for (int n = 0; n <= 3; ++n) {
            const int steps = 20000;  // composite Simpson on [-10, 10]
            const double h = 20.0 / steps;
            double sum = 0.0;
            for (int i = 0; i <= steps; ++i) {
                const double x = -10.0 + i * h;
                const double v = paraboson_even_wavefunction(n, c, x);
                const double w = (i == 0 || i == steps) ? 1.0 : (i % 2 ? 4.0 : 2.0);
                sum += w * v * v;
            }
            EXPECT_NEAR(sum * h / 3.0, 1.0, 1e-6) << "c=" << c << " n=" << n;
        }
}
