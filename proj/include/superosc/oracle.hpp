#ifndef SUPEROSC_ORACLE_HPP
#define SUPEROSC_ORACLE_HPP

// Independent referees for the analytic results.
//
// Nothing here may depend on the Krawtchouk or hypergeometric code; a bug
// shared between an implementation and its referee would go unnoticed.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "superosc/types.hpp"

namespace superosc::oracle {

/// Off-diagonal deflation: e_m is treated as zero once
/// |e_m| <= kDeflationEps * (|d_m| + |d_{m+1}|).
inline constexpr double kDeflationEps = std::numeric_limits<double>::epsilon();
/// Iteration budget per eigenvalue.
inline constexpr int kMaxIterationsPerEigenvalue = 60;

struct EigenResult {
    RealVector values;       // ascending
    RealMatrix vectors;      // column i belongs to values(i)
    int iterations = 0;
    double residual = 0.0;   // max |A X - X Lambda|
};

struct ComplexEigenResult {
    RealVector values;
    ComplexMatrix vectors;
    int iterations = 0;
    double residual = 0.0;
};

/// Eigen-decomposition of the real symmetric tridiagonal matrix with the given
/// diagonal and off-diagonal, by implicit-shift QL iteration with Wilkinson
/// shifts and accumulated Givens rotations.
inline EigenResult tridiag_eigen(std::span<const double> offdiag, std::span<const double> diag,
                                 double tol = 1e-12) {
    const int n = static_cast<int>(diag.size());
    if (n == 0) throw std::invalid_argument("tridiag_eigen: empty matrix");
    if (static_cast<int>(offdiag.size()) != n - 1)
        throw std::invalid_argument("tridiag_eigen: off-diagonal must have size n-1");
    if (!(tol > 0.0)) throw std::invalid_argument("tridiag_eigen: tolerance must be positive");
    for (double v : diag)
        if (!std::isfinite(v)) throw std::invalid_argument("tridiag_eigen: non-finite input");
    for (double v : offdiag)
        if (!std::isfinite(v)) throw std::invalid_argument("tridiag_eigen: non-finite input");

    std::vector<double> d(diag.begin(), diag.end());
    std::vector<double> e(n, 0.0);  // e[i] couples i and i+1; e[n-1] is scratch
    std::copy(offdiag.begin(), offdiag.end(), e.begin());
    RealMatrix z = RealMatrix::Identity(n, n);
    int total_iterations = 0;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        for (;;) {
            int m = l;
            for (; m < n - 1; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= kDeflationEps * dd || std::fabs(e[m]) < 1e-300) break;
            }
            if (m == l) break;
            if (++iter > kMaxIterationsPerEigenvalue)
                throw std::runtime_error("tridiag_eigen: no convergence after " +
                                         std::to_string(kMaxIterationsPerEigenvalue) +
                                         " iterations");
            ++total_iterations;

            // Wilkinson shift from the leading 2x2 block of the active window.
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + (g >= 0 ? r : -r));

            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            int i = m - 1;
            bool underflow = false;
            for (; i >= l; --i) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for (int k = 0; k < n; ++k) {
                    f = z(k, i + 1);
                    z(k, i + 1) = s * z(k, i) + c * f;
                    z(k, i) = c * z(k, i) - s * f;
                }
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });

    EigenResult out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (int i = 0; i < n; ++i) {
        out.values(i) = d[order[i]];
        out.vectors.col(i) = z.col(order[i]);
    }
    out.iterations = total_iterations;

    RealMatrix a = RealMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) a(i, i) = diag[i];
    for (int i = 0; i + 1 < n; ++i) a(i, i + 1) = a(i + 1, i) = offdiag[i];
    out.residual = max_abs(a * out.vectors - out.vectors * out.values.asDiagonal());
    const double ortho =
        max_abs(out.vectors.transpose() * out.vectors - RealMatrix::Identity(n, n));
    const double scale = std::max(1.0, max_abs(a));
    if (out.residual > tol * scale || ortho > tol)
        throw std::runtime_error("tridiag_eigen: result misses requested tolerance");
    return out;
}

/// Hermitian tridiagonal matrix given by its real diagonal and complex
/// superdiagonal. A diagonal unitary similarity D^* T D turns the
/// superdiagonal into |t_r|, after which the real solver applies.
inline ComplexEigenResult hermitian_tridiag_eigen(std::span<const Complex> superdiag,
                                                  std::span<const double> diag,
                                                  double tol = 1e-12) {
    const int n = static_cast<int>(diag.size());
    if (static_cast<int>(superdiag.size()) + 1 != n)
        throw std::invalid_argument("hermitian_tridiag_eigen: size mismatch");
    std::vector<double> mag(superdiag.size());
    std::vector<Complex> phase(n, Complex(1.0, 0.0));
    for (int r = 0; r + 1 < n; ++r) {
        const double a = std::abs(superdiag[r]);
        mag[r] = a;
        phase[r + 1] = a > 0.0 ? phase[r] * std::conj(superdiag[r]) / a : phase[r];
    }
    const EigenResult real = tridiag_eigen(mag, diag, tol);
    ComplexEigenResult out;
    out.values = real.values;
    out.vectors = ComplexMatrix(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out.vectors(r, c) = phase[r] * real.vectors(r, c);
    out.iterations = real.iterations;

    ComplexMatrix t = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) t(i, i) = diag[i];
    for (int i = 0; i + 1 < n; ++i) {
        t(i, i + 1) = superdiag[i];
        t(i + 1, i) = std::conj(superdiag[i]);
    }
    out.residual = max_abs(t * out.vectors - out.vectors * out.values.cast<Complex>().asDiagonal());
    return out;
}

/// Flips the sign of each column of `candidate` so that it has a non-negative
/// inner product with the matching column of `reference`.
inline RealMatrix align_signs(const RealMatrix& candidate, const RealMatrix& reference) {
    if (candidate.rows() != reference.rows() || candidate.cols() != reference.cols())
        throw std::invalid_argument("align_signs: dimension mismatch");
    RealMatrix out = candidate;
    for (Eigen::Index c = 0; c < out.cols(); ++c)
        if (out.col(c).dot(reference.col(c)) < 0.0) out.col(c) = -out.col(c);
    return out;
}

/// Complex analogue: multiplies each column by the unit phase that makes its
/// inner product with the reference column real and non-negative.
inline ComplexMatrix align_phases(const ComplexMatrix& candidate, const ComplexMatrix& reference) {
    if (candidate.rows() != reference.rows() || candidate.cols() != reference.cols())
        throw std::invalid_argument("align_phases: dimension mismatch");
    ComplexMatrix out = candidate;
    for (Eigen::Index c = 0; c < out.cols(); ++c) {
        const Complex ip = out.col(c).dot(reference.col(c));  // conj(candidate) . reference
        if (std::abs(ip) > 0.0) out.col(c) *= ip / std::abs(ip);
    }
    return out;
}

// ---------------------------------------------------------------------------
// exact rational Krawtchouk values
// ---------------------------------------------------------------------------

using Rational = boost::multiprecision::cpp_rational;

inline constexpr int kExactMaxOrder = 12;

/// K_n(x; p, N) for p = p_num/p_den, as an exact rational, from the defining
/// sum  sum_s (-n)_s (-x)_s / ((-N)_s s!) p^{-s}.
inline Rational krawtchouk_exact(int n, int x, long p_num, long p_den, int N) {
    if (N > kExactMaxOrder)
        throw std::length_error("krawtchouk_exact: N above " + std::to_string(kExactMaxOrder));
    if (n < 0 || n > N || x < 0 || x > N)
        throw std::domain_error("krawtchouk_exact: n and x must lie in 0..N");
    if (!(0 < p_num && p_num < p_den))
        throw std::domain_error("krawtchouk_exact: need 0 < p_num < p_den");

    const Rational inv_p = Rational(p_den) / p_num;
    Rational sum(1);
    Rational term(1);
    for (int s = 0; s < n; ++s) {
        const long num = static_cast<long>(s - n) * (s - x);
        if (num == 0) break;
        const long den = static_cast<long>(s - N) * (s + 1);
        term *= num;
        term /= den;
        term *= inv_p;
        sum += term;
    }
    return sum;
}

}  // namespace superosc::oracle

#endif  // SUPEROSC_ORACLE_HPP
