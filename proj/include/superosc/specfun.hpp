#ifndef SUPEROSC_SPECFUN_HPP
#define SUPEROSC_SPECFUN_HPP

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "superosc/hypergeometric.hpp"

namespace superosc::specfun {

using hypergeometric::hyp1f1_terminating;
using hypergeometric::hyp2f1_terminating;
using hypergeometric::hyp3f2_terminating_unit;

// ---------------------------------------------------------------------------
// log-space helpers
// ---------------------------------------------------------------------------

inline double log_factorial(int n) {
    if (n < 0) throw std::domain_error("log_factorial: negative argument");
    return std::lgamma(static_cast<double>(n) + 1.0);
}

inline double log_binomial(int n, int k) {
    if (k < 0 || k > n) throw std::domain_error("log_binomial: k outside 0..n");
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

/// log|(a)_n| together with the sign of (a)_n. Requires (a)_n != 0.
struct SignedLog {
    double log_abs = 0.0;
    int sign = 1;
};

inline SignedLog log_pochhammer(double a, int n) {
    if (a > 0.0) return {std::lgamma(a + n) - std::lgamma(a), 1};
    SignedLog out;
    for (int i = 0; i < n; ++i) {
        const double f = a + i;
        if (f == 0.0) throw std::domain_error("log_pochhammer: vanishing factor");
        if (f < 0.0) out.sign = -out.sign;
        out.log_abs += std::log(std::fabs(f));
    }
    return out;
}

namespace detail {

inline void require_probability(double p, const char* who) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error(std::string(who) + ": p must lie strictly inside (0,1)");
}

inline void require_index(int i, int N, const char* who, const char* what) {
    if (i < 0 || i > N)
        throw std::domain_error(std::string(who) + ": " + what + " outside 0.." +
                                std::to_string(N));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Krawtchouk polynomials  K_n(x; p, N) = 2F1(-n, -x; -N; 1/p)
// ---------------------------------------------------------------------------

inline double krawtchouk(int n, double x, double p, int N) {
    detail::require_index(n, N, "krawtchouk", "degree");
    detail::require_probability(p, "krawtchouk");
    const std::array<double, 1> upper{-x};
    const std::array<double, 1> lower{-static_cast<double>(N)};
    return hypergeometric::terminating_series({n, upper, lower},
                                              [p](auto one) { return one / p; });
}

/// log of the binomial weight C(N,x) p^x (1-p)^(N-x).
inline double log_krawtchouk_weight(int x, double p, int N) {
    detail::require_index(x, N, "krawtchouk_weight", "x");
    detail::require_probability(p, "krawtchouk_weight");
    return log_binomial(N, x) + x * std::log(p) + (N - x) * std::log1p(-p);
}

/// log of the squared norm n!(N-n)!/N! ((1-p)/p)^n.
inline double log_krawtchouk_norm(int n, double p, int N) {
    detail::require_index(n, N, "krawtchouk_norm", "degree");
    detail::require_probability(p, "krawtchouk_norm");
    return -log_binomial(N, n) + n * (std::log1p(-p) - std::log(p));
}

inline double krawtchouk_weight(int x, double p, int N) {
    return std::exp(log_krawtchouk_weight(x, p, N));
}

inline double krawtchouk_norm(int n, double p, int N) {
    return std::exp(log_krawtchouk_norm(n, p, N));
}

/// Orthonormal Krawtchouk function sqrt(w(x)/h(n)) K_n(x; p, N) on the grid x = 0..N.
inline double krawtchouk_normalized(int n, int x, double p, int N) {
    detail::require_index(n, N, "krawtchouk_normalized", "degree");
    detail::require_index(x, N, "krawtchouk_normalized", "x");
    detail::require_probability(p, "krawtchouk_normalized");
    const std::array<double, 1> upper{-static_cast<double>(x)};
    const std::array<double, 1> lower{-static_cast<double>(N)};
    const double log_scale = 0.5 * (log_krawtchouk_weight(x, p, N) - log_krawtchouk_norm(n, p, N));
    // Values are bounded by one, so absolute accuracy is what matters.
    return hypergeometric::terminating_series({n, upper, lower, log_scale, 1.0},
                                              [p](auto one) { return one / p; });
}

/// All orthonormal Krawtchouk functions of one family, entry (n, x) = K~_n(x; p, N).
///
/// For fixed x the sequence over n solves the symmetric three-term recurrence
///
///   b_{n+1} K~_{n+1} = (d_n - x) K~_n - b_n K~_{n-1},
///   d_n = p(N-n) + n(1-p),   b_n = sqrt(p(1-p) n (N-n+1)),
///
/// which is run forward from K~_0(x) = sqrt(w(x)) and backward from
/// K~_N(x) = sqrt(w(x)/h(N)) (-(1-p)/p)^x. Each direction is only trusted up to
/// the middle of the oscillatory band |d_n - x| < b_n + b_{n+1}; past it the
/// wanted solution decays and the recurrence would amplify rounding.
/// An empty table (N = -1) stands for the family that does not exist when j = 0.
class KrawtchoukTable {
public:
    KrawtchoukTable(double p, int N) : p_(p), N_(N) {
        detail::require_probability(p, "KrawtchoukTable");
        if (N < -1) throw std::domain_error("KrawtchoukTable: N must be >= -1");
        values_ = Eigen::MatrixXd::Zero(N + 1, N + 1);
        for (int x = 0; x <= N; ++x) fill_column(x);
    }

    double p() const { return p_; }
    int order() const { return N_; }
    double operator()(int n, int x) const { return values_(n, x); }
    const Eigen::MatrixXd& matrix() const { return values_; }

private:
    double coupling(int n) const {
        if (n <= 0 || n > N_) return 0.0;
        return std::sqrt(p_ * (1.0 - p_) * n * (N_ - n + 1.0));
    }
    double diagonal(int n) const { return p_ * (N_ - n) + n * (1.0 - p_); }

    void fill_column(int x) {
        const int N = N_;
        const double log_w = log_krawtchouk_weight(x, p_, N);
        const double log_ratio = std::log1p(-p_) - std::log(p_);

        int first = -1;
        int last = -1;
        for (int n = 0; n <= N; ++n) {
            if (std::fabs(diagonal(n) - x) < coupling(n) + coupling(n + 1)) {
                if (first < 0) first = n;
                last = n;
            }
        }
        int split = 0;
        if (first >= 0) {
            split = (first + last) / 2;
        } else {
            double best = std::fabs(diagonal(0) - x);
            for (int n = 1; n <= N; ++n) {
                if (std::fabs(diagonal(n) - x) < best) {
                    best = std::fabs(diagonal(n) - x);
                    split = n;
                }
            }
        }

        // forward: n = 0 .. split
        values_(0, x) = std::exp(0.5 * log_w);
        for (int n = 0; n < split; ++n) {
            const double prev = n > 0 ? values_(n - 1, x) : 0.0;
            values_(n + 1, x) =
                ((diagonal(n) - x) * values_(n, x) - coupling(n) * prev) / coupling(n + 1);
        }
        if (split == N) return;

        // backward: n = N .. split + 1
        const double top =
            std::exp(0.5 * (log_w - N * log_ratio) + x * log_ratio);
        double next = 0.0;  // K~_{N+1}
        double cur = (x % 2 == 0) ? top : -top;
        values_(N, x) = cur;
        for (int n = N; n > split + 1; --n) {
            const double lower = ((diagonal(n) - x) * cur - coupling(n + 1) * next) / coupling(n);
            next = cur;
            cur = lower;
            values_(n - 1, x) = cur;
        }
    }

    double p_;
    int N_;
    Eigen::MatrixXd values_;
};

// ---------------------------------------------------------------------------
// Dual Hahn polynomials  R_n(lambda(x); gamma, delta, N)
//     = 3F2(-n, -x, x+gamma+delta+1; -N, gamma+1; 1),  lambda(x) = x(x+gamma+delta+1)
//
// Orthogonality (Koekoek, Lesky & Swarttouw, eq. 9.6.2):
//
//   sum_x wbar(x) R_m R_n = hbar(n) delta_mn,
//
//   wbar(x) = (2x+gamma+delta+1) (gamma+1)_x (-N)_x N!
//             / ((-1)^x (x+gamma+delta+1)_{N+1} (delta+1)_x x!)
//           = (2x+gamma+delta+1) (gamma+1)_x N!^2
//             / ((N-x)! (x+gamma+delta+1)_{N+1} (delta+1)_x x!),
//
//   hbar(n) = 1 / ( C(gamma+n, n) C(delta+N-n, N-n) ),
//
// with generalized binomials C(a+k, k) = (a+1)_k / k!.
// ---------------------------------------------------------------------------

namespace detail {

inline void require_hahn_params(double gamma, double delta, const char* who) {
    if (!(gamma > -1.0) || !(delta > -1.0))
        throw std::domain_error(std::string(who) + ": gamma and delta must exceed -1");
}

}  // namespace detail

inline double dual_hahn_lattice(int x, double gamma, double delta) {
    return x * (x + gamma + delta + 1.0);
}

inline double dual_hahn(int n, int x, double gamma, double delta, int N) {
    detail::require_index(n, N, "dual_hahn", "degree");
    detail::require_index(x, N, "dual_hahn", "x");
    detail::require_hahn_params(gamma, delta, "dual_hahn");
    return hyp3f2_terminating_unit(n, -static_cast<double>(x), x + gamma + delta + 1.0,
                                   -static_cast<double>(N), gamma + 1.0);
}

inline double log_dual_hahn_weight(int x, double gamma, double delta, int N) {
    detail::require_index(x, N, "dual_hahn_weight", "x");
    detail::require_hahn_params(gamma, delta, "dual_hahn_weight");
    const double s = gamma + delta + 1.0;
    const SignedLog tail = log_pochhammer(x + s, N + 1);
    // (2x+s) and (x+s)_{N+1} share a sign; the weight is positive.
    return std::log(std::fabs(2.0 * x + s)) + log_pochhammer(gamma + 1.0, x).log_abs +
           2.0 * log_factorial(N) - log_factorial(N - x) - tail.log_abs -
           log_pochhammer(delta + 1.0, x).log_abs - log_factorial(x);
}

inline double log_dual_hahn_norm(int n, double gamma, double delta, int N) {
    detail::require_index(n, N, "dual_hahn_norm", "degree");
    detail::require_hahn_params(gamma, delta, "dual_hahn_norm");
    const double log_c1 = log_pochhammer(gamma + 1.0, n).log_abs - log_factorial(n);
    const double log_c2 = log_pochhammer(delta + 1.0, N - n).log_abs - log_factorial(N - n);
    return -(log_c1 + log_c2);
}

inline double dual_hahn_weight(int x, double gamma, double delta, int N) {
    return std::exp(log_dual_hahn_weight(x, gamma, delta, N));
}

inline double dual_hahn_norm(int n, double gamma, double delta, int N) {
    return std::exp(log_dual_hahn_norm(n, gamma, delta, N));
}

inline double dual_hahn_normalized(int n, int x, double gamma, double delta, int N) {
    detail::require_index(n, N, "dual_hahn_normalized", "degree");
    detail::require_index(x, N, "dual_hahn_normalized", "x");
    detail::require_hahn_params(gamma, delta, "dual_hahn_normalized");
    const std::array<double, 2> upper{-static_cast<double>(x), x + gamma + delta + 1.0};
    const std::array<double, 2> lower{-static_cast<double>(N), gamma + 1.0};
    const double log_scale = 0.5 * (log_dual_hahn_weight(x, gamma, delta, N) -
                                    log_dual_hahn_norm(n, gamma, delta, N));
    return hypergeometric::terminating_series({n, upper, lower, log_scale, 1.0},
                                              [](auto one) { return one; });
}

// ---------------------------------------------------------------------------
// Laguerre polynomials and the even paraboson wave function
// ---------------------------------------------------------------------------

/// L_n^{(a)}(x) = (a+1)_n / n! * 1F1(-n; a+1; x).
inline double laguerre(int n, double a, double x) {
    if (n < 0) throw std::domain_error("laguerre: negative degree");
    if (!(a > -1.0)) throw std::domain_error("laguerre: parameter must exceed -1");
    const std::array<double, 1> lower{a + 1.0};
    const double log_scale = log_pochhammer(a + 1.0, n).log_abs - log_factorial(n);
    return hypergeometric::terminating_series({n, {}, lower, log_scale, 0.0},
                                              [x](auto one) { return one * x; });
}

/// (-1)^n sqrt(n!/Gamma(n+c+1)) |x|^{c+1/2} exp(-x^2/2) L_n^{(c)}(x^2), c = 2 p alpha.
inline double paraboson_even_wavefunction(int n, double c, double x) {
    if (n < 0) throw std::domain_error("paraboson_even_wavefunction: negative level");
    if (!(c > 0.0)) throw std::domain_error("paraboson_even_wavefunction: c must be positive");
    if (x == 0.0) return 0.0;
    const double ax = std::fabs(x);
    const double log_prefactor = 0.5 * (log_factorial(n) - std::lgamma(n + c + 1.0)) +
                                 (c + 0.5) * std::log(ax) - 0.5 * x * x;
    const double value = std::exp(log_prefactor) * laguerre(n, c, x * x);
    return (n % 2 == 0) ? value : -value;
}

}  // namespace superosc::specfun

#endif  // SUPEROSC_SPECFUN_HPP
