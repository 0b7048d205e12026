#ifndef SUPEROSC_WAVEFUNCTIONS_HPP
#define SUPEROSC_WAVEFUNCTIONS_HPP

// Discrete position and momentum wave functions
//
//   phi_{j+m}(q_k) = U_{j+m, j+k},   psi_{j+m}(p_k) = V_{j+m, j+k},   k = -j..j,
//
// and the comparison of the even ones with paraboson wave functions.
// Level n has energy n + 1/2 (see hamiltonian_matrix).

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "superosc/fourier.hpp"
#include "superosc/hypergeometric.hpp"
#include "superosc/oscillator.hpp"
#include "superosc/specfun.hpp"
#include "superosc/types.hpp"

namespace superosc::wavefunctions {

enum class WaveKind { Position, Momentum };

inline const char* to_string(WaveKind kind) {
    return kind == WaveKind::Position ? "position" : "momentum";
}

struct WaveTable {
    WaveKind kind = WaveKind::Position;
    int j = 0;
    double p = 0.5;
    int n = 0;
    std::vector<double> grid;         // q_k or p_k = sign(k) sqrt|k|, k = -j..j
    std::vector<Complex> amplitude;   // real for position tables

    double energy() const { return n + 0.5; }
    std::size_t size() const { return grid.size(); }
};

namespace detail {

inline void require_level(const ModelParams& mp, int n) {
    mp.validate();
    if (n < 0 || n > 2 * mp.j)
        throw std::out_of_range("wave function level " + std::to_string(n) + " outside 0.." +
                                std::to_string(2 * mp.j));
}

template <class Row>
WaveTable make_table(WaveKind kind, const ModelParams& mp, int n, const Row& row) {
    WaveTable t{kind, mp.j, mp.p, n, oscillator::position_spectrum(mp.j), {}};
    t.amplitude.reserve(t.grid.size());
    for (Eigen::Index c = 0; c < row.size(); ++c) t.amplitude.emplace_back(row(c));
    return t;
}

}  // namespace detail

inline WaveTable position_wavefunction(const ModelParams& mp, int n) {
    detail::require_level(mp, n);
    const RealMatrix u = oscillator::analytic_U(mp);
    return detail::make_table(WaveKind::Position, mp, n, u.row(n));
}

inline WaveTable momentum_wavefunction(const ModelParams& mp, int n) {
    detail::require_level(mp, n);
    const ComplexMatrix v = oscillator::analytic_V(mp);
    return detail::make_table(WaveKind::Momentum, mp, n, v.row(n));
}

/// phi_n(q_k), k = -j..j, from the closed 2F1 expressions:
///
///   phi_{2n}(q_{±k})   = (-1)^n/sqrt2 j! sqrt(p^{n+k}(1-p)^{j-n-k} / (n!(j-n)!k!(j-k)!))
///                        2F1(-k, -n; -j; 1/p),                          k = 1..j
///   phi_{2n}(0)        = (-1)^n sqrt(C(j,n) p^n (1-p)^{j-n})
///   phi_{2n+1}(q_{±k}) = ±(-1)^n/sqrt2 (j-1)! sqrt(p^{n+k-1}(1-p)^{j-n-k} /
///                        (n!(j-1-n)!(k-1)!(j-k)!)) 2F1(-k+1, -n; -j+1; 1/p)
///   phi_{2n+1}(0)      = 0
inline std::vector<double> position_wavefunction_closed_form(const ModelParams& mp, int level) {
    detail::require_level(mp, level);
    using specfun::log_factorial;
    const int j = mp.j;
    const double p = mp.p;
    const double lp = std::log(p);
    const double lq = std::log1p(-p);
    std::vector<double> out(2 * j + 1, 0.0);
    const int n = level / 2;
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;

    auto series = [p](int degree, int other, int order, double log_scale) {
        const std::array<double, 1> upper{-static_cast<double>(other)};
        const std::array<double, 1> lower{-static_cast<double>(order)};
        return hypergeometric::terminating_series({degree, upper, lower, log_scale, 1.0},
                                                  [p](auto one) { return one / p; });
    };

    if (level % 2 == 0) {
        out[j] = sign * std::exp(0.5 * (specfun::log_binomial(j, n) + n * lp + (j - n) * lq));
        for (int k = 1; k <= j; ++k) {
            const double log_scale =
                log_factorial(j) - 0.5 * std::log(2.0) +
                0.5 * ((n + k) * lp + (j - n - k) * lq - log_factorial(n) -
                       log_factorial(j - n) - log_factorial(k) - log_factorial(j - k));
            const double v = sign * series(k, n, j, log_scale);
            out[j + k] = v;
            out[j - k] = v;
        }
    } else {
        for (int k = 1; k <= j; ++k) {
            const double log_scale =
                log_factorial(j - 1) - 0.5 * std::log(2.0) +
                0.5 * ((n + k - 1) * lp + (j - n - k) * lq - log_factorial(n) -
                       log_factorial(j - 1 - n) - log_factorial(k - 1) - log_factorial(j - k));
            const double v = sign * series(k - 1, n, j - 1, log_scale);
            out[j + k] = v;
            out[j - k] = -v;
        }
    }
    return out;
}

/// Momentum wave vectors from the position ones: psi(p_l) = sum_k F_kl phi(q_k),
/// i.e. V = U F with the rows of `phi_stack` the position wave functions.
template <class Derived>
ComplexMatrix apply_fourier(const Eigen::MatrixBase<Derived>& phi_stack,
                            const fourier::FourierMatrix& f) {
    if (phi_stack.cols() != f.dimension())
        throw std::invalid_argument("apply_fourier: dimension mismatch");
    return phi_stack.template cast<Complex>() * f.matrix();
}

/// Number of sign changes along the grid, ignoring exact zeros and values
/// below `zero_tol` in magnitude.
inline int sign_changes(const std::vector<double>& values, double zero_tol = 0.0) {
    int changes = 0;
    int last = 0;
    for (double v : values) {
        if (std::fabs(v) <= zero_tol) continue;
        const int s = v > 0 ? 1 : -1;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

inline std::vector<double> real_part(const WaveTable& t) {
    std::vector<double> out;
    out.reserve(t.amplitude.size());
    for (const auto& a : t.amplitude) out.push_back(a.real());
    return out;
}

// ---------------------------------------------------------------------------
// paraboson comparison for even levels
// ---------------------------------------------------------------------------

struct LimitRow {
    int k = 0;
    double x = 0.0;           // sqrt(lambda(k)/j), lambda(k) = k(k + 2 alpha + 1)
    double discrete = 0.0;    // (-1)^n/sqrt2 j^{1/4} R~_n(lambda(k); 2p alpha, 2(1-p) alpha, j)
    double continuum = 0.0;   // Psi_{2n}(x) with parameter 2p alpha
    double alpha_gap = 0.0;   // |R~_n(lambda(k); 2p alpha, 2(1-p) alpha, j) - K~_n(k; p, j)|
};

struct LimitTable {
    int j = 0;
    double p = 0.5;
    double alpha = 1.0;
    int n = 0;                // table for phi_{2n}
    std::vector<LimitRow> rows;

    double max_abs_error() const {
        double worst = 0.0;
        for (const auto& r : rows) worst = std::max(worst, std::fabs(r.discrete - r.continuum));
        return worst;
    }
    double max_alpha_gap() const {
        double worst = 0.0;
        for (const auto& r : rows) worst = std::max(worst, r.alpha_gap);
        return worst;
    }
};

inline LimitTable paraboson_limit_table(int j, double p, double alpha, int n, int grid_count) {
    ModelParams{j, p}.validate();
    if (!(alpha > 0.0)) throw std::domain_error("paraboson_limit_table: alpha must be positive");
    if (n < 0 || n > j) throw std::out_of_range("paraboson_limit_table: n outside 0..j");
    if (grid_count < 1 || grid_count > j + 1)
        throw std::out_of_range("paraboson_limit_table: grid count " + std::to_string(grid_count) +
                                " exceeds the j + 1 grid points");

    const double gamma = 2.0 * p * alpha;
    const double delta = 2.0 * (1.0 - p) * alpha;
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const double scale = sign / std::numbers::sqrt2 * std::pow(static_cast<double>(j), 0.25);

    LimitTable table{j, p, alpha, n, {}};
    table.rows.reserve(grid_count);
    for (int k = 0; k < grid_count; ++k) {
        LimitRow row;
        row.k = k;
        row.x = std::sqrt(specfun::dual_hahn_lattice(k, gamma, delta) / j);
        const double rt = specfun::dual_hahn_normalized(n, k, gamma, delta, j);
        row.discrete = scale * rt;
        row.continuum = specfun::paraboson_even_wavefunction(n, gamma, row.x);
        row.alpha_gap = std::fabs(rt - specfun::krawtchouk_normalized(n, k, p, j));
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace superosc::wavefunctions

#endif  // SUPEROSC_WAVEFUNCTIONS_HPP
