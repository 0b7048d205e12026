#ifndef SUPEROSC_FOURIER_HPP
#define SUPEROSC_FOURIER_HPP

// Discrete Fourier transform between position and momentum wave functions.
//
// Spectral route:   F = U^T J U,  J = -i diag(i^0, i^1, ..., i^{2j}).
// Analytic route:   F_{j-k, j-+l} = F_{j+k, j+-l} = -i/2 S(k,l;p,j) +- 1/2 S(k-1,l-1;p,j-1)
//                   F_{j-+k, j} = F_{j, j-+k} = -i/sqrt2 S(k,0;p,j)
//                   F_{jj} = -i S(0,0;p,j)
// with S(k,l;p,j) = sum_n (-1)^n K~_k(n;p,j) K~_l(n;p,j).

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "superosc/hypergeometric.hpp"
#include "superosc/oscillator.hpp"
#include "superosc/report.hpp"
#include "superosc/specfun.hpp"
#include "superosc/types.hpp"

namespace superosc::fourier {

/// Complex (2j+1)x(2j+1) matrix indexed by labels k, l = -j..j.
class FourierMatrix {
public:
    explicit FourierMatrix(ComplexMatrix m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols() || m_.rows() % 2 == 0)
            throw std::invalid_argument("FourierMatrix: needs odd square dimension");
    }

    int j() const { return static_cast<int>(m_.rows() / 2); }
    int dimension() const { return static_cast<int>(m_.rows()); }

    Complex at(int k, int l) const { return m_(index(k), index(l)); }
    Complex& at(int k, int l) { return m_(index(k), index(l)); }

    const ComplexMatrix& matrix() const { return m_; }

private:
    Eigen::Index index(int label) const {
        if (label < -j() || label > j())
            throw std::out_of_range("FourierMatrix: label outside -j..j");
        return label + j();
    }

    ComplexMatrix m_;
};

/// J = diag(-i i^r), r = 0..2j, i.e. (-i, 1, i, -1, -i, ...).
inline ComplexMatrix J_matrix(int j) {
    if (j < 0) throw std::domain_error("J_matrix: j must be non-negative");
    static constexpr std::array<Complex, 4> kCycle{Complex(0, -1), Complex(1, 0), Complex(0, 1),
                                                   Complex(-1, 0)};
    ComplexMatrix out = ComplexMatrix::Zero(2 * j + 1, 2 * j + 1);
    for (int r = 0; r <= 2 * j; ++r) out(r, r) = kCycle[r % 4];
    return out;
}

inline FourierMatrix fourier_spectral(const ModelParams& mp) {
    const RealMatrix u = oscillator::analytic_U(mp);
    const ComplexMatrix uc = u.cast<Complex>();
    return FourierMatrix(uc.transpose() * J_matrix(mp.j) * uc);
}

namespace detail {

inline void require_S_indices(int k, int l, int j) {
    if (j < 0 || k < 0 || l < 0 || k > j || l > j)
        throw std::domain_error("S: indices must satisfy 0 <= k, l <= j");
}

}  // namespace detail

/// S(k,l;p,j) from an existing table of the (p, j) family.
inline double S_sum(int k, int l, const specfun::KrawtchoukTable& table) {
    const int j = table.order();
    detail::require_S_indices(k, l, j);
    double sum = 0.0;
    for (int n = 0; n <= j; ++n) {
        const double term = table(k, n) * table(l, n);
        sum += (n % 2 == 0) ? term : -term;
    }
    return sum;
}

inline double S_sum(int k, int l, double p, int j) {
    detail::require_S_indices(k, l, j);
    return S_sum(k, l, specfun::KrawtchoukTable(p, j));
}

/// S(k,l;p,j) = sqrt(C(j,k) C(j,l)) 2^{k+l} (p(1-p))^{(k+l)/2} (1-2p)^{j-k-l}
///              2F1(-k, -l; -j; 1/(4p(1-p))).
///
/// At p = 1/2 with k + l > j the prefactor is a negative power of zero against
/// a vanishing 2F1; that removable singularity is evaluated by S_sum.
inline double S_closed(int k, int l, double p, int j) {
    detail::require_S_indices(k, l, j);
    specfun::detail::require_probability(p, "S_closed");
    const int excess = j - k - l;
    const double base = 1.0 - 2.0 * p;
    if (base == 0.0) {
        if (excess > 0) return 0.0;
        if (excess < 0) return S_sum(k, l, p, j);
    }
    double log_scale = 0.5 * (specfun::log_binomial(j, k) + specfun::log_binomial(j, l)) +
                       (k + l) * std::numbers::ln2 +
                       0.5 * (k + l) * (std::log(p) + std::log1p(-p));
    double sign = 1.0;
    if (excess != 0) {
        log_scale += excess * std::log(std::fabs(base));
        if (base < 0.0 && (excess % 2 != 0)) sign = -1.0;
    }
    const std::array<double, 1> upper{-static_cast<double>(l)};
    const std::array<double, 1> lower{-static_cast<double>(j)};
    // |S| <= 1 (Cauchy-Schwarz over orthonormal rows), so absolute accuracy suffices.
    const double series = hypergeometric::terminating_series(
        {k, upper, lower, log_scale, 1.0},
        [p](auto one) { return one / (4 * (one * p) * (one - p)); });
    return sign * series;
}

/// F assembled entry-wise from S_closed.
inline FourierMatrix fourier_analytic(const ModelParams& mp) {
    mp.validate();
    const int j = mp.j;
    const double p = mp.p;
    FourierMatrix f(ComplexMatrix::Zero(2 * j + 1, 2 * j + 1));
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;

    f.at(0, 0) = Complex(0.0, -S_closed(0, 0, p, j));
    for (int k = 1; k <= j; ++k) {
        const Complex edge(0.0, -inv_sqrt2 * S_closed(k, 0, p, j));
        f.at(-k, 0) = f.at(k, 0) = f.at(0, -k) = f.at(0, k) = edge;
        for (int l = 1; l <= j; ++l) {
            const double even_part = -0.5 * S_closed(k, l, p, j);
            const double odd_part = 0.5 * S_closed(k - 1, l - 1, p, j - 1);
            const Complex same(odd_part, even_part);    // -i/2 S + 1/2 S'
            const Complex mixed(-odd_part, even_part);  // -i/2 S - 1/2 S'
            // F_{j-k, j-l} = F_{j+k, j+l} = same;  F_{j-k, j+l} = F_{j+k, j-l} = mixed
            f.at(-k, -l) = same;
            f.at(k, l) = same;
            f.at(-k, l) = mixed;
            f.at(k, -l) = mixed;
        }
    }
    return f;
}

/// Multiplicities of the eigenvalues (-i, 1, i, -1).
struct EigenvalueMultiplicity {
    int minus_i = 0;
    int one = 0;
    int plus_i = 0;
    int minus_one = 0;

    int total() const { return minus_i + one + plus_i + minus_one; }
    bool operator==(const EigenvalueMultiplicity&) const = default;
};

/// j = 2n: (n+1, n, n, n); j = 2n+1: (n+1, n+1, n+1, n).
inline EigenvalueMultiplicity expected_multiplicity(int j) {
    const int n = j / 2;
    if (j % 2 == 0) return {n + 1, n, n, n};
    return {n + 1, n + 1, n + 1, n};
}

/// Tally of the diagonal of J.
inline EigenvalueMultiplicity multiplicity_from_J(int j) {
    EigenvalueMultiplicity out;
    const ComplexMatrix jm = J_matrix(j);
    for (int r = 0; r <= 2 * j; ++r) {
        const Complex v = jm(r, r);
        if (v == Complex(0, -1)) ++out.minus_i;
        else if (v == Complex(1, 0)) ++out.one;
        else if (v == Complex(0, 1)) ++out.plus_i;
        else ++out.minus_one;
    }
    return out;
}

struct FourierEigensystem {
    VerificationReport report;
    EigenvalueMultiplicity multiplicity;
};

/// Symmetry, unitarity, F^4 = I, F^2 = V^T V, F U^T = U^T J and the eigenvalue
/// multiplicities, for the matrix `f` of the model `mp`.
inline FourierEigensystem fourier_eigensystem_report(const ModelParams& mp, const FourierMatrix& f,
                                                     double tol) {
    const int j = mp.j;
    const int dim = 2 * j + 1;
    const ComplexMatrix& m = f.matrix();
    const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
    const ComplexMatrix ut = oscillator::analytic_U(mp).transpose().cast<Complex>();
    const ComplexMatrix m2 = m * m;

    FourierEigensystem out;
    out.report.add("F^T = F", max_abs(m.transpose() - m), tol);
    out.report.add("F^dag F = I", max_abs(m.adjoint() * m - id), tol);
    out.report.add("F^4 = I", max_abs(m2 * m2 - id), tol);
    out.report.add("F^2 = V^T V",
                   max_abs(m2 - oscillator::antidiag_minus_one(j).cast<Complex>()), tol);
    out.report.add("F U^T = U^T J", max_abs(m * ut - ut * J_matrix(j)), tol);
    out.multiplicity = multiplicity_from_J(j);
    out.report.expect("multiplicity matches parity rule",
                      out.multiplicity == expected_multiplicity(j));
    return out;
}

inline FourierEigensystem fourier_eigensystem_report(const ModelParams& mp, double tol = 1e-10) {
    return fourier_eigensystem_report(mp, fourier_analytic(mp), tol);
}

}  // namespace superosc::fourier

#endif  // SUPEROSC_FOURIER_HPP
