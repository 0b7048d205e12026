#ifndef SUPEROSC_OSCILLATOR_HPP
#define SUPEROSC_OSCILLATOR_HPP

// Hamiltonian, position and momentum operators of the finite oscillator in
// W_j, and their analytic eigenvector matrices.
//
//   Hhat = -2H + j + 1/2
//   qhat = sqrt(p) F+ + sqrt(1-p) G+ - sqrt(1-p) F- - sqrt(p) G-
//   phat = -i (sqrt(p) F+ + sqrt(1-p) G+ + sqrt(1-p) F- + sqrt(p) G-)
//
// phat is fixed by [Hhat, qhat] = -i phat, [Hhat, phat] = i qhat. The sign of
// H in Hhat is the one under which row n of U (the overlap with |j, j-n>) has
// energy n + 1/2 and the columns of V = J U are eigenvectors of M_p with the
// eigenvalues D; with +2H both statements pick up a reflection.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "superosc/representation.hpp"
#include "superosc/specfun.hpp"
#include "superosc/types.hpp"

namespace superosc::oscillator {

/// Real symmetric tridiagonal matrix stored by its diagonals.
struct SymTridiagonal {
    std::vector<double> diag;
    std::vector<double> offdiag;  // offdiag[r] couples rows r and r+1

    int dimension() const { return static_cast<int>(diag.size()); }

    RealMatrix dense() const {
        const int n = dimension();
        RealMatrix out = RealMatrix::Zero(n, n);
        for (int r = 0; r < n; ++r) out(r, r) = diag[r];
        for (int r = 0; r + 1 < n; ++r) out(r, r + 1) = out(r + 1, r) = offdiag[r];
        return out;
    }
};

/// R_k = sqrt(p) sqrt(j+1-k), S_k = sqrt(1-p) sqrt(k), k = 1..j.
inline double coupling_R(const ModelParams& mp, int k) {
    return std::sqrt(mp.p) * std::sqrt(static_cast<double>(mp.j + 1 - k));
}
inline double coupling_S(const ModelParams& mp, int k) {
    return std::sqrt(1.0 - mp.p) * std::sqrt(static_cast<double>(k));
}

/// M_q with off-diagonals R_1, S_1, R_2, S_2, ..., R_j, S_j and zero diagonal.
inline SymTridiagonal position_matrix(const ModelParams& mp) {
    mp.validate();
    SymTridiagonal out;
    out.diag.assign(mp.dimension(), 0.0);
    out.offdiag.reserve(2 * mp.j);
    for (int k = 1; k <= mp.j; ++k) {
        out.offdiag.push_back(coupling_R(mp, k));
        out.offdiag.push_back(coupling_S(mp, k));
    }
    return out;
}

/// qhat assembled from the generator matrices.
inline RealMatrix position_matrix_from_generators(const ModelParams& mp) {
    mp.validate();
    using representation::Generator;
    const representation::GeneratorSet gs(mp.j);
    const double a = std::sqrt(mp.p);
    const double b = std::sqrt(1.0 - mp.p);
    return a * gs[Generator::Fplus] + b * gs[Generator::Gplus] - b * gs[Generator::Fminus] -
           a * gs[Generator::Gminus];
}

/// M_p, assembled from the generator matrices. It is tridiagonal with
/// superdiagonal -i t_r and subdiagonal +i t_r, t_r the off-diagonals of M_q.
inline ComplexMatrix momentum_matrix(const ModelParams& mp) {
    mp.validate();
    using representation::Generator;
    const representation::GeneratorSet gs(mp.j);
    const double a = std::sqrt(mp.p);
    const double b = std::sqrt(1.0 - mp.p);
    const RealMatrix inner = a * gs[Generator::Fplus] + b * gs[Generator::Gplus] +
                             b * gs[Generator::Fminus] + a * gs[Generator::Gminus];
    return -kI * inner.cast<Complex>();
}

/// Hhat = -2H + (j + 1/2) I; row r carries r + 1/2.
inline RealMatrix hamiltonian_matrix(int j) {
    if (j < 0) throw std::domain_error("hamiltonian_matrix: j must be non-negative");
    const RealMatrix h = representation::generator_matrix(representation::Generator::H, j);
    return -2.0 * h + (j + 0.5) * RealMatrix::Identity(2 * j + 1, 2 * j + 1);
}

/// (-sqrt(j), ..., -1, 0, 1, ..., sqrt(j)).
inline std::vector<double> position_spectrum(int j) {
    if (j < 0) throw std::domain_error("position_spectrum: j must be non-negative");
    std::vector<double> out;
    out.reserve(2 * j + 1);
    for (int k = -j; k <= j; ++k) out.push_back(k < 0 ? -std::sqrt(-k) : std::sqrt(k));
    return out;
}

inline RealMatrix spectrum_matrix(int j) {
    const auto d = position_spectrum(j);
    return Eigen::Map<const RealVector>(d.data(), static_cast<Eigen::Index>(d.size())).asDiagonal();
}

/// Eigenvectors of M_q (columns), ordered like position_spectrum:
///
///   U_{2n, j}     = (-1)^n K~_0(n; p, j)
///   U_{2n+1, j}   = 0
///   U_{2n, j±k}   = (-1)^n / sqrt2 K~_k(n; p, j)
///   U_{2n+1, j-k} = -U_{2n+1, j+k} = -(-1)^n / sqrt2 K~_{k-1}(n; p, j-1)
inline RealMatrix analytic_U(const ModelParams& mp) {
    mp.validate();
    const int j = mp.j;
    const specfun::KrawtchoukTable even_family(mp.p, j);
    const specfun::KrawtchoukTable odd_family(mp.p, j - 1);
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;

    RealMatrix u = RealMatrix::Zero(2 * j + 1, 2 * j + 1);
    for (int n = 0; n <= j; ++n) {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        u(2 * n, j) = sign * even_family(0, n);
        for (int k = 1; k <= j; ++k) {
            const double v = sign * inv_sqrt2 * even_family(k, n);
            u(2 * n, j - k) = v;
            u(2 * n, j + k) = v;
        }
    }
    for (int n = 0; n < j; ++n) {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        for (int k = 1; k <= j; ++k) {
            const double v = sign * inv_sqrt2 * odd_family(k - 1, n);
            u(2 * n + 1, j - k) = -v;
            u(2 * n + 1, j + k) = v;
        }
    }
    return u;
}

/// Row phases of V: -i(-1)^k on row 2k, (-1)^k on row 2k+1.
inline Complex momentum_row_phase(int row) {
    const int k = row / 2;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return (row % 2 == 0) ? Complex(0.0, -sign) : Complex(sign, 0.0);
}

/// Eigenvectors of M_p: V_{2k,l} = -i(-1)^k U_{2k,l}, V_{2k+1,l} = (-1)^k U_{2k+1,l}.
inline ComplexMatrix analytic_V(const ModelParams& mp) {
    const RealMatrix u = analytic_U(mp);
    ComplexMatrix v(u.rows(), u.cols());
    for (Eigen::Index r = 0; r < u.rows(); ++r)
        v.row(r) = momentum_row_phase(static_cast<int>(r)) * u.row(r).cast<Complex>();
    return v;
}

/// The anti-diagonal matrix with -1 on the anti-diagonal (the value of V^T V).
inline RealMatrix antidiag_minus_one(int j) {
    const int n = 2 * j + 1;
    RealMatrix out = RealMatrix::Zero(n, n);
    for (int r = 0; r < n; ++r) out(r, n - 1 - r) = -1.0;
    return out;
}

/// D_1 = diag(1, 1, -1, -1, 1, 1, ...).
inline RealVector sign_pattern_D1(int j) {
    RealVector d(2 * j + 1);
    for (int r = 0; r < d.size(); ++r) d(r) = ((r / 2) % 2 == 0) ? 1.0 : -1.0;
    return d;
}

/// Operator A F+ + B G+ - B F- - A G- with A > 0, B < 0.
struct SignVariant {
    SymTridiagonal position;  // M_q' = D_1 M_q D_1: the S_k entries negated
    RealMatrix eigenvectors;  // U' = D_1 U
};

inline SignVariant sign_variant(const ModelParams& mp) {
    SignVariant out{position_matrix(mp), RealMatrix()};
    for (std::size_t r = 1; r < out.position.offdiag.size(); r += 2)
        out.position.offdiag[r] = -out.position.offdiag[r];
    out.eigenvectors = sign_pattern_D1(mp.j).asDiagonal() * analytic_U(mp);
    return out;
}

enum class LimitSide { TowardZero, TowardOne };

/// Distance from the endpoint at which the p -> 1 limit is sampled.
inline constexpr double kEndpointEpsilon = 1e-12;

/// Limits of U at the endpoints of (0, 1).
///
/// p -> 0: row 0 is e_j; row 2n-1 is (-e_{j-n} + e_{j+n})/sqrt2 and row 2n is
/// (e_{j-n} + e_{j+n})/sqrt2, n = 1..j.
///
/// p -> 1: analytic_U at p = 1 - kEndpointEpsilon. Entries vanish in the limit
/// like powers of sqrt(eps), so entries below eps^{1/4} = 1e-3 are set to
/// zero; survivors are within O(eps) of their limit values 0, +-1/sqrt2, +-1
/// and are snapped to them.
inline RealMatrix limit_U(int j, LimitSide side) {
    if (j < 0) throw std::domain_error("limit_U: j must be non-negative");
    const int dim = 2 * j + 1;
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    RealMatrix u = RealMatrix::Zero(dim, dim);

    if (side == LimitSide::TowardZero) {
        u(0, j) = 1.0;
        for (int n = 1; n <= j; ++n) {
            u(2 * n - 1, j - n) = -inv_sqrt2;
            u(2 * n - 1, j + n) = inv_sqrt2;
            u(2 * n, j - n) = inv_sqrt2;
            u(2 * n, j + n) = inv_sqrt2;
        }
        return u;
    }

    const RealMatrix near = analytic_U({j, 1.0 - kEndpointEpsilon});
    const double cutoff = std::pow(kEndpointEpsilon, 0.25);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            const double v = near(r, c);
            if (std::fabs(v) < cutoff) continue;
            const double mag = std::fabs(std::fabs(v) - 1.0) < std::fabs(std::fabs(v) - inv_sqrt2)
                                   ? 1.0
                                   : inv_sqrt2;
            u(r, c) = std::copysign(mag, v);
        }
    }
    return u;
}

}  // namespace superosc::oscillator

#endif  // SUPEROSC_OSCILLATOR_HPP
