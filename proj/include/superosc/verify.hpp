#ifndef SUPEROSC_VERIFY_HPP
#define SUPEROSC_VERIFY_HPP

// The invariant suite behind `superosc verify`: every structural claim of the
// model checked at one (j, p), and a sweep that keeps the worst residual of
// each named check.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "superosc/fourier.hpp"
#include "superosc/oracle.hpp"
#include "superosc/oscillator.hpp"
#include "superosc/report.hpp"
#include "superosc/representation.hpp"
#include "superosc/types.hpp"
#include "superosc/wavefunctions.hpp"

namespace superosc::verify {

/// Per-check tolerances. `matrix` applies to analytic identities; the others
/// follow the accuracy of the algorithm involved.
struct Tolerances {
    double matrix = 1e-10;
    double algebra = 1e-12;
    double normalization = 1e-12;
    double oracle_values = 1e-9;
    double oracle_vectors = 1e-8;
};

inline VerificationReport verify_representation(int j, const Tolerances& tol) {
    VerificationReport out;
    out.merge(representation::verify_superalgebra(j, tol.algebra), "algebra ");
    out.merge(representation::verify_star(j, tol.algebra), "star ");
    return out;
}

inline VerificationReport verify_position(const ModelParams& mp, const Tolerances& tol) {
    const int dim = mp.dimension();
    const auto mq = oscillator::position_matrix(mp);
    const RealMatrix mqd = mq.dense();
    const RealMatrix u = oscillator::analytic_U(mp);
    const RealMatrix d = oscillator::spectrum_matrix(mp.j);
    const auto spectrum = oscillator::position_spectrum(mp.j);

    VerificationReport out;
    out.add("M_q assembled from generators",
            max_abs(oscillator::position_matrix_from_generators(mp) - mqd), tol.algebra);
    out.add("M_q U = U D", max_abs(mqd * u - u * d), tol.matrix);
    out.add("U^T U = I", max_abs(u.transpose() * u - RealMatrix::Identity(dim, dim)), tol.matrix);

    const auto eig = oracle::tridiag_eigen(mq.offdiag, mq.diag);
    double value_gap = 0.0;
    for (int i = 0; i < dim; ++i) value_gap = std::max(value_gap, std::fabs(eig.values(i) - spectrum[i]));
    out.add("oracle spectrum of M_q", value_gap, tol.oracle_values);
    out.add("oracle eigenvectors of M_q", max_abs(oracle::align_signs(eig.vectors, u) - u),
            tol.oracle_vectors);

    const auto variant = oscillator::sign_variant(mp);
    out.add("M_q' U' = U' D",
            max_abs(variant.position.dense() * variant.eigenvectors - variant.eigenvectors * d),
            tol.matrix);
    return out;
}

inline VerificationReport verify_momentum(const ModelParams& mp, const Tolerances& tol) {
    const int dim = mp.dimension();
    const ComplexMatrix mpm = oscillator::momentum_matrix(mp);
    const ComplexMatrix mq = oscillator::position_matrix(mp).dense().cast<Complex>();
    const ComplexMatrix v = oscillator::analytic_V(mp);
    const ComplexMatrix u = oscillator::analytic_U(mp).cast<Complex>();
    const ComplexMatrix d = oscillator::spectrum_matrix(mp.j).cast<Complex>();
    const ComplexMatrix h = oscillator::hamiltonian_matrix(mp.j).cast<Complex>();
    const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);

    VerificationReport out;
    out.add("M_p hermitian", max_abs(mpm.adjoint() - mpm), tol.algebra);
    out.add("M_p V = V D", max_abs(mpm * v - v * d), tol.matrix);
    out.add("V^dag V = I", max_abs(v.adjoint() * v - id), tol.matrix);
    out.add("V = J U", max_abs(v - fourier::J_matrix(mp.j) * u), tol.matrix);
    out.add("V^T V = antidiag(-1)",
            max_abs(v.transpose() * v - oscillator::antidiag_minus_one(mp.j).cast<Complex>()),
            tol.matrix);
    out.add("[H, M_q] + i M_p = 0", max_abs(h * mq - mq * h + kI * mpm), tol.matrix);
    out.add("[H, M_p] - i M_q = 0", max_abs(h * mpm - mpm * h - kI * mq), tol.matrix);

    std::vector<Complex> super(std::max(dim - 1, 0));
    std::vector<double> diag(dim);
    for (int r = 0; r < dim; ++r) diag[r] = mpm(r, r).real();
    for (int r = 0; r + 1 < dim; ++r) super[r] = mpm(r, r + 1);
    const auto eig = oracle::hermitian_tridiag_eigen(super, diag);
    const auto spectrum = oscillator::position_spectrum(mp.j);
    double value_gap = 0.0;
    for (int i = 0; i < dim; ++i) value_gap = std::max(value_gap, std::fabs(eig.values(i) - spectrum[i]));
    out.add("oracle spectrum of M_p", value_gap, tol.oracle_values);
    out.add("oracle eigenvectors of M_p", max_abs(oracle::align_phases(eig.vectors, v) - v),
            tol.oracle_vectors);
    return out;
}

inline VerificationReport verify_fourier(const ModelParams& mp, const Tolerances& tol) {
    const auto analytic = fourier::fourier_analytic(mp);
    const auto spectral = fourier::fourier_spectral(mp);
    VerificationReport out;
    out.merge(fourier::fourier_eigensystem_report(mp, analytic, tol.matrix).report, "F analytic ");
    out.merge(fourier::fourier_eigensystem_report(mp, spectral, tol.matrix).report, "F spectral ");
    out.add("F analytic = F spectral", max_abs(analytic.matrix() - spectral.matrix()), tol.matrix);

    const RealMatrix u = oscillator::analytic_U(mp);
    out.add("U F = V",
            max_abs(wavefunctions::apply_fourier(u, analytic) - oscillator::analytic_V(mp)),
            tol.matrix);
    return out;
}

inline VerificationReport verify_wavefunctions(const ModelParams& mp, const Tolerances& tol) {
    const int j = mp.j;
    const RealMatrix u = oscillator::analytic_U(mp);
    double norm_gap = 0.0;
    double parity_gap = 0.0;
    double closed_gap = 0.0;
    int node_misses = 0;
    for (int n = 0; n <= 2 * j; ++n) {
        std::vector<double> row(2 * j + 1);
        for (int c = 0; c <= 2 * j; ++c) row[c] = u(n, c);
        norm_gap = std::max(norm_gap, std::fabs(u.row(n).squaredNorm() - 1.0));
        const double s = (n % 2 == 0) ? 1.0 : -1.0;
        for (int k = 0; k <= j; ++k) parity_gap = std::max(parity_gap, std::fabs(row[j - k] - s * row[j + k]));
        if (wavefunctions::sign_changes(row) != n) ++node_misses;
        const auto closed = wavefunctions::position_wavefunction_closed_form(mp, n);
        for (int c = 0; c <= 2 * j; ++c) closed_gap = std::max(closed_gap, std::fabs(closed[c] - row[c]));
    }
    VerificationReport out;
    out.add("phi_n normalized", norm_gap, tol.normalization);
    out.add("phi_n parity", parity_gap, 0.0);
    out.add("phi_n closed form = row of U", closed_gap, tol.matrix);
    out.expect("phi_n has n nodes", node_misses == 0);
    return out;
}

inline VerificationReport verify_model(const ModelParams& mp, const Tolerances& tol = {}) {
    mp.validate();
    VerificationReport out;
    out.merge(verify_position(mp, tol));
    out.merge(verify_momentum(mp, tol));
    out.merge(verify_fourier(mp, tol));
    out.merge(verify_wavefunctions(mp, tol));
    return out;
}

/// One entry per check name, carrying the worst residual seen.
inline VerificationReport worst_by_name(const VerificationReport& in) {
    std::vector<std::string> order;
    std::map<std::string, VerificationReport::Check> worst;
    for (const auto& c : in.checks()) {
        auto [it, fresh] = worst.try_emplace(c.name, c);
        if (fresh) {
            order.push_back(c.name);
            continue;
        }
        auto& w = it->second;
        if ((!c.passed && w.passed) || (c.passed == w.passed && c.residual > w.residual)) w = c;
    }
    VerificationReport out;
    for (const auto& name : order) {
        const auto& c = worst[name];
        out.add(c.name, c.residual, c.tolerance);
    }
    return out;
}

/// Representation checks for j = 0..j_max and the model checks for every
/// (j, p) with 1 <= j <= j_max, reduced by worst_by_name.
inline VerificationReport verify_sweep(int j_max, const std::vector<double>& p_list,
                                       const Tolerances& tol = {}) {
    if (j_max < 0) throw std::domain_error("verify: j-max must be non-negative");
    VerificationReport all;
    for (int j = 0; j <= j_max; ++j) all.merge(verify_representation(j, tol));
    for (double p : p_list)
        for (int j = 0; j <= j_max; ++j) all.merge(verify_model({j, p}, tol));
    for (int j = 0; j <= j_max; ++j) {
        all.expect("multiplicity from J = parity rule",
                   fourier::multiplicity_from_J(j) == fourier::expected_multiplicity(j));
    }
    return worst_by_name(all);
}

}  // namespace superosc::verify

#endif  // SUPEROSC_VERIFY_HPP
