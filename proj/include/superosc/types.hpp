#ifndef SUPEROSC_TYPES_HPP
#define SUPEROSC_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace superosc {

using Complex = std::complex<double>;
using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

/// Representation label j and position-operator parameter p of the model.
struct ModelParams {
    int j = 0;
    double p = 0.5;

    int dimension() const { return 2 * j + 1; }

    void validate() const {
        if (j < 0) throw std::domain_error("model: j must be non-negative");
        if (!(p > 0.0 && p < 1.0))
            throw std::domain_error("model: p must lie strictly inside (0,1), got " +
                                    std::to_string(p));
    }
};

/// Largest absolute entry; zero for empty matrices.
template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

/// Maps the row index r = 0..2j of the ordered basis {|j,j>, |j,j-1>, ..., |j,-j>}
/// to the magnetic label m = j - r and back.
struct BasisConvention {
    int j = 0;

    int dimension() const { return 2 * j + 1; }
    int label(int row) const { return j - row; }
    int row(int m) const { return j - m; }
};

}  // namespace superosc

#endif  // SUPEROSC_TYPES_HPP
