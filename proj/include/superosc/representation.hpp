#ifndef SUPEROSC_REPRESENTATION_HPP
#define SUPEROSC_REPRESENTATION_HPP

// The atypical (2j+1)-dimensional sl(2|1) representations W_j.
//
// Basis elements (Weyl matrices e_ik of gl(2|1)):
//   odd:  F+ = e32, G+ = e13, F- = e31, G- = e23
//   even: H = (e11 - e22)/2, E+ = e12, E- = e21, Z = (e11 + e22)/2 + e33
//
// Every matrix is written in the ordered basis of BasisConvention, so the
// entry (row of |j,m'>, column of |j,m>) is the coefficient of |j,m'> in g|j,m>.

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

#include "superosc/report.hpp"
#include "superosc/types.hpp"

namespace superosc::representation {

enum class Generator { Fplus, Fminus, Gplus, Gminus, H, Eplus, Eminus, Z };

inline constexpr std::array<Generator, 8> kAllGenerators{
    Generator::Fplus, Generator::Fminus, Generator::Gplus, Generator::Gminus,
    Generator::H,     Generator::Eplus,  Generator::Eminus, Generator::Z};

enum class Parity { Even = 0, Odd = 1 };

inline Parity parity_of(Generator g) {
    switch (g) {
        case Generator::Fplus:
        case Generator::Fminus:
        case Generator::Gplus:
        case Generator::Gminus:
            return Parity::Odd;
        default:
            return Parity::Even;
    }
}

inline std::string_view name_of(Generator g) {
    switch (g) {
        case Generator::Fplus: return "F+";
        case Generator::Fminus: return "F-";
        case Generator::Gplus: return "G+";
        case Generator::Gminus: return "G-";
        case Generator::H: return "H";
        case Generator::Eplus: return "E+";
        case Generator::Eminus: return "E-";
        case Generator::Z: return "Z";
    }
    return "?";
}

/// Indicator pair (E(n), O(n)) for even / odd integers.
struct ParityFlags {
    int even = 0;
    int odd = 0;
};

constexpr ParityFlags parity(int n) {
    const bool is_even = (n % 2 == 0);
    return {is_even ? 1 : 0, is_even ? 0 : 1};
}

/// Matrix of a basis element acting on W_j.
inline RealMatrix generator_matrix(Generator g, int j) {
    if (j < 0) throw std::domain_error("generator_matrix: j must be non-negative");
    const BasisConvention basis{j};
    const int dim = basis.dimension();
    RealMatrix out = RealMatrix::Zero(dim, dim);

    // Adds coefficient c for g|j,m> -> |j,m+shift>, when the target exists.
    auto put = [&](int m, int shift, double c) {
        const int target = m + shift;
        if (c == 0.0 || target < -j || target > j) return;
        out(basis.row(target), basis.row(m)) += c;
    };

    for (int m = -j; m <= j; ++m) {
        const auto [e, o] = parity(j - m);
        switch (g) {
            case Generator::Fplus:
                put(m, +1, o * std::sqrt((j + m + 1) / 2.0));
                break;
            case Generator::Fminus:
                put(m, -1, -o * std::sqrt((j - m + 1) / 2.0));
                break;
            case Generator::Gplus:
                put(m, +1, e * std::sqrt((j - m) / 2.0));
                break;
            case Generator::Gminus:
                put(m, -1, -e * std::sqrt((j + m) / 2.0));
                break;
            case Generator::H:
                put(m, 0, m / 2.0);
                break;
            case Generator::Z:
                put(m, 0, -e * (j / 2.0) - o * ((j + 1) / 2.0));
                break;
            case Generator::Eplus:
                put(m, +2,
                    e ? 0.5 * std::sqrt(double(j - m) * (j + m + 2))
                      : 0.5 * std::sqrt(double(j - m - 1) * (j + m + 1)));
                break;
            case Generator::Eminus:
                // m = -j has j - m even, so the odd branch never sees j + m - 1 < 0.
                put(m, -2,
                    e ? 0.5 * std::sqrt(double(j + m) * (j - m + 2))
                      : 0.5 * std::sqrt(double(j + m - 1) * (j - m + 1)));
                break;
        }
    }
    return out;
}

/// Graded bracket AB - (-1)^{|A||B|} BA: anticommutator iff both arguments are odd.
template <class MatA, class MatB>
auto superbracket(const MatA& a, const MatB& b, Parity pa, Parity pb) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw std::invalid_argument("superbracket: dimension mismatch");
    using Result = std::decay_t<decltype((a * b).eval())>;
    const bool both_odd = (pa == Parity::Odd && pb == Parity::Odd);
    Result out = a * b;
    if (both_odd)
        out += b * a;
    else
        out -= b * a;
    return out;
}

/// All eight generator matrices of one representation.
struct GeneratorSet {
    explicit GeneratorSet(int j) : j(j) {
        for (std::size_t i = 0; i < kAllGenerators.size(); ++i)
            mats[i] = generator_matrix(kAllGenerators[i], j);
    }
    const RealMatrix& operator[](Generator g) const { return mats[static_cast<std::size_t>(g)]; }

    int j;
    std::array<RealMatrix, 8> mats;
};

/// Residuals of the anticommutators of odd elements, the commutators of even
/// elements and the mixed commutators.
inline VerificationReport verify_superalgebra(int j, double tol) {
    using G = Generator;
    const GeneratorSet gs(j);
    const auto dim = 2 * j + 1;
    const RealMatrix zero = RealMatrix::Zero(dim, dim);
    VerificationReport report;

    auto rel = [&](G a, G b, const RealMatrix& rhs) {
        const RealMatrix lhs = superbracket(gs[a], gs[b], parity_of(a), parity_of(b));
        const bool anti = parity_of(a) == Parity::Odd && parity_of(b) == Parity::Odd;
        std::string name = anti ? "{" : "[";
        name += name_of(a);
        name += ",";
        name += name_of(b);
        name += anti ? "}" : "]";
        report.add(name, max_abs(lhs - rhs), tol);
    };

    // odd-odd
    rel(G::Fplus, G::Gplus, gs[G::Eplus]);
    rel(G::Fminus, G::Gminus, gs[G::Eminus]);
    rel(G::Fplus, G::Gminus, gs[G::Z] - gs[G::H]);
    rel(G::Fminus, G::Gplus, gs[G::Z] + gs[G::H]);
    rel(G::Fplus, G::Fplus, zero);
    rel(G::Fminus, G::Fminus, zero);
    rel(G::Gplus, G::Gplus, zero);
    rel(G::Gminus, G::Gminus, zero);
    rel(G::Fplus, G::Fminus, zero);
    rel(G::Gplus, G::Gminus, zero);

    // even-even
    rel(G::H, G::Eplus, gs[G::Eplus]);
    rel(G::H, G::Eminus, -gs[G::Eminus]);
    rel(G::Eplus, G::Eminus, 2.0 * gs[G::H]);
    rel(G::Z, G::H, zero);
    rel(G::Z, G::Eplus, zero);
    rel(G::Z, G::Eminus, zero);

    // mixed
    rel(G::H, G::Fplus, 0.5 * gs[G::Fplus]);
    rel(G::H, G::Fminus, -0.5 * gs[G::Fminus]);
    rel(G::Z, G::Fplus, 0.5 * gs[G::Fplus]);
    rel(G::Z, G::Fminus, 0.5 * gs[G::Fminus]);
    rel(G::Eplus, G::Fplus, zero);
    rel(G::Eminus, G::Fminus, zero);
    rel(G::Eminus, G::Fplus, -gs[G::Fminus]);
    rel(G::Eplus, G::Fminus, -gs[G::Fplus]);

    rel(G::H, G::Gplus, 0.5 * gs[G::Gplus]);
    rel(G::H, G::Gminus, -0.5 * gs[G::Gminus]);
    rel(G::Z, G::Gplus, -0.5 * gs[G::Gplus]);
    rel(G::Z, G::Gminus, -0.5 * gs[G::Gminus]);
    rel(G::Eplus, G::Gplus, zero);
    rel(G::Eminus, G::Gminus, zero);
    rel(G::Eminus, G::Gplus, gs[G::Gminus]);
    rel(G::Eplus, G::Gminus, gs[G::Gplus]);

    return report;
}

/// Star conditions of the unitary representation. All matrices are real, so
/// the adjoint is the transpose.
inline VerificationReport verify_star(int j, double tol) {
    using G = Generator;
    const GeneratorSet gs(j);
    VerificationReport report;
    auto star = [&](const std::string& name, G a, const RealMatrix& rhs) {
        report.add(name, max_abs(gs[a].transpose() - rhs), tol);
    };
    star("Z^dag = Z", G::Z, gs[G::Z]);
    star("H^dag = H", G::H, gs[G::H]);
    star("(E+)^dag = E-", G::Eplus, gs[G::Eminus]);
    star("(E-)^dag = E+", G::Eminus, gs[G::Eplus]);
    star("(F+)^dag = -G-", G::Fplus, -gs[G::Gminus]);
    star("(F-)^dag = -G+", G::Fminus, -gs[G::Gplus]);
    star("(G+)^dag = -F-", G::Gplus, -gs[G::Fminus]);
    star("(G-)^dag = -F+", G::Gminus, -gs[G::Fplus]);
    return report;
}

}  // namespace superosc::representation

#endif  // SUPEROSC_REPRESENTATION_HPP
