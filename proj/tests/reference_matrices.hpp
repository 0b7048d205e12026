#ifndef SUPEROSC_TESTS_REFERENCE_MATRICES_HPP
#define SUPEROSC_TESTS_REFERENCE_MATRICES_HPP

#include <cmath>

#include "superosc/types.hpp"

namespace published {

/// 2F for j = 3, p = 1/2, transcribed entry by entry.
inline superosc::ComplexMatrix twice_fourier_j3() {
    using C = superosc::Complex;
    const C o(0, 0), one(1, 0), m(-1, 0), mi(0, -1), mr(0, -std::sqrt(2.0));
    superosc::ComplexMatrix f(7, 7);
    f << o,  o,  one, mr, m,  o,  o,
         o,  one, mi, o,  mi, m,  o,
         one, mi, o,  o,  o,  mi, m,
         mr, o,  o,  o,  o,  o,  mr,
         m,  mi, o,  o,  o,  mi, one,
         o,  m,  mi, o,  mi, one, o,
         o,  o,  m,  mr, one, o,  o;
    return f;
}

}  // namespace published

#endif  // SUPEROSC_TESTS_REFERENCE_MATRICES_HPP
