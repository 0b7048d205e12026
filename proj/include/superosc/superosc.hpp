#ifndef SUPEROSC_SUPEROSC_HPP
#define SUPEROSC_SUPEROSC_HPP

#include "superosc/types.hpp"
#include "superosc/report.hpp"
#include "superosc/hypergeometric.hpp"
#include "superosc/specfun.hpp"
#include "superosc/representation.hpp"
#include "superosc/oscillator.hpp"
#include "superosc/fourier.hpp"
#include "superosc/wavefunctions.hpp"
#include "superosc/oracle.hpp"
#include "superosc/verify.hpp"

#endif  // SUPEROSC_SUPEROSC_HPP
