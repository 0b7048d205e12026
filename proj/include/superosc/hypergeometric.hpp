#ifndef SUPEROSC_HYPERGEOMETRIC_HPP
#define SUPEROSC_HYPERGEOMETRIC_HPP

// Terminating generalized hypergeometric series
//
//     pFq(-n, a_1..a_{p-1}; b_1..b_q; z) = sum_{s=0}^{n} prod (a)_s / prod (b)_s * z^s / s!
//
// summed left to right with the term ratio update
//
//     t_{s+1} = t_s * (s - n) * prod(a + s) / (prod(b + s) * (s + 1)) * z.
//
// For the discrete families used here (z = 1/p, z = 1/(4p(1-p)), z = 1) the
// terms alternate and grow far beyond the sum, so a plain double evaluation
// loses every significant digit once the degree reaches a few dozen. The
// summation therefore runs in double first, estimates the rounding error from
// the sum of term magnitudes, and repeats the same recurrence in a binary
// floating type with enough decimal digits when the estimate is too large.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace superosc::hypergeometric {

template <unsigned Digits10>
using BinFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Digits10>,
                                               boost::multiprecision::et_off>;

/// Error floor in the error estimate, relative to max(|result|, abs_floor).
inline constexpr double kTargetRelative = 1e-16;

/// Scaled terminating series.
///
/// The result is `sum * exp(log_scale)`. `abs_floor` says how small an
/// absolute error (in units of the scaled result) counts as exact: callers
/// whose results are bounded by one (orthonormal functions) pass a floor near
/// one, callers that want full relative accuracy pass zero.
struct SeriesRequest {
    int degree = 0;                        // n in the leading -n
    std::span<const double> upper;         // a_1 .. a_{p-1} (without -n)
    std::span<const double> lower;         // b_1 .. b_q
    double log_scale = 0.0;
    double abs_floor = 0.0;
};

namespace detail {

template <class Real>
Real to_real(double x) {
    return Real(x);
}

inline double abs(double x) { return std::fabs(x); }
using boost::multiprecision::abs;

template <class Real>
struct Partial {
    Real sum;
    Real abs_sum;
};

template <class Real, class ZFn>
Partial<Real> sum_terms(const SeriesRequest& req, const ZFn& z_of) {
    const Real z = z_of(Real(1));
    Real term(1);
    Real sum(1);
    Real abs_sum(1);
    for (int s = 0; s < req.degree; ++s) {
        Real num = to_real<Real>(static_cast<double>(s - req.degree));
        for (double a : req.upper) num *= to_real<Real>(a) + s;
        if (num == 0) break;  // the series has terminated early
        Real den = to_real<Real>(static_cast<double>(s + 1));
        for (double b : req.lower) den *= to_real<Real>(b) + s;
        if (den == 0)
            throw std::domain_error("terminating series: lower parameter hits zero at term " +
                                    std::to_string(s + 1));
        term = term * num / den * z;
        sum += term;
        abs_sum += abs(term);
    }
    return {sum, abs_sum};
}

// Rounding error estimate of the recurrence, in scaled units.
inline double error_estimate(int degree, double abs_sum_scaled, double epsilon) {
    return 4.0 * (degree + 2) * epsilon * abs_sum_scaled;
}

template <class Real>
double scaled_value(const Real& sum, double log_scale) {
    if (sum == 0) return 0.0;
    const double log_mag = static_cast<double>(log(boost::multiprecision::abs(sum)));
    const double mag = std::exp(log_mag + log_scale);
    return sum < 0 ? -mag : mag;
}

inline double scaled_value(double sum, double log_scale) {
    if (sum == 0.0) return 0.0;
    return std::copysign(std::exp(std::log(std::fabs(sum)) + log_scale), sum);
}

template <unsigned Digits10, class ZFn>
bool try_tier(const SeriesRequest& req, const ZFn& z_of, double& out) {
    using Real = BinFloat<Digits10>;
    const auto part = sum_terms<Real>(req, z_of);
    out = scaled_value(part.sum, req.log_scale);
    const double abs_scaled = scaled_value(part.abs_sum, req.log_scale);
    const double eps = std::pow(10.0, -static_cast<double>(Digits10));
    return error_estimate(req.degree, abs_scaled, eps) <=
           kTargetRelative * std::max(std::fabs(out), req.abs_floor);
}

}  // namespace detail

/// Sums the scaled terminating series. `z_of` is a generic callable that
/// builds the argument in the working precision from `Real(1)`, so that
/// arguments such as 1/p are not rounded to double before the high-precision
/// pass.
template <class ZFn>
double terminating_series(const SeriesRequest& req, const ZFn& z_of) {
    if (req.degree < 0) throw std::domain_error("terminating series: negative degree");

    const auto part = detail::sum_terms<double>(req, z_of);
    const double value = detail::scaled_value(part.sum, req.log_scale);
    const double abs_scaled = detail::scaled_value(part.abs_sum, req.log_scale);
    const double target = kTargetRelative * std::max(std::fabs(value), req.abs_floor);
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (detail::error_estimate(req.degree, abs_scaled, eps) <= target) return value;

    // Pick the first tier whose precision covers the observed term growth.
    const double needed =
        std::log10(detail::error_estimate(req.degree, abs_scaled, 1.0) /
                   (kTargetRelative * std::max({std::fabs(value), req.abs_floor,
                                                std::numeric_limits<double>::min()})));
    double out = value;
    if (needed <= 40 && detail::try_tier<40>(req, z_of, out)) return out;
    if (needed <= 80 && detail::try_tier<80>(req, z_of, out)) return out;
    if (needed <= 160 && detail::try_tier<160>(req, z_of, out)) return out;
    if (detail::try_tier<320>(req, z_of, out)) return out;
    // Exact zeros never satisfy a relative criterion; 640 digits is the last word.
    detail::try_tier<640>(req, z_of, out);
    return out;
}

/// 2F1(-n, b; c; z) with z exactly representable as a double.
inline double hyp2f1_terminating(int n, double b, double c, double z) {
    const std::array<double, 1> upper{b};
    const std::array<double, 1> lower{c};
    return terminating_series({n, upper, lower}, [z](auto one) { return one * z; });
}

/// 3F2(-n, a1, a2; b1, b2; 1).
inline double hyp3f2_terminating_unit(int n, double a1, double a2, double b1, double b2) {
    const std::array<double, 2> upper{a1, a2};
    const std::array<double, 2> lower{b1, b2};
    return terminating_series({n, upper, lower}, [](auto one) { return one; });
}

/// 1F1(-n; b; z).
inline double hyp1f1_terminating(int n, double b, double z) {
    const std::array<double, 1> lower{b};
    return terminating_series({n, {}, lower}, [z](auto one) { return one * z; });
}

}  // namespace superosc::hypergeometric

#endif  // SUPEROSC_HYPERGEOMETRIC_HPP
