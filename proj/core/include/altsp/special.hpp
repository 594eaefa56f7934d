#ifndef ALTSP_SPECIAL_HPP
#define ALTSP_SPECIAL_HPP

#include <numbers>

namespace altsp {

/// Euler-Mascheroni constant, pinned to full double precision.
inline constexpr double kEulerGamma = 0.5772156649015329;

/// pi^2 / 6, the variance of the standard extreme-value distribution.
inline constexpr double kPiSqOver6 =
    std::numbers::pi * std::numbers::pi / 6.0;

/// Standard normal cdf.
double normal_cdf(double x);

/// Standard normal quantile. Rational approximation refined by one
/// Halley step against the erfc-based cdf; absolute error well below
/// 1e-9 over (0,1). Throws DomainError outside (0,1).
double normal_quantile(double p);

/// cdf of the standard extreme-value (smallest) distribution,
/// G_s(t) = 1 - exp(-e^t).
double sev_cdf(double t);

/// Quantile of the standard extreme-value distribution,
/// u_p = ln(-ln(1-p)). Throws DomainError unless 0 < p < 1.
double sev_quantile(double p);

}  // namespace altsp

#endif  // ALTSP_SPECIAL_HPP
