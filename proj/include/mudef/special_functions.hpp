#ifndef MUDEF_SPECIAL_FUNCTIONS_HPP
#define MUDEF_SPECIAL_FUNCTIONS_HPP

#include <stdexcept>

namespace mudef {

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.5772156649015328606;

/// Order of a Macdonald function K_alpha. Must be finite; supported range
/// |alpha| <= 50.
struct RealOrder {
  double value;
  explicit RealOrder(double v);
};

/// log Gamma(x) for x > 0. Relative error <= 1e-13 on [1e-6, 1e8].
double log_gamma(double x);

/// Digamma psi(x) for x > 0, absolute error <= 1e-12.
double digamma(double x);

/// Gamma(a)/Gamma(b), evaluated in log space.
double gamma_ratio(double a, double b);

/// Result of a Macdonald function evaluation. When the unscaled value
/// underflows to zero, `underflow` is set and `value` is 0.
struct BesselKResult {
  double value;
  bool underflow;
};

/// K_alpha(x) for x > 0. Even in alpha by construction.
BesselKResult bessel_k(RealOrder alpha, double x);

/// Exponentially scaled variant exp(x) * K_alpha(x).
double bessel_k_scaled(RealOrder alpha, double x);

/// Closed form of the Mellin-type moment
///   int_0^inf K_alpha(s) s^(beta-1) ds = 2^(beta-2) G((beta-alpha)/2) G((beta+alpha)/2),
/// valid for beta > |alpha|.
double k_moment(RealOrder alpha, double beta);

/// Its logarithm (beta > |alpha|).
double log_k_moment(RealOrder alpha, double beta);

}  // namespace mudef

#endif
