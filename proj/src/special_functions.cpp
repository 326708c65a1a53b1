#include "mudef/special_functions.hpp"

#include <cmath>
#include <limits>

namespace mudef {
namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // log(2*pi)/2

// Bernoulli quotients B_{2k}/(2k(2k-1)) for the Stirling correction series.
constexpr double kStirling[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
};

// B_{2k}/(2k) for the digamma asymptotic series, through the x^-14 term.
constexpr double kDigammaAsym[] = {
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
};

double log_gamma_big(double x) {
  // Stirling with correction series, x >= 10.
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double corr = 0.0;
  double p = inv;
  for (double c : kStirling) {
    corr += c * p;
    p *= inv2;
  }
  return (x - 0.5) * std::log(x) - x + kHalfLog2Pi + corr;
}

}  // namespace

RealOrder::RealOrder(double v) : value(v) {
  if (!std::isfinite(v)) throw std::domain_error("RealOrder: order must be finite");
  if (std::fabs(v) > 50.0) throw std::range_error("RealOrder: |alpha| > 50 unsupported");
}

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::domain_error("log_gamma: x must be positive and finite");
  if (x >= 10.0) return log_gamma_big(x);
  // Shift into the asymptotic range: Gamma(x) = Gamma(x+m) / (x (x+1) ... (x+m-1)).
  double shift = 0.0;
  double y = x;
  while (y < 10.0) {
    shift += std::log(y);
    y += 1.0;
  }
  return log_gamma_big(y) - shift;
}

double digamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::domain_error("digamma: x must be positive and finite");
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  double p = inv2;
  for (double c : kDigammaAsym) {
    series += c * p;
    p *= inv2;
  }
  return acc + std::log(x) - 0.5 * inv - series;
}

double gamma_ratio(double a, double b) { return std::exp(log_gamma(a) - log_gamma(b)); }

namespace {

// Coefficients of 1/Gamma(z) = sum c_k z^k (Abramowitz & Stegun 6.1.34).
constexpr double kInvGamma[] = {
    0.0,
    1.0,
    0.5772156649015329,
    -0.6558780715202538,
    -0.0420026350340952,
    0.1665386113822915,
    -0.0421977345555443,
    -0.0096219715278770,
    0.0072189432466630,
    0.0011651675918591,
    -0.0002152416741149,
    -0.0001280502823882,
};

// gam1 = (1/Gamma(1-nu) - 1/Gamma(1+nu)) / (2 nu), stable through nu -> 0.
double temme_gam1(double nu) {
  if (std::fabs(nu) > 0.01) {
    const double gp = std::exp(-log_gamma(1.0 + nu));
    const double gm = std::exp(-log_gamma(1.0 - nu));
    return (gm - gp) / (2.0 * nu);
  }
  // Odd part of 1/Gamma(1+nu) = sum c_{k+1} nu^k.
  const double nu2 = nu * nu;
  return -(kInvGamma[2] + nu2 * (kInvGamma[4] + nu2 * (kInvGamma[6] + nu2 * (kInvGamma[8] + nu2 * kInvGamma[10]))));
}

double temme_gam2(double nu) {
  const double gp = std::exp(-log_gamma(1.0 + nu));
  const double gm = std::exp(-log_gamma(1.0 - nu));
  return 0.5 * (gm + gp);
}

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Temme's series for exp(x)*K_nu(x) and exp(x)*K_{nu+1}(x), |nu| <= 1/2, 0 < x <= 2.
void bessel_k_small_scaled(double nu, double x, double& knu, double& knu1) {
  const double x1 = 0.5 * x;
  const double pimu = M_PI * nu;
  const double fact = (std::fabs(pimu) < kEps) ? 1.0 : pimu / std::sin(pimu);
  const double d = -std::log(x1);
  const double e = nu * d;
  const double fact2 = (std::fabs(e) < kEps) ? 1.0 : std::sinh(e) / e;
  const double gam1 = temme_gam1(nu);
  const double gam2 = temme_gam2(nu);
  const double gampl = gam2 - nu * gam1;
  const double gammi = gam2 + nu * gam1;
  double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
  double sum = ff;
  double c = 1.0;
  const double d2 = x1 * x1;
  const double ee = std::exp(e);
  double p = 0.5 * ee / gampl;
  double q = 0.5 / (ee * gammi);
  double sum1 = p;
  for (int i = 1; i <= 400; ++i) {
    ff = (i * ff + p + q) / (i * i - nu * nu);
    c *= d2 / i;
    p /= (i - nu);
    q /= (i + nu);
    const double del = c * ff;
    sum += del;
    const double del1 = c * (p - i * ff);
    sum1 += del1;
    if (std::fabs(del) < std::fabs(sum) * kEps) break;
  }
  const double scale = std::exp(x);
  knu = sum * scale;
  knu1 = sum1 * (2.0 / x) * scale;
}

// Steed's continued fraction CF2 for exp(x)*K_nu(x), |nu| <= 1/2, x >= 2.
void bessel_k_large_scaled(double nu, double x, double& knu, double& knu1) {
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25 - nu * nu;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 2; i <= 20000; ++i) {
    a -= 2 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::fabs(dels / s) < kEps) break;
  }
  h = a1 * h;
  knu = std::sqrt(M_PI / (2.0 * x)) / s;
  knu1 = knu * (nu + x + 0.5 - h) / x;
}

}  // namespace

double bessel_k_scaled(RealOrder alpha, double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::domain_error("bessel_k: x must be positive and finite");
  const double a = std::fabs(alpha.value);  // K is even in the order
  const int nl = static_cast<int>(a + 0.5);
  const double nu = a - nl;  // |nu| <= 1/2
  double knu, knu1;
  if (x <= 2.0)
    bessel_k_small_scaled(nu, x, knu, knu1);
  else
    bessel_k_large_scaled(nu, x, knu, knu1);
  double kl = knu, kh = knu1;
  double mu = nu;
  for (int i = 0; i < nl; ++i) {
    const double kn = kl + 2.0 * (mu + 1.0) / x * kh;
    kl = kh;
    kh = kn;
    mu += 1.0;
  }
  return kl;
}

BesselKResult bessel_k(RealOrder alpha, double x) {
  const double scaled = bessel_k_scaled(alpha, x);
  const double logv = std::log(scaled) - x;
  if (logv < std::log(std::numeric_limits<double>::min()) + 2.0)
    return {0.0, true};
  return {scaled * std::exp(-x), false};
}

double log_k_moment(RealOrder alpha, double beta) {
  const double a = std::fabs(alpha.value);
  if (!(beta > a)) throw std::domain_error("k_moment: requires beta > |alpha|");
  return (beta - 2.0) * std::log(2.0) + log_gamma(0.5 * (beta - a)) + log_gamma(0.5 * (beta + a));
}

double k_moment(RealOrder alpha, double beta) { return std::exp(log_k_moment(alpha, beta)); }

}  // namespace mudef
