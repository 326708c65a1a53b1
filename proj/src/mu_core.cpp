#include "mudef/mu_core.hpp"

#include <cmath>
#include <limits>

namespace mudef {

DensePolynomial::DensePolynomial(Eigen::VectorXd coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() == 0) coeffs_ = Eigen::VectorXd::Zero(1);
  int top = static_cast<int>(coeffs_.size()) - 1;
  while (top > 0 && coeffs_[top] == 0.0) --top;
  coeffs_.conservativeResize(top + 1);
}

double DensePolynomial::operator()(double t) const {
  double acc = 0.0;
  for (int k = degree(); k >= 0; --k) acc = acc * t + coeffs_[k];
  return acc;
}

std::complex<double> DensePolynomial::operator()(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (int k = degree(); k >= 0; --k) acc = acc * z + coeffs_[k];
  return acc;
}

DensePolynomial DensePolynomial::even_part() const {
  Eigen::VectorXd c = coeffs_;
  for (int k = 1; k < c.size(); k += 2) c[k] = 0.0;
  return DensePolynomial(std::move(c));
}

DensePolynomial DensePolynomial::odd_part() const {
  Eigen::VectorXd c = coeffs_;
  for (int k = 0; k < c.size(); k += 2) c[k] = 0.0;
  return DensePolynomial(std::move(c));
}

DensePolynomial DensePolynomial::operator*(double s) const {
  return DensePolynomial(Eigen::VectorXd(coeffs_ * s));
}

DensePolynomial DensePolynomial::operator+(const DensePolynomial& other) const {
  const auto n = std::max(coeffs_.size(), other.coeffs_.size());
  Eigen::VectorXd c = Eigen::VectorXd::Zero(n);
  c.head(coeffs_.size()) = coeffs_;
  c.head(other.coeffs_.size()) += other.coeffs_;
  return DensePolynomial(std::move(c));
}

int theta_odd(int n) {
  if (n < 0) throw std::domain_error("theta_odd: n must be nonnegative");
  return n % 2;
}

double gamma_mu(int n, MuParameter mu) {
  if (n < 0) throw std::domain_error("gamma_mu: n must be nonnegative");
  double acc = 1.0;
  for (int k = 1; k <= n; ++k) acc *= k + 2.0 * mu.value() * theta_odd(k);
  return acc;
}

double log_gamma_mu(int n, MuParameter mu) {
  if (n < 0) throw std::domain_error("log_gamma_mu: n must be nonnegative");
  const double m = mu.value();
  const double lg_half = log_gamma(m + 0.5);
  if (n % 2 == 0) {
    const int h = n / 2;
    return n * std::log(2.0) + log_gamma(h + 1.0) + log_gamma(m + h + 0.5) - lg_half;
  }
  const int h = (n - 1) / 2;
  return n * std::log(2.0) + log_gamma(h + 1.0) + log_gamma(m + h + 1.5) - lg_half;
}

std::complex<double> e_mu(std::complex<double> z, MuParameter mu, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("e_mu: tol must be positive");
  std::complex<double> sum = 1.0;
  std::complex<double> term = 1.0;
  double prev_mag = 0.0;
  for (int n = 1; n <= 100000; ++n) {
    term *= z / (n + 2.0 * mu.value() * theta_odd(n));
    sum += term;
    const double mag = std::abs(term);
    const double band = tol * (1.0 + std::abs(sum));
    if (mag < band && prev_mag < band && n > 1) break;
    prev_mag = mag;
  }
  return sum;
}

DensePolynomial hermite_mu(int n, MuParameter mu) {
  if (n < 0) throw std::domain_error("hermite_mu: n must be nonnegative");
  // Coefficient of t^(n-2k): n! * (-1)^k / k! * 2^(n-2k) / gamma_mu(n-2k),
  // assembled in log space so n up to ~150 stays representable.
  Eigen::VectorXd c = Eigen::VectorXd::Zero(n + 1);
  const double lg_n1 = log_gamma(n + 1.0);
  for (int k = 0; 2 * k <= n; ++k) {
    const int d = n - 2 * k;
    const double logmag =
        lg_n1 - log_gamma(k + 1.0) + d * std::log(2.0) - log_gamma_mu(d, mu);
    c[d] = (k % 2 == 0 ? 1.0 : -1.0) * std::exp(logmag);
  }
  return DensePolynomial(std::move(c));
}

DensePolynomial zeta_mu(int n, MuParameter mu) {
  const double logscale =
      -0.5 * n * std::log(2.0) - log_gamma(n + 1.0) + 0.5 * log_gamma_mu(n, mu);
  return hermite_mu(n, mu) * std::exp(logscale);
}

double xi_mu_norm_const(int n, MuParameter mu) {
  return std::exp(-0.5 * log_gamma_mu(n, mu));
}

double MeasureDensity::bessel_order() const {
  switch (kind_) {
    case MeasureKind::even_phase:
      return mu_.value() - 0.5;
    case MeasureKind::odd_phase:
      return mu_.value() + 0.5;
    default:
      throw std::logic_error("bessel_order: ground_state has no Macdonald order");
  }
}

double MeasureDensity::log_density(double point) const {
  const double m = mu_.value();
  if (kind_ == MeasureKind::ground_state) {
    const double t = point;
    if (t == 0.0) {
      if (m > 0.0) return -std::numeric_limits<double>::infinity();
      if (m == 0.0) return -log_gamma(0.5);
      throw std::domain_error("density: singular at t = 0 for mu < 0");
    }
    return -log_gamma(m + 0.5) - t * t + 2.0 * m * std::log(std::fabs(t));
  }
  const double r = point;
  if (!(r > 0.0)) throw std::domain_error("density: phase kinds need r > 0");
  const double alpha = bessel_order();
  const double s = r * r;
  // Exponentially scaled Bessel path keeps this finite out to r^2 ~ 700.
  return (0.5 - m) * std::log(2.0) - std::log(M_PI) - log_gamma(m + 0.5) +
         std::log(bessel_k_scaled(RealOrder(alpha), s)) - s +
         (2.0 * m + 1.0) * std::log(r);
}

double MeasureDensity::operator()(double point) const {
  if (kind_ == MeasureKind::ground_state && point == 0.0 && mu_.value() > 0.0) return 0.0;
  return std::exp(log_density(point));
}

double MeasureDensity::mass() const {
  const double m = mu_.value();
  switch (kind_) {
    case MeasureKind::ground_state:
    case MeasureKind::even_phase:
      return 1.0;
    case MeasureKind::odd_phase:
      // pi * C * k_moment(mu+1/2, mu+3/2) = sqrt(pi) Gamma(mu+1) / Gamma(mu+1/2)
      return std::sqrt(M_PI) * gamma_ratio(m + 1.0, m + 0.5);
  }
  return 1.0;
}

}  // namespace mudef
