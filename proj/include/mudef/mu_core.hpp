#ifndef MUDEF_MU_CORE_HPP
#define MUDEF_MU_CORE_HPP

#include <Eigen/Core>
#include <complex>
#include <stdexcept>

#include "mudef/special_functions.hpp"

namespace mudef {

/// Deformation parameter, constrained to mu > -1/2.
class MuParameter {
 public:
  explicit MuParameter(double mu) : mu_(mu) {
    if (!(mu > -0.5) || !std::isfinite(mu))
      throw std::domain_error("MuParameter: mu must exceed -1/2");
  }
  double value() const { return mu_; }

 private:
  double mu_;
};

/// Real polynomial with dense coefficients, coeffs[k] multiplying t^k.
class DensePolynomial {
 public:
  DensePolynomial() : coeffs_(Eigen::VectorXd::Zero(1)) {}
  explicit DensePolynomial(Eigen::VectorXd coeffs);

  const Eigen::VectorXd& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }

  double operator()(double t) const;
  std::complex<double> operator()(std::complex<double> z) const;

  /// Even-index / odd-index parts (as full polynomials of the same variable).
  DensePolynomial even_part() const;
  DensePolynomial odd_part() const;

  DensePolynomial operator*(double s) const;
  DensePolynomial operator+(const DensePolynomial& other) const;

 private:
  Eigen::VectorXd coeffs_;  // trailing coefficient nonzero unless zero polynomial
};

/// Which radial weight a MeasureDensity carries.
enum class MeasureKind { ground_state, even_phase, odd_phase };

/// Tagged weight function: the deformed Gaussian on R, or one of the two
/// Macdonald-weighted radial densities on C.
class MeasureDensity {
 public:
  MeasureDensity(MeasureKind kind, MuParameter mu) : kind_(kind), mu_(mu) {}

  MeasureKind kind() const { return kind_; }
  MuParameter mu() const { return mu_; }

  /// Macdonald order used by the phase-space kinds: mu -/+ 1/2.
  double bessel_order() const;

  /// Density wrt Lebesgue measure (dt on R for ground_state; dx dy on C for
  /// the phase kinds, evaluated at radius r = |z|). Throws at r = 0 when the
  /// value there is singular (the singularity is integrable; integrate with
  /// an open endpoint).
  double operator()(double point) const;

  /// log of the density, for use inside log-space integrands. Same domain.
  double log_density(double point) const;

  /// Total mass, by closed form.
  double mass() const;

 private:
  MeasureKind kind_;
  MuParameter mu_;
};

/// theta(n): 1 for odd n, 0 for even n >= 1.
int theta_odd(int n);

/// Deformed factorial gamma_mu(n) by the defining recursion.
double gamma_mu(int n, MuParameter mu);

/// log gamma_mu(n) from the even/odd closed forms, stable up to n ~ 1e9.
double log_gamma_mu(int n, MuParameter mu);

/// Deformed exponential: partial sum of sum z^n / gamma_mu(n) to tolerance tol.
std::complex<double> e_mu(std::complex<double> z, MuParameter mu, double tol);

/// Degree-n deformed Hermite polynomial, by the generating-function convolution.
DensePolynomial hermite_mu(int n, MuParameter mu);

/// Normalized deformed Hermite polynomial (unit norm in the ground-state space).
DensePolynomial zeta_mu(int n, MuParameter mu);

/// Normalization constant gamma_mu(n)^(-1/2) of the monomial basis element.
double xi_mu_norm_const(int n, MuParameter mu);

}  // namespace mudef

#endif
