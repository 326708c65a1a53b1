#ifndef MUDEF_QUADRATURE_HPP
#define MUDEF_QUADRATURE_HPP

#include <functional>
#include <stdexcept>
#include <vector>

#include "mudef/mu_core.hpp"

namespace mudef {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 2000;
  double tail_start = 8.0;  // doubling search for the truncation radius starts here
};

struct QuadratureResult {
  double value;
  double err_est;
};

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive Gauss-Kronrod 7-15 on (a, b), open at both endpoints (no node
/// touches an endpoint). `split_points` force panel boundaries, e.g. at the
/// interior zeros of an entropy integrand.
QuadratureResult adaptive_gauss_kronrod(const std::function<double(double)>& f, double a,
                                        double b, const QuadratureConfig& cfg,
                                        const std::vector<double>& split_points = {});

/// Integral over (0, inf), truncated at a tail cut found by doubling from
/// cfg.tail_start until |f| < abs_tol, hard-capped at `cap`.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         const QuadratureConfig& cfg, double cap = 700.0);

enum class Space { ground, phase };

/// ||f||^2 by quadrature: over R against dg_mu, or the parity-split phase
/// space norm of the polynomial z -> f(z).
double norm_sq_oracle(const DensePolynomial& f, Space space, MuParameter mu,
                      const QuadratureConfig& cfg);

/// Shannon entropy by quadrature of the defining integral. Uses no
/// closed-form entropy formula: radial reduction for monomials, a 2-D
/// (angular x radial) rule for other phase-space polynomials, and the
/// even/odd decomposition identity for mixed parity.
double entropy_oracle(const DensePolynomial& f, Space space, MuParameter mu,
                      const QuadratureConfig& cfg);

/// Entropy of the basis monomial xi_n in phase space, radial log-space path.
double entropy_oracle_xi(int n, MuParameter mu, const QuadratureConfig& cfg);

/// Entropy of t^n in the ground-state space, log-space path (n up to ~200).
double entropy_oracle_monomial_ground(int n, MuParameter mu, const QuadratureConfig& cfg);

/// Second radial moment (energy) by quadrature; mixed parity sums the parts.
double energy_oracle(const DensePolynomial& f, MuParameter mu, const QuadratureConfig& cfg);

/// Energy of xi_n, radial log-space path.
double energy_oracle_xi(int n, MuParameter mu, const QuadratureConfig& cfg);

/// Total mass of a measure by quadrature.
QuadratureResult mass_oracle(const MeasureDensity& measure, const QuadratureConfig& cfg);

}  // namespace mudef

#endif
