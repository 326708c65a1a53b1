#ifndef MUDEF_TRANSFORM_HPP
#define MUDEF_TRANSFORM_HPP

#include <complex>
#include <vector>

#include "mudef/quadrature.hpp"

namespace mudef {

/// Evaluation sites for transform verification.
struct ComplexGrid {
  std::vector<std::complex<double>> points;

  /// {r e^{i theta} : r in {0.25, 0.5, 1, 2}, theta in {0, pi/4, pi/2, 3pi/4}}
  /// together with the origin.
  static ComplexGrid standard();
};

/// Integral form of the deformed Segal-Bargmann transform,
///   (B f)(z) = exp(-z^2/2) int_R e_mu(sqrt(2) t z) f(t) dg_mu(t),
/// with real and imaginary parts integrated separately.
std::complex<double> bargmann_transform(const DensePolynomial& f, MuParameter mu,
                                        std::complex<double> z, const QuadratureConfig& cfg);

/// Exact image of a polynomial: expand f in the {zeta_n} basis (triangular
/// solve against the deformed Hermite coefficients) and map zeta_n -> xi_n.
/// Returns the monomial coefficients of the image.
DensePolynomial bargmann_transform_exact(const DensePolynomial& f, MuParameter mu);

/// Coefficients a_n of f = sum a_n zeta_n^mu.
std::vector<double> zeta_expansion(const DensePolynomial& f, MuParameter mu);

/// max over n <= n_max and z in grid of |B(zeta_n)(z) - xi_n(z)|.
double verify_basis_transform(int n_max, MuParameter mu, const ComplexGrid& grid,
                              const QuadratureConfig& cfg);

}  // namespace mudef

#endif
