#include "mudef/transform.hpp"

#include <cmath>

namespace mudef {

ComplexGrid ComplexGrid::standard() {
  ComplexGrid g;
  g.points.push_back({0.0, 0.0});
  for (double r : {0.25, 0.5, 1.0, 2.0})
    for (double th : {0.0, M_PI / 4.0, M_PI / 2.0, 3.0 * M_PI / 4.0})
      g.points.push_back(std::polar(r, th));
  return g;
}

std::complex<double> bargmann_transform(const DensePolynomial& f, MuParameter mu,
                                        std::complex<double> z, const QuadratureConfig& cfg) {
  const double series_tol = cfg.abs_tol;
  const MeasureDensity ground(MeasureKind::ground_state, mu);
  auto kernel = [&](double t) {
    // t covers both half-lines: the call sites pass t and -t explicitly.
    return e_mu(std::sqrt(2.0) * t * z, mu, series_tol) * f(t) *
           std::exp(ground.log_density(t));
  };
  auto half = [&](bool negative, bool imag_part) {
    auto integrand = [&](double t) {
      const std::complex<double> v = kernel(negative ? -t : t);
      return imag_part ? v.imag() : v.real();
    };
    return integrate_semi_infinite(integrand, cfg, 26.0).value;
  };
  const std::complex<double> integral(half(false, false) + half(true, false),
                                      half(false, true) + half(true, true));
  return std::exp(-z * z / 2.0) * integral;
}

std::vector<double> zeta_expansion(const DensePolynomial& f, MuParameter mu) {
  const int deg = f.degree();
  // zeta_n has degree exactly n, so the change of basis is triangular:
  // peel off the leading coefficient from the top down.
  std::vector<double> a(deg + 1, 0.0);
  DensePolynomial rest = f;
  for (int n = deg; n >= 0; --n) {
    if (rest.degree() < n) {
      a[n] = 0.0;
      continue;
    }
    const DensePolynomial zn = zeta_mu(n, mu);
    a[n] = rest.coeffs()[n] / zn.coeffs()[n];
    rest = rest + zn * (-a[n]);
  }
  return a;
}

DensePolynomial bargmann_transform_exact(const DensePolynomial& f, MuParameter mu) {
  const std::vector<double> a = zeta_expansion(f, mu);
  Eigen::VectorXd c = Eigen::VectorXd::Zero(a.size());
  for (size_t n = 0; n < a.size(); ++n)
    c[static_cast<int>(n)] = a[n] * xi_mu_norm_const(static_cast<int>(n), mu);
  return DensePolynomial(std::move(c));
}

double verify_basis_transform(int n_max, MuParameter mu, const ComplexGrid& grid,
                              const QuadratureConfig& cfg) {
  if (n_max < 0 || n_max > 12)
    throw std::domain_error("verify_basis_transform: n_max must be in [0, 12]");
  double max_dev = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    const DensePolynomial zn = zeta_mu(n, mu);
    const double xi_scale = xi_mu_norm_const(n, mu);
    for (const auto& z : grid.points) {
      const std::complex<double> via_integral = bargmann_transform(zn, mu, z, cfg);
      const std::complex<double> xi = xi_scale * std::pow(z, n);
      max_dev = std::max(max_dev, std::abs(via_integral - xi));
    }
  }
  return max_dev;
}

}  // namespace mudef
