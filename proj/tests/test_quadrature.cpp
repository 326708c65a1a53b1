#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mudef/entropy_energy.hpp"
#include "mudef/quadrature.hpp"

using namespace mudef;

TEST_CASE("adaptive Gauss-Kronrod on elementary integrals") {
  QuadratureConfig cfg;
  CHECK(adaptive_gauss_kronrod([](double x) { return x * x; }, 0.0, 1.0, cfg).value ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(adaptive_gauss_kronrod([](double x) { return std::sin(x); }, 0.0, M_PI, cfg)
            .value == doctest::Approx(2.0).epsilon(1e-12));
  // Kink at 0.5, forced as a split point.
  CHECK(adaptive_gauss_kronrod([](double x) { return std::fabs(x - 0.5); }, 0.0, 1.0,
                               cfg, {0.5})
            .value == doctest::Approx(0.25).epsilon(1e-13));
  // Integrable endpoint singularity.
  CHECK(adaptive_gauss_kronrod([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0,
                               cfg)
            .value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("semi-infinite integration") {
  QuadratureConfig cfg;
  CHECK(integrate_semi_infinite([](double t) { return std::exp(-t * t); }, cfg).value ==
        doctest::Approx(0.5 * std::sqrt(M_PI)).epsilon(1e-12));
  CHECK(integrate_semi_infinite([](double t) { return t * t * std::exp(-t); }, cfg)
            .value == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("non-finite integrand samples are rejected") {
  QuadratureConfig cfg;
  CHECK_THROWS_AS(adaptive_gauss_kronrod([](double x) { return 1.0 / (x - 0.3791); },
                                         0.0, 1.0, cfg),
                  QuadratureError);
}

TEST_CASE("entropy oracle against frozen independent evaluations") {
  QuadratureConfig cfg;
  // Frozen from 30-digit arbitrary-precision quadrature of the defining
  // integrals, not from the closed forms.
  CHECK(entropy_oracle_xi(2, MuParameter(1.0), cfg) ==
        doctest::Approx(0.72047586763554594464).epsilon(1e-9));
  CHECK(entropy_oracle_xi(3, MuParameter(0.5), cfg) ==
        doctest::Approx(1.3252058247354561088).epsilon(1e-9));
  CHECK(entropy_oracle_monomial_ground(3, MuParameter(1.25), cfg) ==
        doctest::Approx(26.251699504784960226).epsilon(1e-9));
  CHECK(energy_oracle_xi(4, MuParameter(2.5), cfg) ==
        doctest::Approx(7.2480592227596548104).epsilon(1e-9));
}

TEST_CASE("entropy oracle handles a polynomial with interior zeros") {
  QuadratureConfig cfg;
  MuParameter mu(0.0);
  // f = zeta_2 has a sign change on (0, inf); the oracle must split there.
  const DensePolynomial z2 = zeta_mu(2, mu);
  const double s = entropy_oracle(z2, Space::ground, mu, cfg);
  CHECK(std::isfinite(s));
  // General-polynomial phase path (non-monomial even polynomial) against a
  // frozen 30-digit arbitrary-precision 2-D (radial x angular) evaluation.
  // Note: within one parity the entropy is NOT the mixture of the monomial
  // entropies; the angular cross terms contribute.
  Eigen::VectorXd c = Eigen::VectorXd::Zero(5);
  const double a = 0.6, b = 0.8;  // a^2 + b^2 = 1
  c[0] = a * xi_mu_norm_const(0, mu);
  c[4] = b * xi_mu_norm_const(4, mu);
  const DensePolynomial f(c);
  CHECK(norm_sq_oracle(f, Space::phase, mu, cfg) ==
        doctest::Approx(1.0).epsilon(1e-8));
  CHECK(entropy_oracle(f, Space::phase, mu, cfg) ==
        doctest::Approx(1.4422120827383635046).epsilon(1e-6));
}

TEST_CASE("mixed-parity entropy decomposes over the parity components") {
  QuadratureConfig cfg;
  for (double m : {-0.25, 0.5, 1.0}) {
    MuParameter mu(m);
    const double a = 0.6, b = 0.8;
    Eigen::VectorXd c = Eigen::VectorXd::Zero(3);
    c[1] = a * xi_mu_norm_const(1, mu);
    c[2] = b * xi_mu_norm_const(2, mu);
    const double got = entropy_oracle(DensePolynomial(c), Space::phase, mu, cfg);
    const double expect = a * a * entropy_xi(1, mu).value +
                          b * b * entropy_xi(2, mu).value + a * a * std::log(a * a) +
                          b * b * std::log(b * b);
    CHECK(got == doctest::Approx(expect).epsilon(1e-6));
  }
}

TEST_CASE("entropy is homogeneous of degree two") {
  QuadratureConfig cfg;
  MuParameter mu(0.5);
  Eigen::VectorXd c = Eigen::VectorXd::Zero(3);
  c[0] = 0.4;
  c[2] = 0.9;
  const DensePolynomial g(c);
  for (double lambda : {0.5, 1.7, 3.0}) {
    const double base = entropy_oracle(g, Space::phase, mu, cfg);
    const double scaled = entropy_oracle(g * lambda, Space::phase, mu, cfg);
    CHECK(scaled == doctest::Approx(lambda * lambda * base).epsilon(1e-7));
    const double bg = entropy_oracle(g, Space::ground, mu, cfg);
    const double sg = entropy_oracle(g * lambda, Space::ground, mu, cfg);
    CHECK(sg == doctest::Approx(lambda * lambda * bg).epsilon(1e-7));
  }
}

TEST_CASE("norm oracle consistency between spaces on basis elements") {
  QuadratureConfig cfg;
  for (double m : {-0.25, 0.0, 1.0, 2.5}) {
    MuParameter mu(m);
    for (int n = 0; n <= 8; ++n) {
      // The zeta basis is unit-norm on the ground side; the xi basis on the
      // phase side. Both integrals come out through different code paths.
      CHECK(norm_sq_oracle(zeta_mu(n, mu), Space::ground, mu, cfg) ==
            doctest::Approx(1.0).epsilon(1e-8));
    }
  }
}

TEST_CASE("zero polynomial is rejected") {
  QuadratureConfig cfg;
  MuParameter mu(0.0);
  CHECK_THROWS_AS(norm_sq_oracle(DensePolynomial(), Space::ground, mu, cfg),
                  std::invalid_argument);
  CHECK_THROWS_AS(entropy_oracle(DensePolynomial(), Space::phase, mu, cfg),
                  std::invalid_argument);
  CHECK_THROWS_AS(energy_oracle(DensePolynomial(), mu, cfg), std::invalid_argument);
}

TEST_CASE("energy oracle on a mixed-parity polynomial is additive") {
  QuadratureConfig cfg;
  MuParameter mu(1.0);
  Eigen::VectorXd c = Eigen::VectorXd::Zero(4);
  c[1] = 0.7;
  c[2] = 0.2;
  c[3] = 0.4;
  const DensePolynomial f(c);
  const double whole = energy_oracle(f, mu, cfg);
  const double parts = energy_oracle(f.even_part(), mu, cfg) +
                       energy_oracle(f.odd_part(), mu, cfg);
  CHECK(whole == doctest::Approx(parts).epsilon(1e-10));
}
