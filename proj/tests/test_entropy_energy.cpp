#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mudef/entropy_energy.hpp"

using namespace mudef;

namespace {
const double kMuGrid[] = {-0.25, 0.0, 0.5, 1.0, 2.5};
}

TEST_CASE("classical entropy values") {
  CHECK(entropy_classical(0).value == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(entropy_classical(1).value == doctest::Approx(1.0 - kEulerGamma).epsilon(1e-13));
  CHECK(entropy_classical(2).value ==
        doctest::Approx(3.0 - 2.0 * kEulerGamma - std::log(2.0)).epsilon(1e-13));
}

TEST_CASE("harmonic-sum form of the undeformed entropy") {
  double harmonic = 0.0, log_fact = 0.0;
  for (int n = 1; n <= 50; ++n) {
    harmonic += 1.0 / n;
    log_fact += std::log(static_cast<double>(n));
    const double via_sum = n * (harmonic - kEulerGamma) - log_fact;
    CHECK(std::fabs(entropy_classical(n).value - via_sum) <= 1e-10);
  }
}

TEST_CASE("parity dispatch is consistent") {
  for (double m : kMuGrid) {
    MuParameter mu(m);
    for (int n = 0; n <= 40; ++n) {
      const EntropyValue s = entropy_xi(n, mu);
      CHECK(s.n == n);
      if (n % 2 == 0)
        CHECK(std::fabs(s.value - entropy_xi_even(n / 2, mu).value) <= 1e-12);
      else
        CHECK(std::fabs(s.value - entropy_xi_odd((n - 1) / 2, mu).value) <= 1e-12);
    }
    // At mu = 0 the deformed entropies collapse to the classical sequence.
    for (int n = 0; n <= 50; ++n)
      CHECK(std::fabs(entropy_xi(n, MuParameter(0.0)).value -
                      entropy_classical(n).value) <= 1e-10);
  }
}

TEST_CASE("entropy of the first normalized Hermite element") {
  // mu = 0: 2 - log 2 - gamma.
  CHECK(entropy_zeta1(MuParameter(0.0)).value ==
        doctest::Approx(2.0 - std::log(2.0) - kEulerGamma).epsilon(1e-12));
  for (double m : kMuGrid)
    CHECK(entropy_zeta1(MuParameter(m)).value ==
          doctest::Approx(digamma(m + 1.5) - std::log(m + 0.5)).epsilon(1e-13));
}

TEST_CASE("transform entropy gap closed form") {
  // mu = 0: -(1 - log 2).
  CHECK(entropy_gap_zeta1(MuParameter(0.0)) ==
        doctest::Approx(-(1.0 - std::log(2.0))).epsilon(1e-12));
  for (double m : kMuGrid) CHECK(entropy_gap_zeta1(MuParameter(m)) < 0.0);
}

TEST_CASE("entropy sequences are increasing within each parity") {
  for (double m : kMuGrid) {
    MuParameter mu(m);
    double prev_even = entropy_xi_even(0, mu).value;
    double prev_odd = entropy_xi_odd(0, mu).value;
    CHECK(prev_even == doctest::Approx(0.0).epsilon(1e-14));
    for (int n = 1; n <= 500; ++n) {
      const double even = entropy_xi_even(n, mu).value;
      const double odd = entropy_xi_odd(n, mu).value;
      CHECK(even > prev_even);
      CHECK(odd > prev_odd);
      CHECK(even > 0.0);
      prev_even = even;
      prev_odd = odd;
    }
  }
}

TEST_CASE("difference limits with decreasing error") {
  for (double m : kMuGrid) {
    MuParameter mu(m);
    SUBCASE("first difference tends to 1") {
      double prev_err = std::numeric_limits<double>::infinity();
      for (int n : {10, 100, 1000, 2000}) {
        const double d = entropy_xi(n + 1, mu).value - entropy_xi(n, mu).value;
        const double err = std::fabs(d - 1.0);
        CHECK(err < prev_err);
        prev_err = err;
        if (n >= 1000) CHECK(err < 0.01);
      }
    }
    SUBCASE("even-step difference tends to 2") {
      double prev_err = std::numeric_limits<double>::infinity();
      for (int n : {10, 100, 1000}) {
        const double d =
            entropy_xi(2 * n + 2, mu).value - entropy_xi(2 * n, mu).value;
        const double err = std::fabs(d - 2.0);
        CHECK(err < prev_err);
        prev_err = err;
        if (n >= 1000) CHECK(err < 0.01);
      }
    }
    SUBCASE("Cesaro mean tends to 1") {
      double prev_err = std::numeric_limits<double>::infinity();
      for (int n : {100, 1000, 10000}) {
        const double err = std::fabs(entropy_xi(n, mu).value / n - 1.0);
        CHECK(err < prev_err);
        prev_err = err;
        if (n >= 10000) CHECK(err < 0.02);
      }
    }
    SUBCASE("n-th root growth of the deformed factorial tends to 1/e") {
      double prev_err = std::numeric_limits<double>::infinity();
      for (int n : {100, 1000, 10000}) {
        const double v = std::exp(log_gamma_mu(n, mu) / n) / n;
        const double err = std::fabs(v - std::exp(-1.0));
        CHECK(err < prev_err);
        prev_err = err;
        if (n >= 10000) CHECK(err < 3e-3);
      }
    }
  }
}

TEST_CASE("digamma half-argument identity") {
  for (int n = 0; n <= 200; ++n) {
    const double lhs = digamma((n + 1.0) / 2.0) + digamma((n + 2.0) / 2.0);
    const double rhs = 2.0 * digamma(n + 1.0) - 2.0 * std::log(2.0);
    CHECK(std::fabs(lhs - rhs) <= 1e-11);
  }
}

TEST_CASE("half-integer deformation identity") {
  for (int n = 0; n <= 10; ++n)
    for (int m = 0; m <= 10; ++m) {
      const auto [lhs, rhs] = entropy_relation_half_plus_m(n, m);
      CHECK(std::fabs(lhs - rhs) <= 1e-10);
    }
}

TEST_CASE("ground monomial entropy vs even phase entropy relation") {
  for (double m : kMuGrid) {
    MuParameter mu(m);
    for (int n = 1; n <= 20; ++n) {
      const auto [lhs, rhs] = s_vs_S_relation(n, mu);
      CHECK(std::fabs(lhs - rhs) <= 1e-9 * std::max(1.0, std::fabs(lhs)));
    }
    // The sequence grows with n.
    double prev = entropy_monomial_ground(1, mu).value;
    CHECK(prev > 0.0);
    for (int n = 2; n <= 30; ++n) {
      const double cur = entropy_monomial_ground(n, mu).value;
      CHECK(cur > prev);
      prev = cur;
    }
  }
}

TEST_CASE("energies: classical collapse and positivity") {
  for (int n = 0; n <= 20; ++n)
    CHECK(energy_xi(n, MuParameter(0.0)).value ==
          doctest::Approx(n + 1.0).epsilon(1e-12));
  for (double m : kMuGrid) {
    MuParameter mu(m);
    double prev_even = 0.0, prev_odd = 0.0;
    for (int n = 0; n <= 50; ++n) {
      const double even = energy_xi(2 * n, mu).value;
      const double odd = energy_xi(2 * n + 1, mu).value;
      CHECK(even > prev_even);  // positive and increasing within parity
      CHECK(odd > prev_odd);
      prev_even = even;
      prev_odd = odd;
    }
  }
  // Frozen from a 30-digit arbitrary-precision evaluation.
  CHECK(energy_xi(4, MuParameter(2.5)).value ==
        doctest::Approx(7.2480592227596548104).epsilon(1e-12));
}

TEST_CASE("sharpness dichotomy at reduced scale") {
  const int n_max = 2000;
  for (double m : {-0.25, 0.5, 2.5}) {
    MuParameter mu(m);
    for (Parity p : {Parity::even, Parity::odd}) {
      for (double c : {1.2, 2.0})
        CHECK(classify_sharpness(sharpness_sequence(p, c, mu, n_max)) ==
              SharpnessVerdict::bounded);
      for (double c : {0.5, 1.0})
        CHECK(classify_sharpness(sharpness_sequence(p, c, mu, n_max)) ==
              SharpnessVerdict::unbounded);
    }
  }
  CHECK_THROWS_AS(classify_sharpness(sharpness_sequence(Parity::even, 1.2,
                                                        MuParameter(0.0), 50)),
                  std::domain_error);
}

TEST_CASE("behavior as mu grows without bound") {
  const std::vector<double> grid = {1.0, 10.0, 100.0, 1000.0};
  // Even index: S_2^mu - S_1 shrinks to zero monotonically.
  const auto even = entropy_limit_mu_infinity(2, grid);
  for (size_t i = 1; i < even.size(); ++i)
    CHECK(std::fabs(even[i]) < std::fabs(even[i - 1]));
  CHECK(std::fabs(even.back()) < 1e-3);
  // Odd index: S_1^mu decreases through negative values.
  const auto odd = entropy_limit_mu_infinity(1, grid);
  for (size_t i = 1; i < odd.size(); ++i) CHECK(odd[i] < odd[i - 1]);
  CHECK(odd.back() < 0.0);
}
