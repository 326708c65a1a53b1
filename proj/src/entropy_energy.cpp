#include "mudef/entropy_energy.hpp"

#include <cmath>

namespace mudef {
namespace {

// log(gamma_mu(n) / 2^n), the log-space term shared by the entropy formulas.
double log_gamma_mu_over_2n(int n, MuParameter mu) {
  return log_gamma_mu(n, mu) - n * std::log(2.0);
}

}  // namespace

EntropyValue entropy_xi_even(int n, MuParameter mu) {
  if (n < 0) throw std::domain_error("entropy_xi_even: n must be nonnegative");
  const double m = mu.value();
  const double value =
      n * (digamma(m + n + 0.5) + digamma(n + 1.0)) - log_gamma_mu_over_2n(2 * n, mu);
  return {2 * n, m, value};
}

EntropyValue entropy_xi_odd(int n, MuParameter mu) {
  if (n < 0) throw std::domain_error("entropy_xi_odd: n must be nonnegative");
  const double m = mu.value();
  const double value = (n + 0.5) * (digamma(m + n + 1.5) + digamma(n + 1.0)) -
                       log_gamma_mu_over_2n(2 * n + 1, mu);
  return {2 * n + 1, m, value};
}

EntropyValue entropy_xi(int n, MuParameter mu) {
  if (n < 0) throw std::domain_error("entropy_xi: n must be nonnegative");
  return (n % 2 == 0) ? entropy_xi_even(n / 2, mu) : entropy_xi_odd((n - 1) / 2, mu);
}

EntropyValue entropy_classical(int n) {
  if (n < 0) throw std::domain_error("entropy_classical: n must be nonnegative");
  return {n, 0.0, n * digamma(n + 1.0) - log_gamma(n + 1.0)};
}

EntropyValue entropy_monomial_ground(int n, MuParameter mu) {
  if (n < 0) throw std::domain_error("entropy_monomial_ground: n must be nonnegative");
  const double m = mu.value();
  const double log_ratio = log_gamma(n + m + 0.5) - log_gamma(m + 0.5);
  const double value = std::exp(log_ratio) * (n * digamma(n + m + 0.5) - log_ratio);
  return {n, m, value};
}

EntropyValue entropy_zeta1(MuParameter mu) {
  const double m = mu.value();
  return {1, m, digamma(m + 1.5) - std::log(m + 0.5)};
}

double entropy_gap_zeta1(MuParameter mu) {
  return -0.5 * (digamma(mu.value() + 1.5) + kEulerGamma);
}

std::pair<double, double> entropy_relation_half_plus_m(int n, int m) {
  if (n < 0 || m < 0) throw std::domain_error("entropy_relation: n, m must be nonnegative");
  const double lhs = entropy_classical(n + m).value + entropy_classical(n).value -
                     entropy_classical(m).value;
  double tail = 0.0;
  for (int k = 0; k < n; ++k) tail += static_cast<double>(m) / (m + k + 1.0);
  const double rhs = entropy_xi_even(n, MuParameter(0.5 + m)).value + tail;
  return {lhs, rhs};
}

EnergyValue energy_xi(int n, MuParameter mu) {
  if (n < 0) throw std::domain_error("energy_xi: n must be nonnegative");
  const double m = mu.value();
  double logv;
  if (n % 2 == 0) {
    const int h = n / 2;
    logv = std::log(2.0) + log_gamma(h + 1.5) + log_gamma(h + m + 1.0) -
           log_gamma(h + 1.0) - log_gamma(h + m + 0.5);
  } else {
    const int h = (n - 1) / 2;
    logv = std::log(2.0) + log_gamma(h + 1.5) + log_gamma(h + m + 2.0) -
           log_gamma(h + 1.0) - log_gamma(h + m + 1.5);
  }
  return {n, m, std::exp(logv)};
}

std::vector<SharpnessPoint> sharpness_sequence(Parity parity, double c, MuParameter mu,
                                               int n_max) {
  if (n_max < 1) throw std::domain_error("sharpness_sequence: n_max must be positive");
  const double m = mu.value();
  std::vector<SharpnessPoint> seq;
  seq.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    const int index = (parity == Parity::even) ? 2 * n : 2 * n + 1;
    const double gap = energy_xi(index, mu).value - c * entropy_xi(index, mu).value;
    const double shift = (parity == Parity::even) ? 0.5 : 1.5;
    const double predictor = (1.0 - c) * 2.0 * n + c * (m + 0.5) * std::log(m + n + shift);
    seq.push_back({n, c, m, gap, predictor});
  }
  return seq;
}

SharpnessVerdict classify_sharpness(const std::vector<SharpnessPoint>& seq) {
  const int n_max = static_cast<int>(seq.size()) - 1;
  if (n_max < 100) throw std::domain_error("classify_sharpness: need n_max >= 100");
  int argmax = 0;
  for (int i = 1; i <= n_max; ++i)
    if (seq[i].gap > seq[argmax].gap) argmax = i;

  // Bounded: the maximum occurs before the last decade and the tail decreases
  // across that decade.
  const int decade = n_max / 10;
  bool tail_decreasing = argmax < decade;
  double prev = seq[decade].gap;
  for (int i = decade + 1; i <= n_max && tail_decreasing; i += std::max(1, n_max / 200)) {
    if (seq[i].gap >= prev) tail_decreasing = false;
    prev = seq[i].gap;
  }
  if (tail_decreasing) return SharpnessVerdict::bounded;

  // Unbounded: growth between n_max/100 and n_max exceeds half of what the
  // asymptotic expansion predicts for that stretch.
  const int lo = std::max(1, n_max / 100);
  const double growth = seq[n_max].gap - seq[lo].gap;
  const double predicted = seq[n_max].predictor - seq[lo].predictor;
  if (predicted > 0.0 && growth > 0.5 * predicted) return SharpnessVerdict::unbounded;
  return SharpnessVerdict::inconclusive;
}

std::vector<double> entropy_limit_mu_infinity(int index, const std::vector<double>& mu_grid) {
  if (index < 1) throw std::domain_error("entropy_limit_mu_infinity: index must be positive");
  std::vector<double> out;
  out.reserve(mu_grid.size());
  for (double m : mu_grid) {
    const double s = entropy_xi(index, MuParameter(m)).value;
    if (index % 2 == 0)
      out.push_back(s - entropy_classical(index / 2).value);
    else
      out.push_back(s);
  }
  return out;
}

std::pair<double, double> s_vs_S_relation(int n, MuParameter mu) {
  if (n < 1) throw std::domain_error("s_vs_S_relation: n must be positive");
  const double m = mu.value();
  const double lhs = entropy_monomial_ground(n, mu).value;
  const double ratio = std::exp(log_gamma(n + m + 0.5) - log_gamma(m + 0.5));
  const double rhs =
      ratio * (entropy_xi_even(n, mu).value - entropy_classical(n).value);
  return {lhs, rhs};
}

}  // namespace mudef
