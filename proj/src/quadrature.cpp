#include "mudef/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace mudef {
namespace {

// Gauss-Kronrod 7-15 abscissae and weights on [-1, 1].
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
  double a, b, value, err;
  bool operator<(const Panel& o) const { return err < o.err; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double resk = 0.0, resg = 0.0;
  for (int i = 0; i < 8; ++i) {
    double fsum;
    if (i == 7) {
      fsum = f(c);
    } else {
      fsum = f(c - h * kKronrodNodes[i]) + f(c + h * kKronrodNodes[i]);
    }
    if (!std::isfinite(fsum)) throw QuadratureError("non-finite integrand sample");
    resk += kKronrodWeights[i] * fsum;
    // The embedded Gauss-7 rule lives on the odd-index Kronrod nodes.
    if (i % 2 == 1) resg += kGaussWeights[i / 2] * fsum;
  }
  resk *= h;
  resg *= h;
  return {a, b, resk, std::fabs(resk - resg)};
}

double target_err(const QuadratureConfig& cfg, double value) {
  return std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(value));
}

}  // namespace

QuadratureResult adaptive_gauss_kronrod(const std::function<double(double)>& f, double a,
                                        double b, const QuadratureConfig& cfg,
                                        const std::vector<double>& split_points) {
  std::vector<double> bounds{a};
  for (double s : split_points)
    if (s > a && s < b) bounds.push_back(s);
  bounds.push_back(b);
  std::sort(bounds.begin(), bounds.end());

  std::priority_queue<Panel> heap;
  double total = 0.0, err = 0.0;
  for (size_t i = 0; i + 1 < bounds.size(); ++i) {
    Panel p = gk15(f, bounds[i], bounds[i + 1]);
    total += p.value;
    err += p.err;
    heap.push(p);
  }
  int used = static_cast<int>(bounds.size()) - 1;
  while (err > target_err(cfg, total) && used < cfg.max_subdivisions) {
    Panel worst = heap.top();
    heap.pop();
    total -= worst.value;
    err -= worst.err;
    const double mid = 0.5 * (worst.a + worst.b);
    Panel l = gk15(f, worst.a, mid);
    Panel r = gk15(f, mid, worst.b);
    total += l.value + r.value;
    err += l.err + r.err;
    heap.push(l);
    heap.push(r);
    ++used;
  }
  if (err > 1e3 * target_err(cfg, total))
    throw QuadratureError("adaptive quadrature failed to converge");
  return {total, err};
}

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         const QuadratureConfig& cfg, double cap) {
  double cut = std::min(cfg.tail_start, cap);
  // Scale estimate so the truncation criterion stays relative for integrands
  // that are large in absolute terms (unnormalized monomial moments).
  double peak = 0.0;
  for (int i = 1; i <= 16; ++i) peak = std::max(peak, std::fabs(f(cut * i / 16.0)));
  const double band = cfg.abs_tol + cfg.rel_tol * peak;
  while (cut < cap && std::fabs(f(cut)) * cut >= band) cut = std::min(2.0 * cut, cap);
  QuadratureResult res = adaptive_gauss_kronrod(f, 0.0, cut, cfg);
  // Discarded tail, bounded by the sampled magnitude at the cut.
  res.err_est += std::fabs(f(cut)) * cut;
  return res;
}

namespace {

double phi(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }  // 0 log 0 = 0

// Positive zeros of p on (0, hi), by sign-change bisection on a uniform scan.
std::vector<double> positive_roots(const DensePolynomial& p, double hi) {
  std::vector<double> roots;
  const int kSamples = 800;
  double prev_t = hi / kSamples * 1e-3;
  double prev_v = p(prev_t);
  for (int i = 1; i <= kSamples; ++i) {
    const double t = hi * i / kSamples;
    const double v = p(t);
    if ((prev_v < 0.0) != (v < 0.0)) {
      double lo = prev_t, up = t;
      for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + up);
        if ((p(mid) < 0.0) == (prev_v < 0.0))
          lo = mid;
        else
          up = mid;
      }
      roots.push_back(0.5 * (lo + up));
    }
    prev_t = t;
    prev_v = v;
  }
  return roots;
}

DensePolynomial reflect(const DensePolynomial& p) {
  Eigen::VectorXd c = p.coeffs();
  for (int k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return DensePolynomial(std::move(c));
}

constexpr double kGroundCap = 26.0;  // exp(-t^2) underflows past t^2 ~ 700

double ground_log_weight(double t, double m) {
  return -log_gamma(m + 0.5) - t * t + 2.0 * m * std::log(t);
}

// Radial phase-space prefactor: the measure density against dx dy is
// A * K_alpha(r^2) r^(2 mu + 1) with A = 2^(1/2-mu) / (pi Gamma(mu+1/2)).
double log_prefactor(double m) {
  return (0.5 - m) * std::log(2.0) - std::log(M_PI) - log_gamma(m + 0.5);
}

// In the s = r^2 substitution, int_C h(|z|) dnu = pi A int_0^inf h(sqrt(s))
// K_alpha(s) s^(mu+1/2) ds. This returns the log-space radial weight.
double phase_log_weight_s(double s, double m, double alpha) {
  return log_prefactor(m) + std::log(M_PI) + (m + 0.5) * std::log(s) +
         std::log(bessel_k_scaled(RealOrder(alpha), s)) - s;
}

struct MonomialEntropy {
  double norm_sq;
  double entropy;
};

// Entropy of the phase-space monomial a z^n (parity-matched measure),
// computed with log |a z^n|^2 = log a^2 + n log s after radial reduction.
MonomialEntropy phase_monomial_entropy(int n, double log_a2, MuParameter mu,
                                       const QuadratureConfig& cfg) {
  const double m = mu.value();
  const double alpha = (n % 2 == 0) ? m - 0.5 : m + 0.5;
  auto logw = [=](double s) {
    return phase_log_weight_s(s, m, alpha) + n * std::log(s) + log_a2;
  };
  const double norm = integrate_semi_infinite(
                          [&](double s) { return std::exp(logw(s)); }, cfg)
                          .value;
  const double t1 = integrate_semi_infinite(
                        [&](double s) {
                          return std::exp(logw(s)) * (log_a2 + n * std::log(s));
                        },
                        cfg)
                        .value;
  return {norm, t1 - phi(norm)};
}

// Angular average of |g(r e^{i theta})|^2 for real coefficients: the cross
// terms integrate to zero, leaving sum a_k^2 r^(2k).
double angular_mean_sq(const DensePolynomial& g, double r) {
  double acc = 0.0;
  const auto& c = g.coeffs();
  for (int k = g.degree(); k >= 0; --k) acc = acc * (r * r) + c[k] * c[k];
  return acc;
}

constexpr int kAngularNodes = 256;

double angular_phi_mean(const DensePolynomial& g, double r) {
  double acc = 0.0;
  for (int j = 0; j < kAngularNodes; ++j) {
    const double th = 2.0 * M_PI * (j + 0.5) / kAngularNodes;
    const std::complex<double> z = std::polar(r, th);
    acc += phi(std::norm(g(z)));
  }
  return acc / kAngularNodes;
}

// Parity-pure, possibly non-monomial polynomial in phase space. The angular
// integral is done by the trapezoid rule, the radial one adaptively.
double phase_parity_entropy(const DensePolynomial& g, MuParameter mu,
                            const QuadratureConfig& cfg, double* norm_out) {
  // Monomial fast path.
  int nonzero = 0, top = 0;
  for (int k = 0; k <= g.degree(); ++k)
    if (g.coeffs()[k] != 0.0) {
      ++nonzero;
      top = k;
    }
  if (nonzero == 1) {
    auto r = phase_monomial_entropy(top, 2.0 * std::log(std::fabs(g.coeffs()[top])), mu, cfg);
    if (norm_out) *norm_out = r.norm_sq;
    return r.entropy;
  }
  const double m = mu.value();
  const double alpha = (g.degree() % 2 == 0) ? m - 0.5 : m + 0.5;
  auto density_r = [=](double r) {
    return std::exp(log_prefactor(m) + std::log(bessel_k_scaled(RealOrder(alpha), r * r)) -
                    r * r + (2.0 * m + 1.0) * std::log(r));
  };
  const double cap_r = std::sqrt(700.0);
  const double norm =
      integrate_semi_infinite(
          [&](double r) { return 2.0 * M_PI * r * density_r(r) * angular_mean_sq(g, r); },
          cfg, cap_r)
          .value;
  const double t1 =
      integrate_semi_infinite(
          [&](double r) { return 2.0 * M_PI * r * density_r(r) * angular_phi_mean(g, r); },
          cfg, cap_r)
          .value;
  if (norm_out) *norm_out = norm;
  return t1 - phi(norm);
}

double ground_norm_sq(const DensePolynomial& f, MuParameter mu, const QuadratureConfig& cfg) {
  const double m = mu.value();
  const DensePolynomial fr = reflect(f);
  auto integrand = [&](double t) {
    const double ft = f(t), fm = fr(t);
    return std::exp(ground_log_weight(t, m)) * (ft * ft + fm * fm);
  };
  return integrate_semi_infinite(integrand, cfg, kGroundCap).value;
}

double phase_parity_norm_sq(const DensePolynomial& g, MuParameter mu,
                            const QuadratureConfig& cfg) {
  if (g.is_zero()) return 0.0;
  const double m = mu.value();
  const double alpha = (g.degree() % 2 == 0) ? m - 0.5 : m + 0.5;
  auto integrand = [&](double s) {
    double acc = 0.0;
    const auto& c = g.coeffs();
    for (int k = g.degree(); k >= 0; --k) acc = acc * s + c[k] * c[k];
    return std::exp(phase_log_weight_s(s, m, alpha)) * acc;
  };
  return integrate_semi_infinite(integrand, cfg).value;
}

}  // namespace

double norm_sq_oracle(const DensePolynomial& f, Space space, MuParameter mu,
                      const QuadratureConfig& cfg) {
  if (f.is_zero()) throw std::invalid_argument("norm_sq_oracle: zero polynomial");
  if (space == Space::ground) return ground_norm_sq(f, mu, cfg);
  return phase_parity_norm_sq(f.even_part(), mu, cfg) +
         phase_parity_norm_sq(f.odd_part(), mu, cfg);
}

double entropy_oracle(const DensePolynomial& f, Space space, MuParameter mu,
                      const QuadratureConfig& cfg) {
  if (f.is_zero()) throw std::invalid_argument("entropy_oracle: zero polynomial");
  if (space == Space::ground) {
    const double m = mu.value();
    const DensePolynomial fr = reflect(f);
    const double hi = kGroundCap;
    std::vector<double> splits = positive_roots(f, hi);
    for (double r : positive_roots(fr, hi)) splits.push_back(r);
    auto t1_integrand = [&](double t) {
      const double ft = f(t), fm = fr(t);
      return std::exp(ground_log_weight(t, m)) * (phi(ft * ft) + phi(fm * fm));
    };
    double cut = cfg.tail_start;
    while (cut < hi && std::fabs(t1_integrand(cut)) * cut >= cfg.abs_tol)
      cut = std::min(2.0 * cut, hi);
    const double t1 = adaptive_gauss_kronrod(t1_integrand, 0.0, cut, cfg, splits).value;
    const double norm = ground_norm_sq(f, mu, cfg);
    return t1 - phi(norm);
  }
  const DensePolynomial fe = f.even_part();
  const DensePolynomial fo = f.odd_part();
  if (fo.is_zero()) return phase_parity_entropy(fe, mu, cfg, nullptr);
  if (fe.is_zero()) return phase_parity_entropy(fo, mu, cfg, nullptr);
  // Mixed parity: even/odd decomposition identity.
  double ne = 0.0, no = 0.0;
  const double se = phase_parity_entropy(fe, mu, cfg, &ne);
  const double so = phase_parity_entropy(fo, mu, cfg, &no);
  const double n = ne + no;
  return se + so + ne * std::log(ne / n) + no * std::log(no / n);
}

double entropy_oracle_xi(int n, MuParameter mu, const QuadratureConfig& cfg) {
  return phase_monomial_entropy(n, -log_gamma_mu(n, mu), mu, cfg).entropy;
}

double entropy_oracle_monomial_ground(int n, MuParameter mu, const QuadratureConfig& cfg) {
  const double m = mu.value();
  auto logw = [=](double t) { return ground_log_weight(t, m) + 2.0 * n * std::log(t); };
  // Both half-lines contribute equally.
  const double norm =
      2.0 * integrate_semi_infinite([&](double t) { return std::exp(logw(t)); }, cfg,
                                    kGroundCap)
                .value;
  const double t1 =
      2.0 * integrate_semi_infinite(
                [&](double t) { return std::exp(logw(t)) * 2.0 * n * std::log(t); }, cfg,
                kGroundCap)
                .value;
  return t1 - phi(norm);
}

double energy_oracle(const DensePolynomial& f, MuParameter mu, const QuadratureConfig& cfg) {
  if (f.is_zero()) throw std::invalid_argument("energy_oracle: zero polynomial");
  double total = 0.0;
  for (const DensePolynomial& g : {f.even_part(), f.odd_part()}) {
    if (g.is_zero()) continue;
    const double m = mu.value();
    const double alpha = (g.degree() % 2 == 0) ? m - 0.5 : m + 0.5;
    auto integrand = [&, alpha](double s) {
      double acc = 0.0;
      const auto& c = g.coeffs();
      for (int k = g.degree(); k >= 0; --k) acc = acc * s + c[k] * c[k];
      return std::exp(phase_log_weight_s(s, m, alpha)) * s * acc;
    };
    total += integrate_semi_infinite(integrand, cfg).value;
  }
  return total;
}

double energy_oracle_xi(int n, MuParameter mu, const QuadratureConfig& cfg) {
  const double m = mu.value();
  const double alpha = (n % 2 == 0) ? m - 0.5 : m + 0.5;
  const double la2 = -log_gamma_mu(n, mu);
  auto integrand = [=](double s) {
    return std::exp(phase_log_weight_s(s, m, alpha) + n * std::log(s) + la2) * s;
  };
  return integrate_semi_infinite(integrand, cfg).value;
}

QuadratureResult mass_oracle(const MeasureDensity& measure, const QuadratureConfig& cfg) {
  if (measure.kind() == MeasureKind::ground_state) {
    auto integrand = [&](double t) { return std::exp(measure.log_density(t)); };
    QuadratureResult half = integrate_semi_infinite(integrand, cfg, kGroundCap);
    return {2.0 * half.value, 2.0 * half.err_est};
  }
  auto integrand = [&](double r) {
    return 2.0 * M_PI * r * std::exp(measure.log_density(r));
  };
  return integrate_semi_infinite(integrand, cfg, std::sqrt(700.0));
}

}  // namespace mudef
