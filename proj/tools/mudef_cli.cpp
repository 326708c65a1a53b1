// Command-line front end: verification reports, tables, and sweep data for
// the deformed Segal-Bargmann entropy/energy calculus.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mudef/entropy_energy.hpp"
#include "mudef/quadrature.hpp"
#include "mudef/report.hpp"
#include "mudef/transform.hpp"

namespace {

using namespace mudef;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<double> parse_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  for (double v : parse_list(csv)) out.push_back(static_cast<int>(v));
  return out;
}

struct OutputOptions {
  std::string format = "csv";
  std::string out_path;
};

// Machine-parsable output goes to stdout (or --out); logs go to stderr.
int emit(const OutputOptions& opt, const std::vector<ReportRow>& rows) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!opt.out_path.empty()) {
    file.open(opt.out_path);
    if (!file) {
      std::cerr << "error: cannot open " << opt.out_path << "\n";
      return kExitUsage;
    }
    os = &file;
  }
  if (opt.format == "json")
    write_json(*os, rows);
  else
    write_csv(*os, rows);
  return kExitPass;
}

ReportRow make_row(std::string kind, int n, double mu, double closed, double oracle,
                   double err_est, double abs_band, double rel_band) {
  ReportRow r;
  r.kind = std::move(kind);
  r.n = n;
  r.mu = mu;
  r.closed_form = closed;
  r.oracle = oracle;
  r.abs_err = std::fabs(closed - oracle);
  r.rel_err = r.abs_err / std::max(1.0, std::fabs(closed));
  r.quadrature_err_est = err_est;
  r.pass = r.abs_err <= std::max(abs_band, rel_band * std::fabs(closed));
  return r;
}

std::optional<std::vector<MuParameter>> validated_mus(const std::vector<double>& mus) {
  std::vector<MuParameter> out;
  for (double m : mus) {
    if (!(m > -0.5)) {
      std::cerr << "error: mu must exceed -1/2 (got " << m << ")\n";
      return std::nullopt;
    }
    out.emplace_back(m);
  }
  return out;
}

int cmd_verify(const std::string& mu_csv, int n_max, double abs_band, double rel_band,
               const QuadratureConfig& cfg, const OutputOptions& out) {
  auto mus = validated_mus(parse_list(mu_csv));
  if (!mus) return kExitUsage;
  struct Job {
    std::string kind;
    int n;
    MuParameter mu;
  };
  std::vector<Job> jobs;
  for (const auto& kind : {std::string("entropy"), std::string("energy"),
                           std::string("monomial-entropy")})
    for (const auto& mu : *mus)
      for (int n = 0; n <= n_max; ++n) jobs.push_back({kind, n, mu});

  std::vector<ReportRow> rows(jobs.size());
  parallel_for_index(static_cast<int>(jobs.size()), [&](int i) {
    const Job& j = jobs[i];
    double closed, oracle;
    if (j.kind == "entropy") {
      closed = entropy_xi(j.n, j.mu).value;
      oracle = entropy_oracle_xi(j.n, j.mu, cfg);
    } else if (j.kind == "energy") {
      closed = energy_xi(j.n, j.mu).value;
      oracle = energy_oracle_xi(j.n, j.mu, cfg);
    } else {
      closed = entropy_monomial_ground(j.n, j.mu).value;
      oracle = entropy_oracle_monomial_ground(j.n, j.mu, cfg);
    }
    rows[i] = make_row(j.kind, j.n, j.mu.value(), closed, oracle, cfg.rel_tol, abs_band,
                       rel_band);
  });
  const int rc = emit(out, rows);
  if (rc != kExitPass) return rc;
  for (const auto& r : rows)
    if (!r.pass) return kExitFail;
  return kExitPass;
}

int cmd_table(const std::string& kind, double mu_value, int n_max,
              const OutputOptions& out) {
  if (kind != "entropy" && kind != "energy" && kind != "monomial-entropy") {
    std::cerr << "error: unknown table kind '" << kind << "'\n";
    return kExitUsage;
  }
  if (!(mu_value > -0.5)) {
    std::cerr << "error: mu must exceed -1/2\n";
    return kExitUsage;
  }
  MuParameter mu(mu_value);
  auto value_of = [&](int n) {
    if (kind == "entropy") return entropy_xi(n, mu).value;
    if (kind == "energy") return energy_xi(n, mu).value;
    return entropy_monomial_ground(n, mu).value;
  };
  std::vector<ReportRow> rows;
  for (int n = 0; n <= n_max; ++n) {
    ReportRow r;
    r.kind = kind;
    r.n = n;
    r.mu = mu_value;
    r.closed_form = value_of(n);
    r.oracle = (n + 1 <= n_max) ? value_of(n + 1) - value_of(n) : 0.0;  // forward diff
    r.pass = true;
    rows.push_back(r);
  }
  return emit(out, rows);
}

int cmd_sharpness(const std::string& parity_name, const std::string& c_csv, double mu_value,
                  int n_max, const OutputOptions& out) {
  if (parity_name != "even" && parity_name != "odd") {
    std::cerr << "error: --parity must be even or odd\n";
    return kExitUsage;
  }
  if (!(mu_value > -0.5)) {
    std::cerr << "error: mu must exceed -1/2\n";
    return kExitUsage;
  }
  const Parity parity = (parity_name == "even") ? Parity::even : Parity::odd;
  MuParameter mu(mu_value);
  bool all_match = true;
  std::vector<ReportRow> rows;
  for (double c : parse_list(c_csv)) {
    const auto seq = sharpness_sequence(parity, c, mu, n_max);
    const auto verdict = classify_sharpness(seq);
    int argmax = 0;
    for (int i = 1; i < static_cast<int>(seq.size()); ++i)
      if (seq[i].gap > seq[argmax].gap) argmax = i;
    const int lo = std::max(1, n_max / 100);
    const bool expect_bounded = c > 1.0;
    const bool matches = (verdict == SharpnessVerdict::bounded) == expect_bounded &&
                         verdict != SharpnessVerdict::inconclusive;
    all_match = all_match && matches;
    ReportRow r;
    r.kind = std::string("sharpness_") + parity_name + "_" +
             (verdict == SharpnessVerdict::bounded
                  ? "bounded"
                  : (verdict == SharpnessVerdict::unbounded ? "unbounded" : "inconclusive"));
    r.n = argmax;
    r.mu = mu_value;
    r.closed_form = c;
    r.oracle = seq[argmax].gap;                       // empirical max gap
    r.abs_err = seq[n_max].gap - seq[lo].gap;         // tail growth
    r.rel_err = seq[n_max].predictor - seq[lo].predictor;
    r.pass = matches;
    rows.push_back(r);
  }
  const int rc = emit(out, rows);
  if (rc != kExitPass) return rc;
  return all_match ? kExitPass : kExitFail;
}

int cmd_limits(const std::string& which, const std::string& mu_csv,
               const std::string& n_csv, int index, const OutputOptions& out) {
  std::vector<ReportRow> rows;
  bool pass = true;
  auto push = [&](double x, double value, double err, double band) {
    ReportRow r;
    r.kind = which;
    r.n = static_cast<int>(x);
    r.mu = x;
    r.closed_form = value;
    r.abs_err = err;
    r.oracle = band;
    rows.push_back(r);
  };
  auto check_decreasing_and_band = [&](std::vector<double> errs, double band) {
    for (size_t i = 1; i < errs.size(); ++i)
      if (errs[i] >= errs[i - 1]) pass = false;
    if (!errs.empty() && errs.back() > band) pass = false;
  };

  if (which == "mu-infinity") {
    const auto grid = parse_list(mu_csv);
    const auto vals = entropy_limit_mu_infinity(index, grid);
    std::vector<double> errs;
    for (size_t i = 0; i < grid.size(); ++i) {
      const double err = (index % 2 == 0) ? std::fabs(vals[i]) : 0.0;
      errs.push_back(err);
      push(grid[i], vals[i], err, 1e-3);
    }
    if (index % 2 == 0) {
      check_decreasing_and_band(errs, 1e-3);
    } else {
      for (size_t i = 1; i < vals.size(); ++i)
        if (vals[i] >= vals[i - 1]) pass = false;  // must decrease without bound
    }
  } else {
    const auto mus = parse_list(mu_csv);
    if (mus.size() != 1 || !(mus[0] > -0.5)) {
      std::cerr << "error: this limit check takes a single mu > -1/2\n";
      return kExitUsage;
    }
    MuParameter mu(mus[0]);
    const auto ns = parse_int_list(n_csv);
    std::vector<double> errs;
    for (int n : ns) {
      double value, limit, band;
      if (which == "diff1") {
        value = entropy_xi(n + 1, mu).value - entropy_xi(n, mu).value;
        limit = 1.0;
        band = 0.01;
      } else if (which == "diff2") {
        value = entropy_xi(2 * n + 2, mu).value - entropy_xi(2 * n, mu).value;
        limit = 2.0;
        band = 0.01;
      } else if (which == "cesaro") {
        value = entropy_xi(n, mu).value / n;
        limit = 1.0;
        band = 0.02;
      } else if (which == "lemma32") {
        value = std::exp(log_gamma_mu(n, mu) / n) / n;
        limit = std::exp(-1.0);
        band = 3e-3;
      } else {
        std::cerr << "error: unknown limit '" << which << "'\n";
        return kExitUsage;
      }
      const double err = std::fabs(value - limit);
      errs.push_back(err);
      push(n, value, err, band);
    }
    const double band = errs.empty() ? 0.0 : rows.back().oracle;
    check_decreasing_and_band(errs, band);
  }
  for (auto& r : rows) r.pass = pass;
  const int rc = emit(out, rows);
  if (rc != kExitPass) return rc;
  return pass ? kExitPass : kExitFail;
}

int cmd_transform_check(double mu_value, int n_max, const QuadratureConfig& cfg,
                        const OutputOptions& out) {
  if (!(mu_value > -0.5)) {
    std::cerr << "error: mu must exceed -1/2\n";
    return kExitUsage;
  }
  MuParameter mu(mu_value);
  const double max_dev = verify_basis_transform(n_max, mu, ComplexGrid::standard(), cfg);

  const DensePolynomial z1 = zeta_mu(1, mu);
  const DensePolynomial image = bargmann_transform_exact(z1, mu);
  const double gap_oracle = entropy_oracle(image, Space::phase, mu, cfg) -
                            entropy_oracle(z1, Space::ground, mu, cfg);
  const double gap_closed = entropy_gap_zeta1(mu);

  std::vector<ReportRow> rows;
  rows.push_back(make_row("basis_transform_max_dev", n_max, mu_value, 0.0, max_dev,
                          cfg.rel_tol, 1e-7, 0.0));
  rows.push_back(
      make_row("entropy_gap_zeta1", 1, mu_value, gap_closed, gap_oracle, cfg.rel_tol, 1e-6,
               0.0));
  rows.back().pass = rows.back().pass && gap_oracle < 0.0;
  const int rc = emit(out, rows);
  if (rc != kExitPass) return rc;
  for (const auto& r : rows)
    if (!r.pass) return kExitFail;
  return kExitPass;
}

int cmd_selftest(const OutputOptions& out) {
  QuadratureConfig cfg;
  std::vector<ReportRow> rows;
  auto check = [&](const std::string& name, double got, double want, double tol) {
    rows.push_back(make_row(name, 0, 0.0, want, got, 0.0, tol, 0.0));
  };

  check("digamma_1", digamma(1.0), -kEulerGamma, 1e-12);
  check("digamma_half", digamma(0.5), -kEulerGamma - 2.0 * std::log(2.0), 1e-12);
  check("digamma_4", digamma(4.0), -kEulerGamma + 1.0 + 0.5 + 1.0 / 3.0, 1e-12);
  check("bessel_k_half_1", bessel_k(RealOrder(0.5), 1.0).value,
        std::sqrt(M_PI / 2.0) * std::exp(-1.0), 1e-10);
  check("bessel_k_minus_half_2", bessel_k(RealOrder(-0.5), 2.0).value,
        std::sqrt(M_PI / 4.0) * std::exp(-2.0), 1e-10);
  check("gamma_mu_0", gamma_mu(0, MuParameter(1.7)), 1.0, 0.0);
  check("gamma_mu_4_at_0", gamma_mu(4, MuParameter(0.0)), 24.0, 1e-12);
  check("e_mu_classical", std::abs(e_mu(1.0, MuParameter(0.0), 1e-15)), std::exp(1.0),
        1e-12);
  check("hermite1_coeff", hermite_mu(1, MuParameter(0.5)).coeffs()[1], 1.0, 1e-12);
  check("zeta1_entropy_mu0", entropy_zeta1(MuParameter(0.0)).value,
        2.0 - std::log(2.0) - kEulerGamma, 1e-10);
  check("entropy_xi0", entropy_xi(0, MuParameter(1.7)).value, 0.0, 1e-12);
  check("ground_density_origin", MeasureDensity(MeasureKind::ground_state, MuParameter(0.0))(0.0),
        1.0 / std::sqrt(M_PI), 1e-12);
  check("even_density_mu0_r1", MeasureDensity(MeasureKind::even_phase, MuParameter(0.0))(1.0),
        std::exp(-1.0) / M_PI, 1e-10);
  for (int n = 0; n <= 6; ++n)
    check("energy_classical_" + std::to_string(n), energy_xi(n, MuParameter(0.0)).value,
          n + 1.0, 1e-10);
  check("even_mass", mass_oracle(MeasureDensity(MeasureKind::even_phase, MuParameter(0.7)), cfg).value,
        1.0, 1e-8);
  check("classical_entropy_eq", entropy_xi(5, MuParameter(0.0)).value,
        entropy_classical(5).value, 1e-11);
  check("entropy_vs_oracle_n3_mu1", entropy_oracle_xi(3, MuParameter(1.0), cfg),
        entropy_xi(3, MuParameter(1.0)).value, 1e-7);

  const int rc = emit(out, rows);
  if (rc != kExitPass) return rc;
  for (const auto& r : rows)
    if (!r.pass) return kExitFail;
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deformed Segal-Bargmann entropy/energy verification tool"};
  app.require_subcommand(1);
  // Let global options (--format, --out, tolerances) appear after the
  // subcommand name.
  app.fallthrough();

  OutputOptions out;
  QuadratureConfig cfg;
  app.add_option("--format", out.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out.out_path, "output path (default stdout)");
  app.add_option("--rel-tol", cfg.rel_tol, "quadrature relative tolerance");
  app.add_option("--abs-tol", cfg.abs_tol, "quadrature absolute tolerance");
  unsigned seed = 0;
  app.add_option("--seed", seed, "seed for randomized subcommands");

  std::string mu_csv = "0";
  int n_max = 10;
  double abs_band = 1e-7, rel_band = 1e-7;
  auto* verify = app.add_subcommand("verify", "closed forms vs quadrature oracles");
  verify->add_option("--mu", mu_csv, "comma list of mu values");
  verify->add_option("--n-max", n_max, "largest basis index");
  verify->add_option("--abs-band", abs_band, "absolute pass band");
  verify->add_option("--rel-band", rel_band, "relative pass band");

  std::string table_kind;
  auto* table = app.add_subcommand("table", "tabulate a closed-form sequence");
  table->add_option("kind", table_kind, "entropy | energy | monomial-entropy")->required();
  double table_mu = 0.0;
  int table_n_max = 10;
  table->add_option("--mu", table_mu, "mu value");
  table->add_option("--n-max", table_n_max, "largest index");

  std::string parity = "even", c_csv = "1.2";
  double sharp_mu = 0.0;
  int sharp_n_max = 10000;
  auto* sharp = app.add_subcommand("sharpness", "E - cS gap sweep and verdicts");
  sharp->add_option("--parity", parity, "even or odd");
  sharp->add_option("--c", c_csv, "comma list of c values");
  sharp->add_option("--mu", sharp_mu, "mu value");
  sharp->add_option("--n-max", sharp_n_max, "sequence length");

  std::string which, limits_n_csv = "10,100,1000";
  std::string limits_mu_csv = "0";
  int limits_index = 2;
  auto* limits = app.add_subcommand("limits", "convergence tables for the proven limits");
  limits->add_option("which", which, "diff1 | diff2 | cesaro | lemma32 | mu-infinity")
      ->required();
  limits->add_option("--mu", limits_mu_csv, "mu value (grid for mu-infinity)");
  limits->add_option("--n", limits_n_csv, "comma list of indices");
  limits->add_option("--index", limits_index, "basis index for mu-infinity");

  double tc_mu = 0.0;
  int tc_n_max = 6;
  auto* tcheck = app.add_subcommand("transform-check", "basis transform and entropy gap");
  tcheck->add_option("--mu", tc_mu, "mu value");
  tcheck->add_option("--n-max", tc_n_max, "largest basis index (<= 12)");

  auto* selftest = app.add_subcommand("selftest", "fast smoke suite of known values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(mu_csv, n_max, abs_band, rel_band, cfg, out);
    if (table->parsed()) return cmd_table(table_kind, table_mu, table_n_max, out);
    if (sharp->parsed()) return cmd_sharpness(parity, c_csv, sharp_mu, sharp_n_max, out);
    if (limits->parsed())
      return cmd_limits(which, limits_mu_csv, limits_n_csv, limits_index, out);
    if (tcheck->parsed()) return cmd_transform_check(tc_mu, tc_n_max, cfg, out);
    if (selftest->parsed()) return cmd_selftest(out);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
