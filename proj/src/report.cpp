#include "mudef/report.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include <nlohmann/json.hpp>

namespace mudef {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<ReportRow>& rows) {
  os << "kind,n,mu,closed_form,oracle,abs_err,rel_err,quadrature_err_est,pass\n";
  for (const auto& r : rows) {
    os << r.kind << ',' << r.n << ',' << format_number(r.mu) << ','
       << format_number(r.closed_form) << ',' << format_number(r.oracle) << ','
       << format_number(r.abs_err) << ',' << format_number(r.rel_err) << ','
       << format_number(r.quadrature_err_est) << ',' << (r.pass ? "true" : "false")
       << '\n';
  }
}

void write_json(std::ostream& os, const std::vector<ReportRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    o["kind"] = r.kind;
    o["n"] = r.n;
    o["mu"] = format_number(r.mu);
    o["closed_form"] = format_number(r.closed_form);
    o["oracle"] = format_number(r.oracle);
    o["abs_err"] = format_number(r.abs_err);
    o["rel_err"] = format_number(r.rel_err);
    o["quadrature_err_est"] = format_number(r.quadrature_err_est);
    o["pass"] = r.pass;
    arr.push_back(std::move(o));
  }
  os << arr.dump(2) << '\n';
}

void parallel_for_index(int count, const std::function<void(int)>& body) {
  unsigned workers = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("MU_BARGMANN_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) workers = static_cast<unsigned>(v);
  }
  workers = std::max(1u, std::min(workers, static_cast<unsigned>(count)));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace mudef
