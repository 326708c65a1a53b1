#ifndef MUDEF_REPORT_HPP
#define MUDEF_REPORT_HPP

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace mudef {

/// One verification row: a closed form against its quadrature oracle.
struct ReportRow {
  std::string kind;
  int n = 0;
  double mu = 0.0;
  double closed_form = 0.0;
  double oracle = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double quadrature_err_est = 0.0;
  bool pass = false;
};

/// 17-significant-digit lowercase scientific rendering; byte-identical
/// across runs for identical inputs.
std::string format_number(double v);

void write_csv(std::ostream& os, const std::vector<ReportRow>& rows);
void write_json(std::ostream& os, const std::vector<ReportRow>& rows);

/// Worker-pool fan-out over [0, count); results land by index, so output
/// order does not depend on scheduling. Pool size from MU_BARGMANN_THREADS
/// (0 or unset = hardware concurrency).
void parallel_for_index(int count, const std::function<void(int)>& body);

}  // namespace mudef

#endif
