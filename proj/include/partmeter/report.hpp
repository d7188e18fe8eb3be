#ifndef PARTMETER_REPORT_HPP
#define PARTMETER_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "partmeter/composition.hpp"
#include "partmeter/count_value.hpp"

namespace partmeter {

struct ReportRow {
  Part n = 0;
  Part m = 0;
  CountValue lhs;
  CountValue rhs;
  // Further independent evaluations, named by VerificationReport::extra_columns.
  std::vector<CountValue> extra;
  bool pass = false;
};

/* Result of an identity sweep, one row per (n, m) in increasing order.
 * Values are kept on failing rows too.
 */
struct VerificationReport {
  std::string name;
  std::string lhs_label;
  std::string rhs_label;
  std::vector<std::string> extra_columns;
  std::vector<std::string> notes;
  std::vector<ReportRow> rows;

  bool all_pass() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
  std::size_t passed() const {
    std::size_t k = 0;
    for (const auto& r : rows) k += r.pass ? 1 : 0;
    return k;
  }
};

}  // namespace partmeter

#endif
