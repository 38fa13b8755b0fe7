#ifndef DEGEN_REPORTS_HPP
#define DEGEN_REPORTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "degen/json_io.hpp"

namespace degen {

/// Settings shared by every report. All randomness derives from `seed`.
struct RunConfig {
  FieldSpec field = FieldSpec::rational();
  std::uint64_t seed = 1;
  std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
  std::uint64_t max_enum = kDefaultMaxEnumeration;
  unsigned threads = 0;
  int samples = 3;
  bool extend_primes = false;
  bool curve = false;
};

struct Report {
  json::Json body;
  std::string tsv;  // empty when the report has no tabular form
  bool pass = true;
};

// Each builder parses its JSON inputs, runs the computation and returns a
// self-describing document that embeds the configuration it ran with.
// Library errors propagate as degen::Error.

Report analyze_report(const std::string& matrix_json, const RunConfig& cfg);
Report sandwich_report(const std::string& delta_json, const RunConfig& cfg);
Report witness_report(const std::string& delta_json, const std::string& mode, const RunConfig& cfg);
/// `subject_json` is either a matrix (over F_q) or a variety descriptor; q = 0
/// takes q from the matrix field.
Report count_fixed_report(const std::string& subject_json, int d, std::uint64_t q,
                          const RunConfig& cfg);
Report dimension_report(const std::string& descriptor_json, int d, const RunConfig& cfg);
Report verify_sum_report(int n, int s, const RunConfig& cfg);
Report verify_sandwich_report(const std::string& delta_json, const RunConfig& cfg);
Report enumerate_types_report(int n, const RunConfig& cfg);

}  // namespace degen

#endif
