#pragma once

#include <iosfwd>
#include <nlohmann/json_fwd.hpp>

#include "qapfn/search.hpp"

namespace qapfn {

// One benchmark trial, flat for CSV. best_known/relgap are NaN when no
// reference value is available; error is non-empty when the cell failed.
struct run_record {
  std::string instance_name;
  int n = 0;
  std::string heuristic;
  std::string gradient;
  int trial = 0;
  std::uint64_t seed = 0;
  long long iterations = 0;
  double best_objective = 0.0;
  double best_known = std::numeric_limits<double>::quiet_NaN();
  double relgap = std::numeric_limits<double>::quiet_NaN();
  double wall_time_ms = 0.0;
  phase_times phases;
  std::string error;
};

bool operator==(const run_record& a, const run_record& b);

extern const char* const run_record_csv_header;

std::string to_csv_row(const run_record& r);
std::string to_csv(const std::vector<run_record>& rs);
std::vector<run_record> parse_csv(std::istream& in);
std::vector<run_record> parse_csv_text(const std::string& text);

nlohmann::json to_json(const run_record& r);
nlohmann::json to_json(const std::vector<run_record>& rs);

}  // namespace qapfn
