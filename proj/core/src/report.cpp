#include "qapfn/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace qapfn {

namespace {

bool same_double(double a, double b) {
  return (std::isnan(a) && std::isnan(b)) || a == b;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& s) {
  if (s.empty()) return std::numeric_limits<double>::quiet_NaN();
  return std::stod(s);
}

bool needs_quoting(const std::string& s) {
  return s.find_first_of(",\"\n") != std::string::npos;
}

std::string csv_escape(const std::string& s) {
  if (!needs_quoting(s)) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

}  // namespace

bool operator==(const run_record& a, const run_record& b) {
  return a.instance_name == b.instance_name && a.n == b.n &&
         a.heuristic == b.heuristic && a.gradient == b.gradient &&
         a.trial == b.trial && a.seed == b.seed && a.iterations == b.iterations &&
         same_double(a.best_objective, b.best_objective) &&
         same_double(a.best_known, b.best_known) && same_double(a.relgap, b.relgap) &&
         same_double(a.wall_time_ms, b.wall_time_ms) &&
         same_double(a.phases.gradient_ms, b.phases.gradient_ms) &&
         same_double(a.phases.neighbourhood_update_ms,
                     b.phases.neighbourhood_update_ms) &&
         same_double(a.phases.selection_ms, b.phases.selection_ms) &&
         same_double(a.phases.other_ms, b.phases.other_ms) && a.error == b.error;
}

const char* const run_record_csv_header =
    "instance,n,heuristic,gradient,trial,seed,iterations,best_objective,"
    "best_known,relgap,wall_time_ms,gradient_ms,neighbourhood_update_ms,"
    "selection_ms,other_ms,error";

std::string to_csv_row(const run_record& r) {
  std::ostringstream out;
  out << csv_escape(r.instance_name) << ',' << r.n << ',' << r.heuristic << ','
      << r.gradient << ',' << r.trial << ',' << r.seed << ',' << r.iterations << ','
      << format_double(r.best_objective) << ',' << format_double(r.best_known) << ','
      << format_double(r.relgap) << ',' << format_double(r.wall_time_ms) << ','
      << format_double(r.phases.gradient_ms) << ','
      << format_double(r.phases.neighbourhood_update_ms) << ','
      << format_double(r.phases.selection_ms) << ','
      << format_double(r.phases.other_ms) << ',' << csv_escape(r.error);
  return out.str();
}

std::string to_csv(const std::vector<run_record>& rs) {
  std::ostringstream out;
  out << run_record_csv_header << "\n";
  for (const auto& r : rs) out << to_csv_row(r) << "\n";
  return out.str();
}

std::vector<run_record> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw error("run record csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != run_record_csv_header)
    throw error("run record csv: unexpected header: " + line);
  std::vector<run_record> out;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    // a quoted field may contain newlines: keep reading until quotes balance
    auto quotes = std::count(line.begin(), line.end(), '"');
    for (std::string extra; quotes % 2 == 1 && std::getline(in, extra);) {
      if (!extra.empty() && extra.back() == '\r') extra.pop_back();
      line += '\n';
      line += extra;
      quotes += std::count(extra.begin(), extra.end(), '"');
    }
    const auto f = split_csv_line(line);
    if (f.size() != 16)
      throw error("run record csv: expected 16 fields, got " +
                  std::to_string(f.size()));
    run_record r;
    r.instance_name = f[0];
    r.n = std::stoi(f[1]);
    r.heuristic = f[2];
    r.gradient = f[3];
    r.trial = std::stoi(f[4]);
    r.seed = std::stoull(f[5]);
    r.iterations = std::stoll(f[6]);
    r.best_objective = parse_double(f[7]);
    r.best_known = parse_double(f[8]);
    r.relgap = parse_double(f[9]);
    r.wall_time_ms = parse_double(f[10]);
    r.phases.gradient_ms = parse_double(f[11]);
    r.phases.neighbourhood_update_ms = parse_double(f[12]);
    r.phases.selection_ms = parse_double(f[13]);
    r.phases.other_ms = parse_double(f[14]);
    r.error = f[15];
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<run_record> parse_csv_text(const std::string& text) {
  std::istringstream in(text);
  return parse_csv(in);
}

nlohmann::json to_json(const run_record& r) {
  nlohmann::json j;
  j["instance"] = r.instance_name;
  j["n"] = r.n;
  j["heuristic"] = r.heuristic;
  j["gradient"] = r.gradient;
  j["trial"] = r.trial;
  j["seed"] = r.seed;
  j["iterations"] = r.iterations;
  j["best_objective"] = r.best_objective;
  if (!std::isnan(r.best_known)) j["best_known"] = r.best_known;
  if (!std::isnan(r.relgap)) j["relgap"] = r.relgap;
  j["wall_time_ms"] = r.wall_time_ms;
  j["phase_times"] = {{"gradient_ms", r.phases.gradient_ms},
                      {"neighbourhood_update_ms", r.phases.neighbourhood_update_ms},
                      {"selection_ms", r.phases.selection_ms},
                      {"other_ms", r.phases.other_ms}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

nlohmann::json to_json(const std::vector<run_record>& rs) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rs) j.push_back(to_json(r));
  return j;
}

}  // namespace qapfn
