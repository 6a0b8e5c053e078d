#include "qapfn/instance.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qapfn {

const char* to_string(symmetry_class s) {
  switch (s) {
    case symmetry_class::symmetric: return "symmetric";
    case symmetry_class::semi_symmetric_f: return "semi_symmetric_f";
    case symmetry_class::semi_symmetric_d: return "semi_symmetric_d";
    case symmetry_class::asymmetric: return "asymmetric";
  }
  return "?";
}

symmetry_class classify_symmetry(const matrix& F, const matrix& D) {
  if (F.rows() != F.cols() || D.rows() != D.cols())
    throw dimension_mismatch("classify_symmetry: matrices must be square");
  if (F.rows() != D.rows())
    throw dimension_mismatch("classify_symmetry: F and D have different orders");
  const bool fs = F.isApprox(F.transpose());
  const bool ds = D.isApprox(D.transpose());
  if (fs && ds) return symmetry_class::symmetric;
  if (fs) return symmetry_class::semi_symmetric_f;
  if (ds) return symmetry_class::semi_symmetric_d;
  return symmetry_class::asymmetric;
}

namespace {

matrix read_matrix(std::istream& in, int n, const std::string& name,
                   const char* which) {
  matrix m(n, n);
  std::string tok;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!(in >> tok))
        throw truncated_file(name + ": expected " + std::to_string(2 * n * n) +
                             " values after the order, ran out in matrix " + which);
      // strtod instead of stream extraction: "inf", "nan" and overflowing
      // exponents should be flagged as non-finite, not as missing values
      char* end = nullptr;
      const double v = std::strtod(tok.c_str(), &end);
      if (end != tok.c_str() + tok.size())
        throw truncated_file(name + ": unreadable value '" + tok + "' in matrix " +
                             which);
      if (!std::isfinite(v))
        throw non_finite_entry(name + ": non-finite entry in matrix " + which);
      m(i, j) = v;
    }
  return m;
}

void settle_diagonal(matrix& m, const std::string& name, const char* which,
                     const parse_options& opts, bool& zeroed) {
  for (int i = 0; i < m.rows(); ++i) {
    if (m(i, i) != 0.0) {
      if (opts.strict_diagonal)
        throw nonzero_diagonal(name + ": nonzero diagonal in matrix " + which +
                               " at index " + std::to_string(i));
      m(i, i) = 0.0;
      zeroed = true;
    }
  }
}

}  // namespace

instance parse_instance(std::istream& in, const std::string& name,
                        const parse_options& opts) {
  long long n_raw;
  if (!(in >> n_raw)) throw truncated_file(name + ": missing order");
  if (n_raw < 2) throw non_square_data(name + ": order must be at least 2");
  if (n_raw > 10000) throw non_square_data(name + ": implausible order");
  const int n = static_cast<int>(n_raw);

  instance inst;
  inst.name = name;
  inst.n = n;
  inst.F = read_matrix(in, n, name, "F");
  inst.D = read_matrix(in, n, name, "D");
  settle_diagonal(inst.F, name, "F", opts, inst.diagonal_zeroed);
  settle_diagonal(inst.D, name, "D", opts, inst.diagonal_zeroed);
  inst.symmetry = classify_symmetry(inst.F, inst.D);
  return inst;
}

instance parse_instance_text(const std::string& text, const std::string& name,
                             const parse_options& opts) {
  std::istringstream in(text);
  return parse_instance(in, name, opts);
}

reference_solution parse_solution(std::istream& in) {
  reference_solution sol;
  long long n_raw;
  if (!(in >> n_raw >> sol.objective))
    throw truncated_file("solution: missing order/objective header");
  if (n_raw < 1) throw dimension_mismatch("solution: bad order");
  sol.n = static_cast<int>(n_raw);
  sol.permutation.resize(sol.n);
  for (int i = 0; i < sol.n; ++i) {
    long long v;
    if (!(in >> v)) throw truncated_file("solution: permutation shorter than order");
    sol.permutation[i] = static_cast<int>(v - 1);  // files are 1-indexed
  }
  std::vector<char> seen(sol.n, 0);
  for (int v : sol.permutation) {
    if (v < 0 || v >= sol.n || seen[v])
      throw not_a_permutation("solution: entries are not a bijection on 1.." +
                              std::to_string(sol.n));
    seen[v] = 1;
  }
  return sol;
}

reference_solution parse_solution_text(const std::string& text) {
  std::istringstream in(text);
  return parse_solution(in);
}

std::string serialize_instance(const instance& inst) {
  std::ostringstream out;
  out << inst.n << "\n\n";
  const auto dump = [&](const matrix& m) {
    for (int i = 0; i < inst.n; ++i) {
      for (int j = 0; j < inst.n; ++j) out << (j ? " " : "") << m(i, j);
      out << "\n";
    }
    out << "\n";
  };
  dump(inst.F);
  dump(inst.D);
  return out.str();
}

std::string serialize_solution(const reference_solution& sol) {
  std::ostringstream out;
  out << sol.n << " " << sol.objective << "\n";
  for (int i = 0; i < sol.n; ++i)
    out << (i ? " " : "") << sol.permutation[i] + 1;
  out << "\n";
  return out.str();
}

instance load_instance_file(const std::string& path, const parse_options& opts) {
  std::ifstream in(path);
  if (!in) throw not_found("cannot open instance file: " + path);
  // name = stem of the file
  std::string name = path;
  if (auto slash = name.find_last_of("/\\"); slash != std::string::npos)
    name = name.substr(slash + 1);
  if (auto dot = name.find_last_of('.'); dot != std::string::npos)
    name = name.substr(0, dot);
  return parse_instance(in, name, opts);
}

reference_solution load_solution_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw not_found("cannot open solution file: " + path);
  return parse_solution(in);
}

}  // namespace qapfn
