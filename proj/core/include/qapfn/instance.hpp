#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

#include "qapfn/errors.hpp"

namespace qapfn {

using matrix = Eigen::MatrixXd;
using vector = Eigen::VectorXd;

enum class symmetry_class {
  symmetric,         // F = F^T and D = D^T
  semi_symmetric_f,  // only F symmetric
  semi_symmetric_d,  // only D symmetric
  asymmetric,        // neither
};

const char* to_string(symmetry_class s);

// One QAP instance: minimize sum_{i,j} F(i,j) * D(p(i), p(j)) over permutations p.
// F is the flow matrix, D the distance matrix; in the on-disk format F comes first.
struct instance {
  std::string name;
  int n = 0;
  matrix F;
  matrix D;
  symmetry_class symmetry = symmetry_class::symmetric;
  bool diagonal_zeroed = false;  // set when a nonzero diagonal was clipped at parse time
};

struct reference_solution {
  int n = 0;
  double objective = 0.0;
  std::vector<int> permutation;  // 0-indexed
};

struct parse_options {
  // When true, a nonzero diagonal in F or D raises nonzero_diagonal.
  // When false (default), diagonals are zeroed and the instance flagged; the
  // gradient identities in this library assume zero diagonals.
  bool strict_diagonal = false;
};

symmetry_class classify_symmetry(const matrix& F, const matrix& D);

// .dat layout: n, then the n*n entries of F, then the n*n entries of D,
// whitespace separated, any line structure.
instance parse_instance(std::istream& in, const std::string& name,
                        const parse_options& opts = {});
instance parse_instance_text(const std::string& text, const std::string& name,
                             const parse_options& opts = {});

// .sln layout: first line "n objective", then n integers, 1-indexed on disk.
reference_solution parse_solution(std::istream& in);
reference_solution parse_solution_text(const std::string& text);

std::string serialize_instance(const instance& inst);
std::string serialize_solution(const reference_solution& sol);

// Filesystem helpers used by the CLI and tests.
instance load_instance_file(const std::string& path,
                            const parse_options& opts = {});
reference_solution load_solution_file(const std::string& path);

}  // namespace qapfn
