#pragma once

#include <optional>

#include "qapfn/instance.hpp"

namespace qapfn {

// Implicit Kronecker-product operator Q = A (x) B, optionally averaged with its
// transpose. Index convention for the n^2-dimensional space:
//   Q(i*n + k, j*n + l) = A(i,j) * B(k,l)            (unsymmetrized)
// so block indices address A and residues address B.
//
// The factor choice per instance symmetry:
//   symmetric          A=F, B=D, symmetrized=false
//   semi_symmetric_f   A=D, B=F, symmetrized=true   (factors swapped)
//   semi_symmetric_d   A=F, B=D, symmetrized=true
//   asymmetric         A=F, B=D, symmetrized=true
// Every operator built this way is a symmetric matrix: either both factors are
// symmetric or the explicit averaging step makes it so.
struct q_operator {
  matrix A;
  matrix B;
  bool symmetrized = false;
  // True when (A,B) = (D,F). The quadratic form then evaluates the objective of
  // the inverse of the permutation read off the support; see solution_assignment.
  bool factors_swapped = false;
  // Q = Q^T as a matrix (always true for operators built by build_q_operator).
  bool matrix_symmetric = false;
  // B = B^T; the compact pairwise-difference form without residual needs this.
  bool inner_symmetric = false;
  int n = 0;
  std::optional<matrix> dense;  // n^2 x n^2 materialization for small n

  static constexpr int default_dense_threshold = 16;
};

q_operator build_q_operator(const instance& inst,
                            int dense_threshold = q_operator::default_dense_threshold);

// Q * x via the reshape identity (A (x) B) x = column_stack(B * X * A^T), two
// n x n matrix products instead of an n^2 x n^2 one. Symmetrized operators
// average the two orientations.
vector q_matvec(const q_operator& op, const vector& x);

// Single element access, O(1).
double q_entry(const q_operator& op, long r, long c);

// Row/column dots against a feasible solution given as the support residue map
// sigma (sigma[block] = residue of the set bit in that block), both O(n):
//   q_row_dot    = Q(r,:) x
//   q_col_dot    = Q(:,c)^T x
double q_row_dot(const q_operator& op, long r, const std::vector<int>& sigma);
double q_col_dot(const q_operator& op, long c, const std::vector<int>& sigma);

// Penalty formulation over the full binary cube: energy(x) =
//   x^T (D (x) F) x + lambda * (sum_j (col_sum_j - 1)^2 + sum_k (row_sum_k - 1)^2)
// with lambda = alpha * u and u = max(D) * sum(F), a valid upper bound on the
// feasible objective since every term F_ij * D_{p(i)p(j)} <= F_ij * max(D).
struct penalty_qubo {
  q_operator Q;  // A=D, B=F, unsymmetrized; the quadratic form is what matters
  double lambda = 0.0;
  double u = 0.0;
  double alpha = 1.0;
  int n = 0;
};

penalty_qubo build_penalty_qubo(const instance& inst, double alpha = 1.0);

// Eq-style energy of an arbitrary bit vector (length n^2, entries 0/1).
double penalty_energy(const penalty_qubo& pq, const vector& x);

}  // namespace qapfn
