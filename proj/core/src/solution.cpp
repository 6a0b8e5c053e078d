#include "qapfn/solution.hpp"

#include <algorithm>

namespace qapfn {

bool is_permutation_vector(const permutation& p) {
  const int n = static_cast<int>(p.size());
  std::vector<char> seen(n, 0);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return n > 0;
}

permutation inverse_permutation(const permutation& p) {
  permutation inv(p.size());
  for (int i = 0; i < static_cast<int>(p.size()); ++i) inv[p[i]] = i;
  return inv;
}

std::vector<int> binary_solution::sigma() const {
  std::vector<int> s(n);
  for (int b = 0; b < n; ++b) s[b] = support[b] - b * n;
  return s;
}

binary_solution to_binary(const permutation& p) {
  if (!is_permutation_vector(p))
    throw not_a_permutation("to_binary: input is not a permutation");
  binary_solution x;
  x.n = static_cast<int>(p.size());
  x.bits.assign(static_cast<std::size_t>(x.n) * x.n, 0);
  x.support.resize(x.n);
  for (int b = 0; b < x.n; ++b) {
    const int pos = b * x.n + p[b];
    x.bits[pos] = 1;
    x.support[b] = pos;
  }
  return x;
}

permutation to_permutation(const binary_solution& x) {
  if (!is_feasible(x))
    throw infeasible_solution("to_permutation: solution is not feasible");
  return x.sigma();
}

bool is_feasible(const binary_solution& x) {
  const int n = x.n;
  if (n < 1 || x.bits.size() != static_cast<std::size_t>(n) * n) return false;
  if (static_cast<int>(x.support.size()) != n) return false;
  std::vector<char> residue_seen(n, 0);
  long long set_bits = 0;
  for (int b = 0; b < n; ++b) {
    const int pos = x.support[b];
    if (pos < b * n || pos >= (b + 1) * n) return false;  // one per block
    if (!x.bits[pos]) return false;
    const int r = pos % n;
    if (residue_seen[r]) return false;  // one per residue
    residue_seen[r] = 1;
  }
  for (auto bit : x.bits) set_bits += bit;
  return set_bits == n;
}

double objective(const instance& inst, const permutation& p) {
  if (static_cast<int>(p.size()) != inst.n)
    throw dimension_mismatch("objective: permutation length != n");
  if (!is_permutation_vector(p))
    throw not_a_permutation("objective: input is not a permutation");
  double f = 0.0;
  for (int i = 0; i < inst.n; ++i)
    for (int j = 0; j < inst.n; ++j) f += inst.F(i, j) * inst.D(p[i], p[j]);
  return f;
}

double objective_binary(const q_operator& op, const binary_solution& x) {
  if (x.n != op.n) throw dimension_mismatch("objective_binary: order mismatch");
  // x^T Q x = sum_{i,j} A(i,j) B(sigma(i), sigma(j)); symmetrizing never
  // changes the quadratic form, so one orientation suffices.
  const auto s = x.sigma();
  double f = 0.0;
  for (int i = 0; i < op.n; ++i)
    for (int j = 0; j < op.n; ++j) f += op.A(i, j) * op.B(s[i], s[j]);
  return f;
}

permutation solution_assignment(const q_operator& op, const binary_solution& x) {
  const auto s = x.sigma();
  return op.factors_swapped ? inverse_permutation(s) : s;
}

bool operator==(const flip_tuple& a, const flip_tuple& b) {
  return a.z1 == b.z1 && a.z2 == b.z2 && a.z3 == b.z3 && a.z4 == b.z4;
}

std::pair<int, int> identify_bits_to_flip(int z1, int z2, int n) {
  if (z1 < 0 || z2 < 0 || z1 >= n * n || z2 >= n * n)
    throw index_out_of_range("identify_bits_to_flip: index outside n^2 range");
  if (z1 / n == z2 / n || z1 % n == z2 % n)
    throw same_block_or_residue(
        "identify_bits_to_flip: indices share a block or residue, the flip "
        "would not land on a permutation");
  return {(z2 / n) * n + z1 % n, (z1 / n) * n + z2 % n};
}

flip_tuple make_flip_tuple(int z1, int z2, int n) {
  if (z1 > z2) std::swap(z1, z2);
  const auto [z3, z4] = identify_bits_to_flip(z1, z2, n);
  return {z1, z2, z3, z4};
}

namespace {

void require_applicable(const binary_solution& x, const flip_tuple& t) {
  const int n = x.n;
  const bool shape_ok =
      t.z1 < t.z2 && t.z1 >= 0 && t.z2 < n * n &&
      t.z3 == (t.z2 / n) * n + t.z1 % n && t.z4 == (t.z1 / n) * n + t.z2 % n;
  if (!shape_ok || !x.bits[t.z1] || !x.bits[t.z2] || x.bits[t.z3] || x.bits[t.z4])
    throw tuple_not_applicable("quadruple flip does not apply to this solution");
}

}  // namespace

void apply_quadruple_flip_in_place(binary_solution& x, const flip_tuple& t) {
  require_applicable(x, t);
  x.bits[t.z1] = 0;
  x.bits[t.z2] = 0;
  x.bits[t.z3] = 1;
  x.bits[t.z4] = 1;
  x.support[t.z1 / x.n] = t.z4;  // z4 sits in z1's block
  x.support[t.z2 / x.n] = t.z3;  // z3 in z2's block
}

binary_solution apply_quadruple_flip(const binary_solution& x, const flip_tuple& t) {
  binary_solution y = x;
  apply_quadruple_flip_in_place(y, t);
  return y;
}

double exact_pair_difference(const q_operator& op, const binary_solution& x,
                             const flip_tuple& t, diff_mode mode) {
  require_applicable(x, t);
  const int n = op.n;
  const auto sx = x.sigma();

  switch (mode) {
    case diff_mode::general: {
      // f(y) - f(x) = x^T Q d + d^T Q x + d^T Q d with d the signed flip
      // vector; row/column dots are O(n) through the support.
      const int z[4] = {t.z1, t.z2, t.z3, t.z4};
      const double s[4] = {-1.0, -1.0, +1.0, +1.0};
      double diff = 0.0;
      for (int i = 0; i < 4; ++i)
        diff += s[i] * (q_row_dot(op, z[i], sx) + q_col_dot(op, z[i], sx));
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          if (i != j) diff += s[i] * s[j] * q_entry(op, z[i], z[j]);
      return diff;
    }
    case diff_mode::symmetrized:
    case diff_mode::semisymmetric: {
      if (!op.matrix_symmetric)
        throw mode_unsupported_for_instance(
            "pairwise difference: this mode needs a symmetric operator matrix");
      if (mode == diff_mode::semisymmetric && !op.inner_symmetric)
        throw mode_unsupported_for_instance(
            "pairwise difference: the residual-free form needs a symmetric "
            "inner factor (symmetric or semi-symmetric instance)");
      auto sy = sx;  // support residues after the flip
      sy[t.z1 / n] = t.z2 % n;
      sy[t.z2 / n] = t.z1 % n;
      double diff = 2.0 * (q_row_dot(op, t.z3, sy) + q_row_dot(op, t.z4, sy) -
                           q_row_dot(op, t.z1, sx) - q_row_dot(op, t.z2, sx));
      if (mode == diff_mode::symmetrized)
        diff += 2.0 * (q_entry(op, t.z1, t.z2) - q_entry(op, t.z4, t.z3));
      return diff;
    }
  }
  throw error("exact_pair_difference: unknown mode");
}

}  // namespace qapfn
