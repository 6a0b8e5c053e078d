#pragma once

#include <cstdint>
#include <vector>

#include "qapfn/qubo.hpp"

namespace qapfn {

// p[i] = location assigned to facility i.
using permutation = std::vector<int>;

bool is_permutation_vector(const permutation& p);
permutation inverse_permutation(const permutation& p);

// Column-stacked permutation matrix: bit j*n + p(j) is set for column j. The
// support cache is sorted, one entry per block, support[j] % n = p(j).
struct binary_solution {
  int n = 0;
  std::vector<std::uint8_t> bits;  // length n^2
  std::vector<int> support;        // length n, ascending

  // residue of the set bit in each block, i.e. the permutation view
  std::vector<int> sigma() const;
};

binary_solution to_binary(const permutation& p);
permutation to_permutation(const binary_solution& x);
bool is_feasible(const binary_solution& x);

// Native objective sum_{i,j} F(i,j) * D(p(i),p(j)).
double objective(const instance& inst, const permutation& p);

// x^T Q x, evaluated in O(n^2) through the support.
double objective_binary(const q_operator& op, const binary_solution& x);

// The permutation whose native objective equals x^T Q x for this operator:
// the support residues directly, or their inverse when the operator's factors
// are swapped (left factor D). Search results are reported through this.
permutation solution_assignment(const q_operator& op, const binary_solution& x);

// The quadruple bit-flip: clearing z1 and z2 forces setting
//   z3 = floor(z2/n)*n + z1 mod n,   z4 = floor(z1/n)*n + z2 mod n
// to stay feasible (the two cleared rows/columns re-cross).
struct flip_tuple {
  int z1 = 0, z2 = 0, z3 = 0, z4 = 0;
};

bool operator==(const flip_tuple& a, const flip_tuple& b);

std::pair<int, int> identify_bits_to_flip(int z1, int z2, int n);

// Canonical tuple with z1 < z2 (and correspondingly ordered z3, z4).
flip_tuple make_flip_tuple(int z1, int z2, int n);

binary_solution apply_quadruple_flip(const binary_solution& x, const flip_tuple& t);
void apply_quadruple_flip_in_place(binary_solution& x, const flip_tuple& t);

// Exact objective difference f(y) - f(x) for y = x - e_z1 - e_z2 + e_z3 + e_z4.
//   general       works for any operator, O(n): row/column dots plus the
//                 sixteen cross entries of the flipped coordinates
//   symmetrized   requires Q = Q^T: compact row-dot form with the
//                 Q(z1,z2) - Q(z4,z3) residual
//   semisymmetric requires the inner factor to be symmetric (symmetric or
//                 semi-symmetric instances): the residual vanishes
enum class diff_mode { general, symmetrized, semisymmetric };

double exact_pair_difference(const q_operator& op, const binary_solution& x,
                             const flip_tuple& t, diff_mode mode);

}  // namespace qapfn
