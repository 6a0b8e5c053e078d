#pragma once

#include <string>

#include "qapfn/solution.hpp"

namespace qapfn {

// All C(n,2) quadruple-flip tuples reachable from one feasible solution, kept
// sorted lexicographically by (z1,z2). Row i encodes both lookup tables at
// once: {z1,z2} is the support of the i-th "bits cleared" row and {z3,z4} the
// support of the i-th "bits set" row.
struct full_neighbourhood {
  int n = 0;
  std::vector<flip_tuple> rows;

  std::size_t size() const { return rows.size(); }
};

full_neighbourhood build_full_neighbourhood(const binary_solution& x);

// Rows touched when the move (z1b, z2b) is accepted: r1 = rows whose pair
// contains z1b only, r2 = z2b only, r3 = the row whose pair is exactly
// {z1b, z2b}. Sizes n-2, n-2, 1.
struct update_row_sets {
  std::vector<int> r1;
  std::vector<int> r2;
  int r3 = -1;
};

update_row_sets locate_update_rows(const full_neighbourhood& fn, int z1b, int z2b);

// In-place incremental maintenance after accepting the move (z1b, z2b): the
// departing support elements are replaced by z1s = block(z1b) + residue(z2b)
// and z2s = block(z2b) + residue(z1b), only the 2n-3 affected rows are
// rewritten, and lexicographic order is restored by merging the (sorted)
// rewritten rows back into the untouched remainder.
void update_full_neighbourhood(full_neighbourhood& fn, int z1b, int z2b);

// One row per line, "i: z1 z2 z3 z4".
std::string dump(const full_neighbourhood& fn);

bool is_lexicographically_sorted(const full_neighbourhood& fn);

}  // namespace qapfn
