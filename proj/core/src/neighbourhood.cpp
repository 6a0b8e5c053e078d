#include "qapfn/neighbourhood.hpp"

#include <algorithm>
#include <sstream>

namespace qapfn {

namespace {

bool tuple_less(const flip_tuple& a, const flip_tuple& b) {
  return a.z1 != b.z1 ? a.z1 < b.z1 : a.z2 < b.z2;
}

}  // namespace

full_neighbourhood build_full_neighbourhood(const binary_solution& x) {
  if (!is_feasible(x))
    throw infeasible_solution("build_full_neighbourhood: infeasible start");
  full_neighbourhood fn;
  fn.n = x.n;
  fn.rows.reserve(static_cast<std::size_t>(x.n) * (x.n - 1) / 2);
  // support is ascending, so (i,j) pairs in nested order are lexicographic
  for (int i = 0; i < x.n; ++i)
    for (int j = i + 1; j < x.n; ++j)
      fn.rows.push_back(make_flip_tuple(x.support[i], x.support[j], x.n));
  return fn;
}

update_row_sets locate_update_rows(const full_neighbourhood& fn, int z1b, int z2b) {
  update_row_sets sets;
  for (int i = 0; i < static_cast<int>(fn.rows.size()); ++i) {
    const auto& r = fn.rows[i];
    const bool has1 = r.z1 == z1b || r.z2 == z1b;
    const bool has2 = r.z1 == z2b || r.z2 == z2b;
    if (has1 && has2)
      sets.r3 = i;
    else if (has1)
      sets.r1.push_back(i);
    else if (has2)
      sets.r2.push_back(i);
  }
  if (sets.r3 < 0)
    throw pair_not_in_neighbourhood("locate_update_rows: (z1,z2) is not a row");
  return sets;
}

void update_full_neighbourhood(full_neighbourhood& fn, int z1b, int z2b) {
  const int n = fn.n;
  const auto sets = locate_update_rows(fn, z1b, z2b);
  // incoming support elements, same blocks as the outgoing ones
  const int z1s = (z1b / n) * n + z2b % n;
  const int z2s = (z2b / n) * n + z1b % n;

  auto rewrite = [&](flip_tuple& row, int out, int in) {
    const int other = row.z1 == out ? row.z2 : row.z1;
    row = make_flip_tuple(other, in, n);
  };

  std::vector<flip_tuple> changed;
  changed.reserve(sets.r1.size() + sets.r2.size() + 1);
  for (int i : sets.r1) {
    rewrite(fn.rows[i], z1b, z1s);
    changed.push_back(fn.rows[i]);
  }
  for (int i : sets.r2) {
    rewrite(fn.rows[i], z2b, z2s);
    changed.push_back(fn.rows[i]);
  }
  fn.rows[sets.r3] = make_flip_tuple(z1s, z2s, n);
  changed.push_back(fn.rows[sets.r3]);

  // merge the rewritten rows back: drop them, then zip two sorted runs
  std::vector<int> drop;
  drop.reserve(changed.size());
  drop.insert(drop.end(), sets.r1.begin(), sets.r1.end());
  drop.insert(drop.end(), sets.r2.begin(), sets.r2.end());
  drop.push_back(sets.r3);
  std::sort(drop.begin(), drop.end());
  std::sort(changed.begin(), changed.end(), tuple_less);

  std::vector<flip_tuple> merged;
  merged.reserve(fn.rows.size());
  std::size_t next_drop = 0, next_changed = 0;
  for (std::size_t i = 0; i < fn.rows.size(); ++i) {
    if (next_drop < drop.size() && static_cast<int>(i) == drop[next_drop]) {
      ++next_drop;
      continue;
    }
    while (next_changed < changed.size() &&
           tuple_less(changed[next_changed], fn.rows[i]))
      merged.push_back(changed[next_changed++]);
    merged.push_back(fn.rows[i]);
  }
  while (next_changed < changed.size()) merged.push_back(changed[next_changed++]);
  fn.rows = std::move(merged);
}

std::string dump(const full_neighbourhood& fn) {
  std::ostringstream out;
  for (std::size_t i = 0; i < fn.rows.size(); ++i) {
    const auto& r = fn.rows[i];
    out << i << ": " << r.z1 << " " << r.z2 << " " << r.z3 << " " << r.z4 << "\n";
  }
  return out.str();
}

bool is_lexicographically_sorted(const full_neighbourhood& fn) {
  return std::is_sorted(fn.rows.begin(), fn.rows.end(), tuple_less);
}

}  // namespace qapfn
