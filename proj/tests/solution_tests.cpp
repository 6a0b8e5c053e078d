#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "qapfn/solution.hpp"

using namespace qapfn;

TEST_CASE("permutation helpers") {
  CHECK(is_permutation_vector({2, 0, 1}));
  CHECK_FALSE(is_permutation_vector({0, 0, 1}));
  CHECK_FALSE(is_permutation_vector({0, 3, 1}));
  CHECK(inverse_permutation({2, 0, 1}) == permutation{1, 2, 0});
  CHECK(inverse_permutation({2, 0, 1, 3, 4}) == permutation{1, 2, 0, 3, 4});
}

TEST_CASE("binary encoding of the fixture assignment") {
  const auto x = to_binary(oracle::fixture_permutation());
  CHECK(x.n == 5);
  CHECK(x.support == oracle::fixture_support());
  int set = 0;
  for (auto b : x.bits) set += b;
  CHECK(set == 5);
  for (int b = 0; b < 5; ++b) CHECK(x.bits[x.support[b]] == 1);
  CHECK(is_feasible(x));
  CHECK(to_permutation(x) == oracle::fixture_permutation());
  CHECK(x.sigma() == oracle::fixture_permutation());
}

TEST_CASE("binary round trip on random permutations") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const auto p = oracle::random_permutation(2 + i % 9, rng);
    CHECK(to_permutation(to_binary(p)) == p);
  }
  CHECK_THROWS_AS(to_binary(permutation{0, 0, 1}), not_a_permutation);
}

TEST_CASE("objective values and the operator convention") {
  const auto inst = oracle::fixture_instance();
  const auto pi = oracle::fixture_permutation();
  CHECK(objective(inst, pi) == 99.0);
  CHECK(objective(inst, inverse_permutation(pi)) == 81.0);

  const auto op = build_q_operator(inst);
  const auto x = to_binary(pi);
  CHECK(objective_binary(op, x) == 81.0);  // swapped factors: inverse convention
  CHECK(oracle::quad_form(oracle::dense_operator(inst), x) == 81.0);

  const auto assigned = solution_assignment(op, x);
  CHECK(assigned == inverse_permutation(pi));
  CHECK(objective(inst, assigned) == objective_binary(op, x));
}

TEST_CASE("objective_binary equals the reported assignment objective everywhere") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 16; ++i) {
    const int n = 3 + i % 5;
    const auto inst = oracle::random_instance(n, oracle::class_by_index(i), rng);
    const auto op = build_q_operator(inst);
    const auto p = oracle::random_permutation(n, rng);
    const auto x = to_binary(p);
    CHECK(objective_binary(op, x) ==
          doctest::Approx(objective(inst, solution_assignment(op, x))).epsilon(1e-12));
    CHECK(objective_binary(op, x) ==
          doctest::Approx(oracle::quad_form(oracle::dense_operator(inst), x)).epsilon(1e-12));
  }
}

TEST_CASE("forced bits from a cleared pair") {
  CHECK(identify_bits_to_flip(2, 5, 5) == std::pair<int, int>{7, 0});
  CHECK(identify_bits_to_flip(5, 2, 5) == std::pair<int, int>{0, 7});
  CHECK(identify_bits_to_flip(11, 18, 5) == std::pair<int, int>{16, 13});

  CHECK_THROWS_AS(identify_bits_to_flip(0, 3, 5), same_block_or_residue);   // same block
  CHECK_THROWS_AS(identify_bits_to_flip(2, 7, 5), same_block_or_residue);   // same residue
  CHECK_THROWS_AS(identify_bits_to_flip(4, 4, 5), same_block_or_residue);
  CHECK_THROWS_AS(identify_bits_to_flip(-1, 3, 5), index_out_of_range);
  CHECK_THROWS_AS(identify_bits_to_flip(2, 25, 5), index_out_of_range);
}

TEST_CASE("canonical tuples") {
  const auto t = make_flip_tuple(5, 2, 5);
  CHECK(t.z1 == 2);
  CHECK(t.z2 == 5);
  CHECK(t.z3 == 7);
  CHECK(t.z4 == 0);
  CHECK(t == make_flip_tuple(2, 5, 5));
}

TEST_CASE("quadruple flip keeps feasibility and is an involution") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 24; ++i) {
    const int n = 3 + i % 6;
    const auto x = to_binary(oracle::random_permutation(n, rng));
    std::uniform_int_distribution<int> pick(0, n - 1);
    int a = pick(rng), b = pick(rng);
    while (b == a) b = pick(rng);
    const auto t = make_flip_tuple(x.support[a], x.support[b], n);

    const auto y = apply_quadruple_flip(x, t);
    CHECK(is_feasible(y));
    CHECK(y.bits[t.z1] == 0);
    CHECK(y.bits[t.z2] == 0);
    CHECK(y.bits[t.z3] == 1);
    CHECK(y.bits[t.z4] == 1);

    // the reverse move clears z3, z4 and restores z1, z2
    const auto back = make_flip_tuple(t.z3, t.z4, n);
    CHECK(apply_quadruple_flip(y, back).bits == x.bits);

    // exactly a transposition in permutation view
    const auto p = to_permutation(x);
    auto q = p;
    std::swap(q[t.z1 / n], q[t.z2 / n]);
    CHECK(to_permutation(y) == q);
  }
}

TEST_CASE("flip rejects mismatched bit states") {
  const auto x = to_binary(oracle::fixture_permutation());
  flip_tuple t = make_flip_tuple(2, 5, 5);  // valid
  CHECK_NOTHROW(apply_quadruple_flip(x, t));

  flip_tuple off = t;
  off.z1 = 0;  // bit 0 is clear, and the tuple arithmetic no longer holds
  CHECK_THROWS_AS(apply_quadruple_flip(x, off), tuple_not_applicable);

  // structurally valid tuple whose source bits are not set
  const auto elsewhere = make_flip_tuple(0, 6, 5);
  CHECK_THROWS_AS(apply_quadruple_flip(x, elsewhere), tuple_not_applicable);
}

TEST_CASE("pair difference against brute force in every mode") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 48; ++i) {
    const int n = 3 + i % 6;
    const auto cls = oracle::class_by_index(i);
    const auto inst = oracle::random_instance(n, cls, rng);
    const auto op = build_q_operator(inst, 0);
    const auto Q = oracle::dense_operator(inst);
    const auto x = to_binary(oracle::random_permutation(n, rng));
    std::uniform_int_distribution<int> pick(0, n - 1);
    int a = pick(rng), b = pick(rng);
    while (b == a) b = pick(rng);
    const auto t = make_flip_tuple(x.support[a], x.support[b], n);

    const double truth = oracle::brute_pair_difference(Q, x, t);
    CHECK(exact_pair_difference(op, x, t, diff_mode::general) ==
          doctest::Approx(truth).epsilon(1e-9));
    CHECK(exact_pair_difference(op, x, t, diff_mode::symmetrized) ==
          doctest::Approx(truth).epsilon(1e-9));
    if (op.inner_symmetric)
      CHECK(exact_pair_difference(op, x, t, diff_mode::semisymmetric) ==
            doctest::Approx(truth).epsilon(1e-9));

    // reversing the move negates the difference
    const auto y = apply_quadruple_flip(x, t);
    const auto back = make_flip_tuple(t.z3, t.z4, n);
    CHECK(exact_pair_difference(op, y, back, diff_mode::general) ==
          doctest::Approx(-truth).epsilon(1e-9));
  }
}

TEST_CASE("pair difference on the fixture's first neighbour") {
  const auto inst = oracle::fixture_instance();
  const auto op = build_q_operator(inst);
  const auto x = to_binary(oracle::fixture_permutation());
  const auto t = make_flip_tuple(2, 5, 5);
  CHECK(exact_pair_difference(op, x, t, diff_mode::general) == 30.0);
  CHECK(exact_pair_difference(op, x, t, diff_mode::symmetrized) == 30.0);
  CHECK(exact_pair_difference(op, x, t, diff_mode::semisymmetric) == 30.0);
}

TEST_CASE("compact modes refuse unsupported operators") {
  std::mt19937_64 rng(53);
  const auto asym = oracle::random_instance(4, symmetry_class::asymmetric, rng);
  const auto op = build_q_operator(asym);
  const auto x = to_binary(oracle::random_permutation(4, rng));
  const auto t = make_flip_tuple(x.support[0], x.support[1], 4);
  CHECK_FALSE(op.inner_symmetric);
  CHECK_NOTHROW(exact_pair_difference(op, x, t, diff_mode::general));
  CHECK_NOTHROW(exact_pair_difference(op, x, t, diff_mode::symmetrized));
  CHECK_THROWS_AS(exact_pair_difference(op, x, t, diff_mode::semisymmetric),
                  mode_unsupported_for_instance);
}
