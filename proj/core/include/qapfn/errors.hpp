#pragma once

#include <stdexcept>
#include <string>

namespace qapfn {

// Base class for everything this library throws on bad input or bad state.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// instance parsing / validation
struct truncated_file : error {
  using error::error;
};
struct non_square_data : error {
  using error::error;
};
struct non_finite_entry : error {
  using error::error;
};
struct nonzero_diagonal : error {
  using error::error;
};
struct not_a_permutation : error {
  using error::error;
};
struct dimension_mismatch : error {
  using error::error;
};

// fetching
struct network_failure : error {
  using error::error;
};
struct checksum_mismatch : error {
  using error::error;
};
struct not_found : error {
  using error::error;
};

// operator / solution mechanics
struct index_out_of_range : error {
  using error::error;
};
struct same_block_or_residue : error {
  using error::error;
};
struct tuple_not_applicable : error {
  using error::error;
};
struct mode_unsupported_for_instance : error {
  using error::error;
};
struct infeasible_solution : error {
  using error::error;
};
struct pair_not_in_neighbourhood : error {
  using error::error;
};
struct index_misalignment : error {
  using error::error;
};
struct empty_neighbourhood : error {
  using error::error;
};

// search / reporting
struct missing_best_known : error {
  using error::error;
};

}  // namespace qapfn
