#pragma once

#include <cstddef>
#include <vector>

#include "inrl/algebra.hpp"
#include "inrl/gluing.hpp"
#include "inrl/report.hpp"

namespace inrl {

inline constexpr std::size_t default_size_cap = 4096;

/// The Boolean algebra with k atoms and fusion = meet. Element i is the
/// bit set i. Names: "1" for k = 0, "0" "1" for k = 1, otherwise binary
/// strings of length k. Throws CapExceeded if 2^k > cap.
FiniteInRL boolean_algebra(std::size_t k, std::size_t cap = default_size_cap);

/// B_i: the four-element Boolean algebra {0_i, x_i, -x_i, 1_i}.
FiniteInRL block_algebra(std::size_t i);

/// The gluing maps for A_n by name: step i < n glues B_{i+1} onto the
/// algebra built so far, and the last step glues the two-element algebra.
struct FamilySchedule {
  std::size_t n = 0;
  std::vector<NamedGluing> steps;  ///< n + 1 entries
};

FamilySchedule an_schedule(std::size_t n);

/// A_n = B_0 (+) B_1 (+) ... (+) B_n (+) 2, left associated, 4n + 6
/// elements. Throws CapExceeded past `cap`.
FiniteInRL build_an(std::size_t n, std::size_t cap = default_size_cap);

/// The generator identities of A_n for 1 <= j <= n:
///
///   1_j = -x_{j-1} v 1,  0_j = x_{j-1} ^ 1,  x_j = x_{j-1} ^ 1_j,  -x_j = -x_{j-1} v 0_j
///
/// for odd j. For even j the same four hold after exchanging x_{j-1} with
/// -x_{j-1} and x_j with -x_j. Witness is the index j.
Report verify_an_identities(const FiniteInRL& an, std::size_t n);

}  // namespace inrl
