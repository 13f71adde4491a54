#pragma once

#include <cstddef>
#include <vector>

#include "inrl/algebra.hpp"

namespace inrl {

inline constexpr std::size_t default_enumeration_cap = 8;

/// Canonical members of sizes 1..max_size, pairwise non-isomorphic, ordered
/// by size and then by canonical fusion table.
struct Corpus {
  std::size_t max_size = 0;
  std::vector<FiniteInRL> algebras;
  std::vector<std::size_t> counts;  ///< counts[k] members of size k; counts[0] = 0

  std::vector<FiniteInRL> of_size(std::size_t k) const;
};

/// The labeling used by the enumerator. Element 0 is the unit; for even n
/// element 1 is the zero and (2, 3), (4, 5), ... are negation pairs; for
/// odd n the unit is its own negation and (1, 2), (3, 4), ... are pairs.
/// Among all such labelings of `alg` the one with the smallest fusion
/// table is chosen, and elements are named 1, 0, x1, -x1, x2, -x2, ...
/// Requires a member.
FiniteInRL canonical_form(const FiniteInRL& alg);

/// All members of size n up to isomorphism, in canonical form. Searches
/// fusion tables only: the lattice order is recovered from fusion and
/// negation, since z <= 0 iff z . -z = z and x <= y iff x . -y <= 0.
/// Throws CapExceeded if n > cap.
std::vector<FiniteInRL> enumerate_size(std::size_t n, std::size_t cap = default_enumeration_cap);

Corpus enumerate_up_to_iso(std::size_t max_size, std::size_t cap = default_enumeration_cap);

}  // namespace inrl
