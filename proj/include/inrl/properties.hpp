#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "inrl/algebra.hpp"

namespace inrl {

/// `witness` is present iff the property fails, and is the
/// lexicographically first refuting tuple.
struct PropertyVerdict {
  bool holds = true;
  std::optional<std::vector<Elem>> witness;

  explicit operator bool() const noexcept { return holds; }
};

/// For a meet-semilattice given by its n*n table (x <= y iff m(x, y) = x):
/// m(x, y) <= z implies z = m(x', y') for some x' >= x, y' >= y.
/// Witness (x, y, z).
PropertyVerdict check_distributive_semilattice(std::size_t n, std::span<const Elem> meet);

/// The condition above on the monoidal semilattice <A, [=>.
PropertyVerdict is_distributive_semilattice(const FiniteInRL& alg);

/// x ^ (y v z) = (x ^ y) v (x ^ z). Witness (x, y, z).
PropertyVerdict is_lattice_distributive(const FiniteInRL& alg);

/// ((x -> y) ^ 1) v ((y -> x) ^ 1) = 1. Witness (x, y).
PropertyVerdict is_semilinear(const FiniteInRL& alg);

}  // namespace inrl
