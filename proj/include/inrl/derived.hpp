#pragma once

#include <span>
#include <utility>
#include <vector>

#include "inrl/algebra.hpp"
#include "inrl/bit_matrix.hpp"
#include "inrl/report.hpp"

namespace inrl {

/// The lattice order <= and the monoidal order [= with their Hasse covers.
struct OrderPair {
  BitMatrix lattice_leq;
  BitMatrix monoidal_leq;
  BitMatrix lattice_covers;
  BitMatrix monoidal_covers;
};

/// Term-defined operations, materialized as tables.
struct DerivedOps {
  std::size_t n = 0;
  Elem zero = 0;
  std::vector<Elem> meet;      ///< x ^ y = neg(neg x v neg y)
  std::vector<Elem> residual;  ///< x -> y = neg(neg y . x)
  std::vector<Elem> positive_cone;
  std::vector<Elem> negative_cone;

  Elem meet_of(Elem x, Elem y) const noexcept { return meet[x * n + y]; }
  Elem residual_of(Elem x, Elem y) const noexcept { return residual[x * n + y]; }
};

OrderPair compute_orders(const FiniteInRL& alg);
DerivedOps compute_derived(const FiniteInRL& alg);
std::pair<OrderPair, DerivedOps> derived_operations(const FiniteInRL& alg);

/// A+ = {x | 1 <= x} and A- = {x | x <= 1}, ascending.
std::vector<Elem> positive_cone(const FiniteInRL& alg);
std::vector<Elem> negative_cone(const FiniteInRL& alg);

/// The elementary laws of every member, for all x, y:
///
///   neg-antitone           x <= y  iff  -y <= -x
///   fusion-between         x ^ y <= x.y <= x v y
///   fusion-is-join-above   x, y in A+  implies  x.y = x v y
///   fusion-is-meet-below   x, y in A-  implies  x.y = x ^ y
///   de-morgan-meet         -(x ^ y) = -x v -y
///   de-morgan-join         -(x v y) = -x ^ -y
///   constants              -1 = 0 <= 1 = -0
///   residuation-round-trip x.y <= z  iff  y <= x -> z   (witness x, y, z)
Report verify_elementary_properties(const FiniteInRL& alg);

/// Least subset containing `seeds` and 1 and closed under join, fusion and
/// negation. Returned sorted ascending.
std::vector<Elem> subalgebra_generated(const FiniteInRL& alg, std::span<const Elem> seeds);

/// The algebra induced on `carrier` (any order, no duplicates) with `unit`
/// as its fusion unit. Element i of the result is carrier[i]. Throws
/// StructuralError if the carrier is not closed under join, fusion and
/// negation or does not contain `unit`.
FiniteInRL induced_algebra(const FiniteInRL& alg, std::span<const Elem> carrier, Elem unit);

}  // namespace inrl
