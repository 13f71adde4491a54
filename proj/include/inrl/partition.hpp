#pragma once

#include <cstddef>
#include <vector>

#include "inrl/algebra.hpp"
#include "inrl/bit_matrix.hpp"
#include "inrl/report.hpp"

namespace inrl {

/// The interval B_x = {y | 0_x [= y [= 1_x}, a Boolean algebra under
/// fusion, join and negation.
struct BooleanBlock {
  Elem bottom = 0;  ///< 0_x = x ^ neg x = x . neg x
  Elem top = 0;     ///< 1_x = x v neg x
  std::vector<Elem> elements;  ///< ascending

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(Elem y) const;
};

/// The blocks B_x, ordered by their smallest element, and the skeleton of
/// block bottoms {0_x} = {x | x <= 0}.
struct Partition {
  std::vector<BooleanBlock> blocks;
  std::vector<std::size_t> block_of;  ///< element -> index into blocks
  std::vector<Elem> skeleton;         ///< bottoms, ascending by index
  BitMatrix skeleton_leq;             ///< lattice order on skeleton positions

  const BooleanBlock& block_containing(Elem x) const { return blocks[block_of[x]]; }
  bool same_block(Elem x, Elem y) const { return block_of[x] == block_of[y]; }
  std::vector<std::size_t> block_sizes() const;
};

/// Throws StructuralError if x ^ neg x and x . neg x disagree, which cannot
/// happen in a member of the variety.
BooleanBlock block(const FiniteInRL& alg, Elem x);

Partition partition(const FiniteInRL& alg);

/// A member is a Boolean algebra iff it has a single block.
bool is_boolean(const FiniteInRL& alg);

/// Checks the structural facts about blocks and the skeleton:
///
///   block-contains-x, block-bounds, block-closed, block-orders-coincide,
///   block-boolean, neg-is-residual-to-bottom, same-bottom-in-block,
///   bottom-monoidal-monotone, bottom-fusion, top-fusion, blocks-disjoint-cover,
///   tops-are-positive-cone, skeleton-is-downset-of-zero, skeleton-sublattice,
///   skeleton-distributive, skeleton-dual-to-positive-cone.
Report verify_partition(const FiniteInRL& alg, const Partition& p);

/// Compatibility of "same block" with fusion, negation and join. The first
/// two always hold in a member; join compatibility may fail. Witnesses are
/// (x, x2, y) with x, x2 in one block and x.y, x2.y (or y v x, y v x2) in
/// different blocks; for negation (x, x2).
Report block_equivalence_compatibility(const FiniteInRL& alg, const Partition& p);

}  // namespace inrl
