#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "inrl/algebra.hpp"
#include "inrl/gluing.hpp"
#include "inrl/report.hpp"

namespace inrl {

/// Elements c of A+ with nothing strictly between 1 and c, ascending.
/// Empty iff A+ = {1}.
std::vector<Elem> find_atoms(const FiniteInRL& alg);

/// The unique e in A+ with {x in A+ | x [= c} and {x in A+ | e [= x}
/// partitioning A+. Throws DecompositionError if c is not in A+ or there
/// is no such e or more than one.
Elem complement_of_atom(const FiniteInRL& alg, Elem c);

struct SplitResult {
  Elem c = 0;
  Elem c_star = 0;
  std::vector<Elem> lower_ids;  ///< {x | x [= c}, ascending; lower element i is lower_ids[i]
  std::vector<Elem> upper_ids;  ///< {y | -c* [= y}, ascending
  GluingSpec spec;              ///< a = c.-c*, b = (c ^ -a) v -c*, phi(x) = (x ^ -a) v -c*
};

/// Throws DecompositionError if c is not an atom or the pieces are not
/// well formed.
SplitResult split(const FiniteInRL& alg, Elem c);

/// Checks on a split, in ids of `alg`:
///
///   carriers-partition, upper-iff-not-below-c, sides-are-members,
///   a-in-lower-negative-cone, a-not-below-lower-zero, b-in-negative-cone,
///   c-times-zero, zero-below-b, phi-of-y-times-c, below-neg-a-iff-join-upper,
///   phi-inverse-left, phi-inverse-right, spec-valid, reglue-equals-input.
Report verify_split(const FiniteInRL& alg, const SplitResult& s);

struct DecompositionNode;
using DecompositionTree = std::shared_ptr<const DecompositionNode>;

/// A leaf holds a Boolean algebra. An inner node holds the names of a, b
/// and phi together with the trees of both factors.
struct DecompositionNode {
  FiniteInRL algebra;
  std::optional<NamedGluing> gluing;
  DecompositionTree lower;
  DecompositionTree upper;

  bool is_leaf() const noexcept { return !gluing.has_value(); }
};

DecompositionTree make_leaf(FiniteInRL alg);
DecompositionTree make_node(FiniteInRL alg, NamedGluing gluing, DecompositionTree lower,
                            DecompositionTree upper);

/// Splits at the smallest atom until every leaf is a single Boolean block,
/// lower factor first. Throws DecompositionError on a non-member.
DecompositionTree decompose(const FiniteInRL& alg);

/// Leaves from left to right (lower before upper).
std::vector<FiniteInRL> leaves(const DecompositionTree& tree);

/// Folds glue over the tree. a, b and phi are matched by element name, so
/// the factors may come back with any element order.
FiniteInRL reassemble(const DecompositionTree& tree);

}  // namespace inrl
