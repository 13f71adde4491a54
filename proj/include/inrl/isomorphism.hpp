#pragma once

#include <optional>
#include <span>
#include <vector>

#include "inrl/algebra.hpp"

namespace inrl {

/// map[x] is the image in `b` of element x of `a`.
using Bijection = std::vector<Elem>;

/// A bijection preserving join, fusion, negation and the unit, or nothing.
/// Candidates are pruned by invariant element signatures (Boolean block
/// size, cone membership, down-set sizes in both orders) before a
/// backtracking search that propagates forced images through the tables.
std::optional<Bijection> find_isomorphism(const FiniteInRL& a, const FiniteInRL& b);

bool isomorphic(const FiniteInRL& a, const FiniteInRL& b);

/// Whether `map` is a bijection a -> b commuting with every operation.
bool is_isomorphism(const FiniteInRL& a, const FiniteInRL& b, std::span<const Elem> map);

/// The bijection matching equal names, if both carriers have the same names.
std::optional<Bijection> name_matching(const FiniteInRL& a, const FiniteInRL& b);

/// Same names, and the name-matching bijection is an isomorphism.
bool equal_by_names(const FiniteInRL& a, const FiniteInRL& b);

}  // namespace inrl
