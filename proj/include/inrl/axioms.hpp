#pragma once

#include "inrl/algebra.hpp"
#include "inrl/report.hpp"

namespace inrl {

/// Checks every defining law of a commutative idempotent involutive
/// residuated lattice in the InRL-semiring signature:
///
///   join-idempotent, join-commutative, join-associative,
///   fusion-idempotent, fusion-commutative, fusion-associative, fusion-unit,
///   involution            neg(x) = y  iff  neg(y) = x,
///   residuation           x <= neg y  iff  x.y <= neg 1  iff  y <= neg x,
///   fusion-distributes-over-join.
///
/// All clauses pass iff the algebra is a member of the variety. Shape
/// errors never reach here; FiniteInRL cannot be built with them.
AxiomReport validate(const FiniteInRL& alg);

/// Short-circuiting form of validate(alg).ok().
bool is_member(const FiniteInRL& alg);

}  // namespace inrl
