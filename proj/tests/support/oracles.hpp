#pragma once

// Deliberately naive reference computations. None of these share code
// paths with the library routines they are compared against, beyond the
// table lookups of FiniteInRL.

#include <cstddef>
#include <utility>
#include <vector>

#include "inrl/algebra.hpp"
#include "inrl/gluing.hpp"

namespace oracle {

using inrl::Elem;
using inrl::FiniteInRL;

/// Reflexive-transitive closure of a cover list, as an n*n 0/1 table.
std::vector<char> order_from_covers(std::size_t n, const std::vector<std::pair<Elem, Elem>>& covers);

/// Fixpoint of repeatedly applying every operation to every pair.
std::vector<Elem> closure(const FiniteInRL& alg, const std::vector<Elem>& seeds);

/// Every nonempty subset of A- that is up-closed in A- and closed under
/// meet, as ascending element lists, in order of the subset bitmask.
std::vector<std::vector<Elem>> filters(const FiniteInRL& alg);

/// Every congruence, found by testing each set partition of the carrier.
/// Each result is a class labeling in restricted growth form.
std::vector<std::vector<std::size_t>> congruences(const FiniteInRL& alg);

/// Restricted growth labeling of a class assignment.
std::vector<std::size_t> normalize(const std::vector<std::size_t>& class_of);

/// All members of size n up to isomorphism, by trying every negation,
/// unit, semilattice table and fusion table. Feasible for n <= 4.
std::vector<FiniteInRL> enumerate(std::size_t n);

/// Every spec passing validate_gluing, found by trying each a, b and each
/// bijection between {x | a [= x} and {y | y [= b}. Names must be disjoint.
std::vector<inrl::GluingSpec> gluing_specs(const FiniteInRL& lower, const FiniteInRL& upper);

/// All members of size at most max_size up to isomorphism, grown from the
/// Boolean algebras by gluing every valid spec between smaller members.
/// Complete because every finite member is Boolean or a gluing of two
/// smaller members. Result i holds the members of size i.
std::vector<std::vector<FiniteInRL>> enumerate_by_gluing(std::size_t max_size);

}  // namespace oracle
