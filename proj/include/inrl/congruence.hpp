#pragma once

#include <cstddef>
#include <vector>

#include "inrl/algebra.hpp"
#include "inrl/bit_matrix.hpp"
#include "inrl/report.hpp"

namespace inrl {

/// A filter of the negative cone: an up-set of A- closed under meet. In a
/// finite algebra it is the principal up-set of its generator.
struct NegConeFilter {
  Elem generator = 0;
  std::vector<Elem> elements;  ///< ascending

  friend bool operator==(const NegConeFilter&, const NegConeFilter&) = default;
};

struct Congruence {
  BitMatrix relation;
  std::vector<std::vector<Elem>> classes;  ///< each ascending, ordered by first element
  std::vector<std::size_t> class_of;
  std::vector<Elem> one_class;  ///< [1], ascending

  friend bool operator==(const Congruence& a, const Congruence& b) { return a.relation == b.relation; }
};

/// One filter per element g of A-, in ascending order of g.
std::vector<NegConeFilter> filters_of_negative_cone(const FiniteInRL& alg);

/// The principal filter of A- generated by g. Throws StructuralError if g
/// is not below 1.
NegConeFilter principal_filter(const FiniteInRL& alg, Elem g);

/// H_F = {x | f [= x for some f in F}, ascending.
std::vector<Elem> filter_hull(const FiniteInRL& alg, const NegConeFilter& f);

/// Theta_H for H = H_F: x ~ y iff h.x <= y and h.y <= x for some h in H.
/// Throws InternalError if the result is not a congruence.
Congruence congruence_from_filter(const FiniteInRL& alg, const NegConeFilter& f);

/// Wraps an equivalence relation; throws StructuralError otherwise.
Congruence make_congruence(const FiniteInRL& alg, const BitMatrix& relation);

/// Equivalence relation compatible with join, fusion and negation.
bool is_congruence(const FiniteInRL& alg, const BitMatrix& relation);

/// [1]_theta intersected with A-, which is a filter of A-.
NegConeFilter filter_of(const FiniteInRL& alg, const Congruence& theta);

/// Least congruence containing both.
Congruence join(const FiniteInRL& alg, const Congruence& a, const Congruence& b);

struct CongruenceLattice {
  std::vector<Congruence> congruences;  ///< congruences[i] comes from generators[i]
  std::vector<Elem> generators;         ///< A-, ascending
  BitMatrix refines;                    ///< (i, j) iff congruences[i] is contained in congruences[j]

  std::size_t size() const noexcept { return congruences.size(); }
};

CongruenceLattice congruence_lattice(const FiniteInRL& alg);

/// Checks that g -> Theta_g is an order anti-isomorphism from A- onto the
/// lattice: distinct relations, and g <= h iff Theta_h refines Theta_g.
Report verify_anti_isomorphism(const FiniteInRL& alg, const CongruenceLattice& lat);

/// Classwise quotient. Class i is named after its first element. Throws
/// StructuralError if an induced operation is ill defined.
FiniteInRL quotient(const FiniteInRL& alg, const Congruence& theta);

/// Round trips between filters and congruences, pointed hulls,
/// and the cone interval lemmas:
///
///   filter-round-trip, congruence-round-trip, hull-pointed-iff-zero-in-filter,
///   cone-interval-characterizations, pointed-iff-below-zero.
Report verify_congruence_lemmas(const FiniteInRL& alg);

}  // namespace inrl
