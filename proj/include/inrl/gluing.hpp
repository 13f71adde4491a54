#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "inrl/algebra.hpp"
#include "inrl/report.hpp"

namespace inrl {

/// Ingredients of A (+)_phi B. `phi` maps {x in A | a [= x} onto
/// {y in B | y [= b}.
struct GluingSpec {
  FiniteInRL lower;
  FiniteInRL upper;
  Elem a = 0;
  Elem b = 0;
  std::map<Elem, Elem> phi;
};

/// The a, b and phi of a spec given by element names rather than ids.
struct NamedGluing {
  std::string a;
  std::string b;
  std::vector<std::pair<std::string, std::string>> phi;

  friend bool operator==(const NamedGluing&, const NamedGluing&) = default;
};

/// Resolves names against the two algebras. Throws GluingError for an
/// unknown name or a repeated phi source.
GluingSpec resolve(FiniteInRL lower, FiniteInRL upper, const NamedGluing& named);

/// phi pairs in ascending order of source id.
NamedGluing names_of(const GluingSpec& spec);

enum class Side { lower, upper };

struct Provenance {
  Side side;
  Elem id;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Lower elements keep their ids; upper element y becomes |A| + y.
struct GluedAlgebra {
  FiniteInRL result;
  std::vector<Provenance> provenance;

  Elem from_lower(Elem x) const noexcept { return x; }
  Elem from_upper(Elem y) const noexcept {
    return static_cast<Elem>(result.size() - upper_size + y);
  }
  std::size_t upper_size = 0;
};

/// Every ingredient condition, by name:
///
///   lower-is-member, upper-is-member, names-disjoint, a-in-negative-cone,
///   a-not-below-zero, b-in-negative-cone, upper-bounded, phi-domain,
///   phi-codomain, phi-injective, phi-preserves-fusion, phi-preserves-join,
///   zero-of-b.
///
/// The domain {x | a [= x} and codomain {y | y [= b} are computed here.
Report validate_gluing(const GluingSpec& spec);

/// The witness of a validate_gluing clause with names taken from the side
/// it refers to, e.g. "x=u y=1_u". Empty when the clause has no witness.
std::string format_gluing_witness(const Check& check, const GluingSpec& spec);

/// Builds the glued algebra. Throws GluingError naming the first failed
/// ingredient, and InternalError if the result is not a member.
GluedAlgebra glue(const GluingSpec& spec);

/// Facts about a glued algebra that follow from the construction:
///
///   size-additive, unit-and-zero-from-upper, neg-restricts,
///   order-characterization, fusion-below-neg-a, zero-iff-lower-zero.
Report verify_glued(const GluingSpec& spec, const GluedAlgebra& glued);

/// Lemmas about a in A- used by the construction, for every x, y:
///
///   absorption              x <= -a  implies  (x v a) ^ -a = x v 0_a
///   absorption-upset        a [= x   implies  (-x v a) ^ -a = -x and (x ^ -a) v a = x
///   fusion-preservation     x, y <= 1_a  implies  (x.y) v a = (x v a).(y v a)
///   fusion-preservation-upset
///                           a [= x, y  implies  (x.y) ^ -a = (x ^ -a).(y ^ -a)
Report verify_cone_lemmas(const FiniteInRL& alg, Elem a);

}  // namespace inrl
