#include "inrl/axioms.hpp"

namespace inrl {

namespace {

template <class Fn>
bool all_pairs(std::size_t n, Fn fn) {
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (!fn(x, y)) return false;
  return true;
}

template <class Fn>
bool all_triples(std::size_t n, Fn fn) {
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (!fn(x, y, z)) return false;
  return true;
}

struct Laws {
  const FiniteInRL& a;

  bool join_idempotent(Elem x) const { return a.join(x, x) == x; }
  bool join_commutative(Elem x, Elem y) const { return a.join(x, y) == a.join(y, x); }
  bool join_associative(Elem x, Elem y, Elem z) const {
    return a.join(a.join(x, y), z) == a.join(x, a.join(y, z));
  }
  bool fusion_idempotent(Elem x) const { return a.fusion(x, x) == x; }
  bool fusion_commutative(Elem x, Elem y) const { return a.fusion(x, y) == a.fusion(y, x); }
  bool fusion_associative(Elem x, Elem y, Elem z) const {
    return a.fusion(a.fusion(x, y), z) == a.fusion(x, a.fusion(y, z));
  }
  bool fusion_unit(Elem x) const { return a.fusion(a.one(), x) == x && a.fusion(x, a.one()) == x; }
  bool involution(Elem x, Elem y) const { return (a.neg(x) == y) == (a.neg(y) == x); }
  bool residuation(Elem x, Elem y) const {
    const bool left = a.leq(x, a.neg(y));
    const bool middle = a.leq(a.fusion(x, y), a.neg(a.one()));
    const bool right = a.leq(y, a.neg(x));
    return left == middle && middle == right;
  }
  bool distributive(Elem x, Elem y, Elem z) const {
    return a.fusion(x, a.join(y, z)) == a.join(a.fusion(x, y), a.fusion(x, z)) &&
           a.fusion(a.join(y, z), x) == a.join(a.fusion(y, x), a.fusion(z, x));
  }
};

}  // namespace

AxiomReport validate(const FiniteInRL& alg) {
  const Laws law{alg};
  const std::size_t n = alg.size();
  AxiomReport r;
  r.add("join-idempotent", first_failing(n, [&](Elem x) { return law.join_idempotent(x); }));
  r.add("join-commutative",
        first_failing_pair(n, [&](Elem x, Elem y) { return law.join_commutative(x, y); }));
  r.add("join-associative", first_failing_triple(n, [&](Elem x, Elem y, Elem z) {
          return law.join_associative(x, y, z);
        }));
  r.add("fusion-idempotent", first_failing(n, [&](Elem x) { return law.fusion_idempotent(x); }));
  r.add("fusion-commutative",
        first_failing_pair(n, [&](Elem x, Elem y) { return law.fusion_commutative(x, y); }));
  r.add("fusion-associative", first_failing_triple(n, [&](Elem x, Elem y, Elem z) {
          return law.fusion_associative(x, y, z);
        }));
  r.add("fusion-unit", first_failing(n, [&](Elem x) { return law.fusion_unit(x); }));
  r.add("involution", first_failing_pair(n, [&](Elem x, Elem y) { return law.involution(x, y); }));
  r.add("residuation",
        first_failing_pair(n, [&](Elem x, Elem y) { return law.residuation(x, y); }));
  r.add("fusion-distributes-over-join", first_failing_triple(n, [&](Elem x, Elem y, Elem z) {
          return law.distributive(x, y, z);
        }));
  return r;
}

bool is_member(const FiniteInRL& alg) {
  const Laws law{alg};
  const std::size_t n = alg.size();
  for (Elem x = 0; x < n; ++x)
    if (!law.join_idempotent(x) || !law.fusion_idempotent(x) || !law.fusion_unit(x)) return false;
  if (!all_pairs(n, [&](Elem x, Elem y) {
        return law.join_commutative(x, y) && law.fusion_commutative(x, y) &&
               law.involution(x, y);
      }))
    return false;
  if (!all_triples(n, [&](Elem x, Elem y, Elem z) {
        return law.join_associative(x, y, z) && law.fusion_associative(x, y, z);
      }))
    return false;
  if (!all_pairs(n, [&](Elem x, Elem y) { return law.residuation(x, y); })) return false;
  return all_triples(n, [&](Elem x, Elem y, Elem z) { return law.distributive(x, y, z); });
}

}  // namespace inrl
