#include "inrl/congruence.hpp"

#include <algorithm>
#include <limits>

#include "inrl/derived.hpp"
#include "inrl/errors.hpp"

namespace inrl {

namespace {

bool contains(const std::vector<Elem>& sorted, Elem x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

/// Closed under join, fusion, meet and residual, and contains 1.
bool is_zero_free_subuniverse(const FiniteInRL& alg, const std::vector<Elem>& s) {
  if (!contains(s, alg.one())) return false;
  for (Elem x : s)
    for (Elem y : s)
      if (!contains(s, alg.join(x, y)) || !contains(s, alg.fusion(x, y)) ||
          !contains(s, alg.meet(x, y)) || !contains(s, alg.residual(x, y)))
        return false;
  return true;
}

}  // namespace

NegConeFilter principal_filter(const FiniteInRL& alg, Elem g) {
  if (g >= alg.size() || !alg.leq(g, alg.one()))
    throw StructuralError("filter generator is not in the negative cone");
  NegConeFilter f;
  f.generator = g;
  for (Elem x = 0; x < alg.size(); ++x)
    if (alg.leq(g, x) && alg.leq(x, alg.one())) f.elements.push_back(x);
  return f;
}

std::vector<NegConeFilter> filters_of_negative_cone(const FiniteInRL& alg) {
  std::vector<NegConeFilter> out;
  for (Elem g : negative_cone(alg)) out.push_back(principal_filter(alg, g));
  return out;
}

std::vector<Elem> filter_hull(const FiniteInRL& alg, const NegConeFilter& f) {
  std::vector<Elem> out;
  for (Elem x = 0; x < alg.size(); ++x)
    if (std::any_of(f.elements.begin(), f.elements.end(), [&](Elem b) { return alg.mleq(b, x); }))
      out.push_back(x);
  return out;
}

Congruence make_congruence(const FiniteInRL& alg, const BitMatrix& relation) {
  const std::size_t n = alg.size();
  if (relation.size() != n || !relation.is_equivalence())
    throw StructuralError("relation is not an equivalence on the carrier");
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  Congruence c;
  c.relation = relation;
  c.class_of.assign(n, none);
  for (Elem x = 0; x < n; ++x) {
    if (c.class_of[x] != none) continue;
    std::vector<Elem> cls;
    for (Elem y = x; y < n; ++y)
      if (relation.test(x, y)) {
        cls.push_back(y);
        c.class_of[y] = c.classes.size();
      }
    c.classes.push_back(std::move(cls));
  }
  c.one_class = c.classes[c.class_of[alg.one()]];
  return c;
}

bool is_congruence(const FiniteInRL& alg, const BitMatrix& relation) {
  const std::size_t n = alg.size();
  if (relation.size() != n || !relation.is_equivalence()) return false;
  for (Elem x = 0; x < n; ++x)
    for (Elem x2 = 0; x2 < n; ++x2) {
      if (x == x2 || !relation.test(x, x2)) continue;
      if (!relation.test(alg.neg(x), alg.neg(x2))) return false;
      for (Elem y = 0; y < n; ++y)
        if (!relation.test(alg.join(x, y), alg.join(x2, y)) ||
            !relation.test(alg.fusion(x, y), alg.fusion(x2, y)))
          return false;
    }
  return true;
}

Congruence congruence_from_filter(const FiniteInRL& alg, const NegConeFilter& f) {
  const std::size_t n = alg.size();
  const auto hull = filter_hull(alg, f);
  BitMatrix rel(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem h : hull)
        if (alg.leq(alg.fusion(h, x), y) && alg.leq(alg.fusion(h, y), x)) {
          rel.set(x, y);
          break;
        }
  if (!is_congruence(alg, rel))
    throw InternalError("relation built from the filter generated by '" + alg.name(f.generator) +
                        "' is not a congruence");
  return make_congruence(alg, rel);
}

NegConeFilter filter_of(const FiniteInRL& alg, const Congruence& theta) {
  NegConeFilter f;
  for (Elem x : theta.one_class)
    if (alg.leq(x, alg.one())) f.elements.push_back(x);
  f.generator = alg.one();
  for (Elem x : f.elements) f.generator = alg.meet(f.generator, x);
  return f;
}

Congruence join(const FiniteInRL& alg, const Congruence& a, const Congruence& b) {
  BitMatrix rel = a.relation.unite(b.relation);
  rel.transitive_closure();
  return make_congruence(alg, rel);
}

CongruenceLattice congruence_lattice(const FiniteInRL& alg) {
  CongruenceLattice lat;
  for (const auto& f : filters_of_negative_cone(alg)) {
    lat.generators.push_back(f.generator);
    lat.congruences.push_back(congruence_from_filter(alg, f));
  }
  const std::size_t m = lat.size();
  lat.refines = BitMatrix(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (lat.congruences[i].relation.subset_of(lat.congruences[j].relation)) lat.refines.set(i, j);
  return lat;
}

Report verify_anti_isomorphism(const FiniteInRL& alg, const CongruenceLattice& lat) {
  const auto minus = negative_cone(alg);
  Report r;
  r.add("generators-are-negative-cone",
        lat.generators == minus ? Witness{} : Witness{std::vector<Elem>{alg.one()}}, {"g"});
  const std::size_t m = std::min(lat.size(), lat.generators.size());
  Witness distinct, order;
  for (std::size_t i = 0; i < m && !(distinct && order); ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Elem g = lat.generators[i];
      const Elem h = lat.generators[j];
      if (!distinct && i != j && lat.congruences[i] == lat.congruences[j])
        distinct = std::vector<Elem>{g, h};
      if (!order && alg.leq(g, h) != lat.refines.test(j, i)) order = std::vector<Elem>{g, h};
    }
  r.add("congruences-distinct", distinct, {"g", "h"});
  r.add("order-reversed", order, {"g", "h"});
  r.add("refinement-is-partial-order",
        lat.refines.is_partial_order() ? Witness{} : Witness{std::vector<Elem>{alg.one()}});
  return r;
}

FiniteInRL quotient(const FiniteInRL& alg, const Congruence& theta) {
  const std::size_t m = theta.classes.size();
  constexpr Elem unset = std::numeric_limits<Elem>::max();
  std::vector<Elem> join(m * m, unset), fusion(m * m, unset), neg(m, unset);
  auto put = [](Elem& cell, std::size_t value, const char* op) {
    if (cell != unset && cell != value)
      throw StructuralError(std::string("quotient: ") + op + " is not well defined on classes");
    cell = static_cast<Elem>(value);
  };
  const std::size_t n = alg.size();
  for (Elem x = 0; x < n; ++x) {
    const std::size_t cx = theta.class_of[x];
    put(neg[cx], theta.class_of[alg.neg(x)], "negation");
    for (Elem y = 0; y < n; ++y) {
      const std::size_t cy = theta.class_of[y];
      put(join[cx * m + cy], theta.class_of[alg.join(x, y)], "join");
      put(fusion[cx * m + cy], theta.class_of[alg.fusion(x, y)], "fusion");
    }
  }
  std::vector<std::string> names;
  for (const auto& cls : theta.classes) names.push_back(alg.name(cls.front()));
  return FiniteInRL(std::move(names), std::move(join), std::move(fusion), std::move(neg),
                    static_cast<Elem>(theta.class_of[alg.one()]));
}

Report verify_congruence_lemmas(const FiniteInRL& alg) {
  const std::size_t n = alg.size();
  const auto minus = negative_cone(alg);
  const auto filters = filters_of_negative_cone(alg);
  Report r;

  Witness filter_trip, cong_trip, pointed_hull;
  for (const auto& f : filters) {
    const Congruence theta = congruence_from_filter(alg, f);
    if (!filter_trip && filter_of(alg, theta) != f) filter_trip = std::vector<Elem>{f.generator};
    if (!cong_trip && congruence_from_filter(alg, filter_of(alg, theta)) != theta)
      cong_trip = std::vector<Elem>{f.generator};
    const auto hull = filter_hull(alg, f);
    const bool pointed = is_zero_free_subuniverse(alg, hull) && contains(hull, alg.zero());
    if (!pointed_hull && pointed != contains(f.elements, alg.zero()))
      pointed_hull = std::vector<Elem>{f.generator};
  }
  r.add("filter-round-trip", filter_trip, {"g"});
  r.add("congruence-round-trip", cong_trip, {"g"});
  r.add("hull-pointed-iff-zero-in-filter", pointed_hull, {"g"});

  {
    Witness w;
    for (Elem a : minus) {
      for (Elem x = 0; x < n && !w; ++x) {
        const bool by_residual = alg.leq(a, x) && alg.leq(x, alg.residual(a, alg.one()));
        const bool by_block = alg.leq(a, x) && alg.leq(x, alg.block_top(a));
        if (by_residual != by_block || by_block != alg.mleq(a, x)) w = std::vector<Elem>{a, x};
      }
      if (w) break;
    }
    r.add("cone-interval-characterizations", w, {"a", "x"});
  }
  r.add("pointed-iff-below-zero", first_failing_in(minus, [&](Elem a) {
          bool all = true;
          for (Elem x = 0; x < n && all; ++x)
            if (alg.mleq(a, x) && !alg.mleq(a, alg.neg(x))) all = false;
          return alg.leq(a, alg.zero()) == all;
        }), {"a"});
  return r;
}

}  // namespace inrl
