#include "inrl/derived.hpp"

#include <algorithm>
#include <limits>

#include "inrl/errors.hpp"

namespace inrl {

OrderPair compute_orders(const FiniteInRL& alg) {
  const std::size_t n = alg.size();
  OrderPair o{BitMatrix(n), BitMatrix(n), {}, {}};
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (alg.leq(x, y)) o.lattice_leq.set(x, y);
      if (alg.mleq(x, y)) o.monoidal_leq.set(x, y);
    }
  o.lattice_covers = o.lattice_leq.covers();
  o.monoidal_covers = o.monoidal_leq.covers();
  return o;
}

std::vector<Elem> positive_cone(const FiniteInRL& alg) {
  std::vector<Elem> out;
  for (Elem x = 0; x < alg.size(); ++x)
    if (alg.leq(alg.one(), x)) out.push_back(x);
  return out;
}

std::vector<Elem> negative_cone(const FiniteInRL& alg) {
  std::vector<Elem> out;
  for (Elem x = 0; x < alg.size(); ++x)
    if (alg.leq(x, alg.one())) out.push_back(x);
  return out;
}

DerivedOps compute_derived(const FiniteInRL& alg) {
  const std::size_t n = alg.size();
  DerivedOps d;
  d.n = n;
  d.zero = alg.zero();
  d.meet.resize(n * n);
  d.residual.resize(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      d.meet[x * n + y] = alg.meet(x, y);
      d.residual[x * n + y] = alg.residual(x, y);
    }
  d.positive_cone = positive_cone(alg);
  d.negative_cone = negative_cone(alg);
  return d;
}

std::pair<OrderPair, DerivedOps> derived_operations(const FiniteInRL& alg) {
  return {compute_orders(alg), compute_derived(alg)};
}

Report verify_elementary_properties(const FiniteInRL& alg) {
  const std::size_t n = alg.size();
  const Elem one = alg.one();
  const Elem zero = alg.zero();
  const auto pos = [&](Elem x) { return alg.leq(one, x); };
  const auto negc = [&](Elem x) { return alg.leq(x, one); };
  Report r;
  r.add("neg-antitone", first_failing_pair(n, [&](Elem x, Elem y) {
          return alg.leq(x, y) == alg.leq(alg.neg(y), alg.neg(x));
        }));
  r.add("fusion-between", first_failing_pair(n, [&](Elem x, Elem y) {
          return alg.leq(alg.meet(x, y), alg.fusion(x, y)) && alg.leq(alg.fusion(x, y), alg.join(x, y));
        }));
  r.add("fusion-is-join-above", first_failing_pair(n, [&](Elem x, Elem y) {
          return !(pos(x) && pos(y)) || alg.fusion(x, y) == alg.join(x, y);
        }));
  r.add("fusion-is-meet-below", first_failing_pair(n, [&](Elem x, Elem y) {
          return !(negc(x) && negc(y)) || alg.fusion(x, y) == alg.meet(x, y);
        }));
  r.add("de-morgan-meet", first_failing_pair(n, [&](Elem x, Elem y) {
          return alg.neg(alg.meet(x, y)) == alg.join(alg.neg(x), alg.neg(y));
        }));
  r.add("de-morgan-join", first_failing_pair(n, [&](Elem x, Elem y) {
          return alg.neg(alg.join(x, y)) == alg.meet(alg.neg(x), alg.neg(y));
        }));
  r.add("constants", alg.neg(one) == zero && alg.leq(zero, one) && alg.neg(zero) == one
                         ? Witness{}
                         : Witness{std::vector<Elem>{one}});
  r.add("residuation-round-trip", first_failing_triple(n, [&](Elem x, Elem y, Elem z) {
          return alg.leq(alg.fusion(x, y), z) == alg.leq(y, alg.residual(x, z));
        }));
  return r;
}

std::vector<Elem> subalgebra_generated(const FiniteInRL& alg, std::span<const Elem> seeds) {
  const std::size_t n = alg.size();
  std::vector<bool> in(n, false);
  std::vector<Elem> members;
  auto insert = [&](Elem e) {
    if (!in[e]) {
      in[e] = true;
      members.push_back(e);
    }
  };
  for (Elem s : seeds) {
    if (s >= n) throw StructuralError("seed element out of range");
    insert(s);
  }
  insert(alg.one());
  // Each new element is combined with every earlier one exactly once.
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Elem x = members[i];
    insert(alg.neg(x));
    for (std::size_t j = 0; j <= i; ++j) {
      const Elem y = members[j];
      insert(alg.join(x, y));
      insert(alg.fusion(x, y));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

FiniteInRL induced_algebra(const FiniteInRL& alg, std::span<const Elem> carrier, Elem unit) {
  const std::size_t n = alg.size();
  constexpr Elem absent = std::numeric_limits<Elem>::max();
  std::vector<Elem> local(n, absent);
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    if (carrier[i] >= n) throw StructuralError("carrier element out of range");
    if (local[carrier[i]] != absent) throw StructuralError("carrier lists an element twice");
    local[carrier[i]] = static_cast<Elem>(i);
  }
  if (unit >= n || local[unit] == absent) throw StructuralError("unit is not in the carrier");
  auto image = [&](Elem e, const char* what) {
    if (local[e] == absent)
      throw StructuralError(std::string("carrier is not closed under ") + what);
    return local[e];
  };
  const std::size_t m = carrier.size();
  std::vector<std::string> names;
  std::vector<Elem> join(m * m), fusion(m * m), neg(m);
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back(alg.name(carrier[i]));
    neg[i] = image(alg.neg(carrier[i]), "negation");
    for (std::size_t j = 0; j < m; ++j) {
      join[i * m + j] = image(alg.join(carrier[i], carrier[j]), "join");
      fusion[i * m + j] = image(alg.fusion(carrier[i], carrier[j]), "fusion");
    }
  }
  return FiniteInRL(std::move(names), std::move(join), std::move(fusion), std::move(neg),
                    local[unit]);
}

}  // namespace inrl
