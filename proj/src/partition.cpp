#include "inrl/partition.hpp"

#include <algorithm>

#include "inrl/derived.hpp"
#include "inrl/errors.hpp"

namespace inrl {

bool BooleanBlock::contains(Elem y) const {
  return std::binary_search(elements.begin(), elements.end(), y);
}

std::vector<std::size_t> Partition::block_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& b : blocks) out.push_back(b.size());
  return out;
}

BooleanBlock block(const FiniteInRL& alg, Elem x) {
  if (x >= alg.size()) throw StructuralError("element out of range");
  BooleanBlock b;
  b.bottom = alg.block_bottom(x);
  b.top = alg.block_top(x);
  if (b.bottom != alg.fusion(x, alg.neg(x)))
    throw StructuralError("block of '" + alg.name(x) + "': x ^ neg x differs from x . neg x");
  for (Elem y = 0; y < alg.size(); ++y)
    if (alg.mleq(b.bottom, y) && alg.mleq(y, b.top)) b.elements.push_back(y);
  if (!b.contains(x))
    throw StructuralError("block of '" + alg.name(x) + "' does not contain it");
  return b;
}

Partition partition(const FiniteInRL& alg) {
  const std::size_t n = alg.size();
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  Partition p;
  p.block_of.assign(n, unassigned);
  for (Elem x = 0; x < n; ++x) {
    if (p.block_of[x] != unassigned) continue;
    BooleanBlock b = block(alg, x);
    for (Elem y : b.elements) {
      if (p.block_of[y] != unassigned)
        throw StructuralError("blocks of '" + alg.name(x) + "' and '" + alg.name(y) + "' overlap");
      p.block_of[y] = p.blocks.size();
    }
    p.blocks.push_back(std::move(b));
  }
  for (const auto& b : p.blocks) p.skeleton.push_back(b.bottom);
  std::sort(p.skeleton.begin(), p.skeleton.end());
  p.skeleton_leq = BitMatrix(p.skeleton.size());
  for (std::size_t i = 0; i < p.skeleton.size(); ++i)
    for (std::size_t j = 0; j < p.skeleton.size(); ++j)
      if (alg.leq(p.skeleton[i], p.skeleton[j])) p.skeleton_leq.set(i, j);
  return p;
}

bool is_boolean(const FiniteInRL& alg) {
  // One block iff 0_x is the same for every x.
  const Elem bottom = alg.block_bottom(alg.one());
  for (Elem x = 0; x < alg.size(); ++x)
    if (alg.block_bottom(x) != bottom) return false;
  return true;
}

Report verify_partition(const FiniteInRL& alg, const Partition& p) {
  const std::size_t n = alg.size();
  const Elem zero = alg.zero();
  const Elem one = alg.one();
  Report r;

  r.add("blocks-disjoint-cover", first_failing(n, [&](Elem x) {
          std::size_t hits = 0;
          for (const auto& b : p.blocks) hits += b.contains(x) ? 1 : 0;
          return hits == 1 && p.block_of[x] < p.blocks.size() &&
                 p.blocks[p.block_of[x]].contains(x);
        }));

  r.add("block-contains-x", first_failing(n, [&](Elem x) { return block(alg, x).contains(x); }));

  Witness bounds, closed, coincide, boolean, residual, same_bottom;
  for (const auto& b : p.blocks) {
    const std::span<const Elem> e = b.elements;
    if (!bounds && !(alg.neg(b.bottom) == b.top && alg.leq(b.bottom, zero) && alg.leq(zero, one) &&
                     alg.leq(one, b.top) && alg.mleq(b.bottom, b.top)))
      bounds = std::vector<Elem>{b.bottom};
    if (!closed)
      closed = first_failing_pair_in(e, [&](Elem y, Elem z) {
        return b.contains(alg.fusion(y, z)) && b.contains(alg.join(y, z)) && b.contains(alg.neg(y));
      });
    if (!coincide)
      coincide = first_failing_pair_in(e, [&](Elem y, Elem z) {
        return alg.mleq(y, z) == alg.leq(y, z) && alg.fusion(y, z) == alg.meet(y, z);
      });
    if (!boolean)
      boolean = first_failing_triple_in(e, [&](Elem y, Elem z, Elem w) {
        const auto f = [&](Elem s, Elem t) { return alg.fusion(s, t); };
        const auto j = [&](Elem s, Elem t) { return alg.join(s, t); };
        return f(y, alg.neg(y)) == b.bottom && j(y, alg.neg(y)) == b.top &&
               f(b.bottom, y) == b.bottom && f(b.top, y) == y && f(y, j(y, z)) == y &&
               j(y, f(y, z)) == y && f(y, j(z, w)) == j(f(y, z), f(y, w)) &&
               j(y, f(z, w)) == f(j(y, z), j(y, w));
      });
    if (!residual)
      residual = first_failing_in(e, [&](Elem y) { return alg.neg(y) == alg.residual(y, b.bottom); });
    if (!same_bottom)
      same_bottom = first_failing_in(e, [&](Elem y) { return alg.block_bottom(y) == b.bottom; });
  }
  r.add("block-bounds", bounds, {"bottom"});
  r.add("block-closed", closed);
  r.add("block-orders-coincide", coincide);
  r.add("block-boolean", boolean);
  r.add("neg-is-residual-to-bottom", residual, {"y"});
  r.add("same-bottom-in-block", same_bottom, {"y"});

  r.add("bottom-monoidal-monotone", first_failing_pair(n, [&](Elem x, Elem y) {
          return !alg.mleq(x, y) || alg.mleq(alg.block_bottom(x), alg.block_bottom(y));
        }));
  r.add("bottom-fusion", first_failing_pair(n, [&](Elem x, Elem y) {
          return alg.fusion(alg.block_bottom(x), alg.block_bottom(y)) ==
                 alg.block_bottom(alg.fusion(x, y));
        }));
  r.add("top-fusion", first_failing_pair(n, [&](Elem x, Elem y) {
          return alg.fusion(alg.block_top(x), alg.block_top(y)) == alg.block_top(alg.fusion(x, y));
        }));

  std::vector<bool> in_skeleton(n, false);
  for (Elem s : p.skeleton) in_skeleton[s] = true;
  const std::span<const Elem> sk = p.skeleton;

  {
    const auto plus = positive_cone(alg);
    std::vector<bool> is_top(n, false);
    for (Elem x = 0; x < n; ++x) is_top[alg.block_top(x)] = true;
    r.add("tops-are-positive-cone", first_failing(n, [&](Elem x) {
            return is_top[x] == std::binary_search(plus.begin(), plus.end(), x);
          }));
  }
  r.add("skeleton-is-downset-of-zero",
        first_failing(n, [&](Elem x) { return in_skeleton[x] == alg.leq(x, zero); }));
  {
    Witness w;
    if (!in_skeleton[zero]) w = std::vector<Elem>{zero};
    if (!w)
      w = first_failing_pair_in(sk, [&](Elem s, Elem t) {
        return in_skeleton[alg.meet(s, t)] && in_skeleton[alg.join(s, t)] &&
               alg.fusion(s, t) == alg.meet(s, t) && alg.leq(s, zero);
      });
    r.add("skeleton-sublattice", w);
  }
  r.add("skeleton-distributive", first_failing_triple_in(sk, [&](Elem x, Elem y, Elem z) {
          return alg.meet(x, alg.join(y, z)) == alg.join(alg.meet(x, y), alg.meet(x, z));
        }));
  {
    const auto plus = positive_cone(alg);
    Witness w;
    if (plus.size() != sk.size() || p.blocks.size() != sk.size()) w = std::vector<Elem>{zero};
    if (!w)
      w = first_failing_in(sk, [&](Elem s) { return std::binary_search(plus.begin(), plus.end(), alg.neg(s)); });
    if (!w)
      w = first_failing_pair_in(sk, [&](Elem s, Elem t) {
        return alg.leq(s, t) == alg.leq(alg.neg(t), alg.neg(s)) &&
               alg.neg(alg.join(s, t)) == alg.meet(alg.neg(s), alg.neg(t));
      });
    r.add("skeleton-dual-to-positive-cone", w);
  }
  return r;
}

Report block_equivalence_compatibility(const FiniteInRL& alg, const Partition& p) {
  const std::size_t n = alg.size();
  Report r;
  const std::vector<std::string> labels{"x", "x2", "y"};
  r.add("compatible-with-fusion", first_failing_triple(n, [&](Elem x, Elem x2, Elem y) {
          return !p.same_block(x, x2) || p.same_block(alg.fusion(x, y), alg.fusion(x2, y));
        }), labels);
  r.add("compatible-with-neg", first_failing_pair(n, [&](Elem x, Elem x2) {
          return !p.same_block(x, x2) || p.same_block(alg.neg(x), alg.neg(x2));
        }), {"x", "x2"});
  r.add("compatible-with-join", first_failing_triple(n, [&](Elem x, Elem x2, Elem y) {
          return !p.same_block(x, x2) || p.same_block(alg.join(y, x), alg.join(y, x2));
        }), labels);
  return r;
}

}  // namespace inrl
