#include "inrl/decomposition.hpp"

#include <algorithm>
#include <limits>

#include "inrl/axioms.hpp"
#include "inrl/derived.hpp"
#include "inrl/errors.hpp"
#include "inrl/isomorphism.hpp"
#include "inrl/partition.hpp"

namespace inrl {

std::vector<Elem> find_atoms(const FiniteInRL& alg) {
  const auto plus = positive_cone(alg);
  const Elem one = alg.one();
  std::vector<Elem> atoms;
  for (Elem c : plus) {
    if (c == one) continue;
    const bool covers_one = std::none_of(plus.begin(), plus.end(), [&](Elem d) {
      return d != one && d != c && alg.leq(d, c);
    });
    if (covers_one) atoms.push_back(c);
  }
  return atoms;
}

Elem complement_of_atom(const FiniteInRL& alg, Elem c) {
  const auto plus = positive_cone(alg);
  if (!std::binary_search(plus.begin(), plus.end(), c))
    throw DecompositionError("'" + alg.name(c) + "' is not in the positive cone");
  std::optional<Elem> found;
  for (Elem e : plus) {
    const bool splits = std::all_of(plus.begin(), plus.end(), [&](Elem x) {
      return alg.mleq(x, c) != alg.mleq(e, x);
    });
    if (!splits) continue;
    if (found) throw DecompositionError("complement of '" + alg.name(c) + "' is not unique");
    found = e;
  }
  if (!found) throw DecompositionError("no complement for '" + alg.name(c) + "'");
  return *found;
}

SplitResult split(const FiniteInRL& alg, Elem c) {
  const auto atoms = find_atoms(alg);
  if (!std::binary_search(atoms.begin(), atoms.end(), c))
    throw DecompositionError("'" + alg.name(c) + "' is not an atom of the positive cone");
  const Elem c_star = complement_of_atom(alg, c);
  const Elem neg_c_star = alg.neg(c_star);

  SplitResult s{c, c_star, {}, {}, GluingSpec{alg, alg, 0, 0, {}}};
  for (Elem x = 0; x < alg.size(); ++x) {
    if (alg.mleq(x, c)) s.lower_ids.push_back(x);
    if (alg.mleq(neg_c_star, x)) s.upper_ids.push_back(x);
  }
  constexpr Elem absent = std::numeric_limits<Elem>::max();
  std::vector<Elem> lower_pos(alg.size(), absent), upper_pos(alg.size(), absent);
  for (std::size_t i = 0; i < s.lower_ids.size(); ++i) lower_pos[s.lower_ids[i]] = static_cast<Elem>(i);
  for (std::size_t i = 0; i < s.upper_ids.size(); ++i) upper_pos[s.upper_ids[i]] = static_cast<Elem>(i);

  const Elem a = alg.fusion(c, neg_c_star);
  const Elem neg_a = alg.neg(a);
  const Elem b = alg.join(alg.meet(c, neg_a), neg_c_star);
  if (lower_pos[a] == absent || upper_pos[b] == absent)
    throw DecompositionError("a or b falls outside its factor");

  try {
    s.spec.lower = induced_algebra(alg, s.lower_ids, c);
    s.spec.upper = induced_algebra(alg, s.upper_ids, alg.one());
  } catch (const StructuralError& e) {
    throw DecompositionError(std::string("factor is not a subalgebra: ") + e.what());
  }
  s.spec.a = lower_pos[a];
  s.spec.b = upper_pos[b];
  for (Elem x : s.lower_ids) {
    if (!alg.mleq(a, x)) continue;
    const Elem y = alg.join(alg.meet(x, neg_a), neg_c_star);
    if (upper_pos[y] == absent) throw DecompositionError("phi leaves the upper factor");
    s.spec.phi.emplace(lower_pos[x], upper_pos[y]);
  }
  return s;
}

Report verify_split(const FiniteInRL& alg, const SplitResult& s) {
  const std::size_t n = alg.size();
  const Elem c = s.c;
  const Elem neg_c_star = alg.neg(s.c_star);
  const Elem a = s.lower_ids.at(s.spec.a);
  const Elem b = s.upper_ids.at(s.spec.b);
  const Elem neg_a = alg.neg(a);
  const auto in = [](const std::vector<Elem>& v, Elem x) {
    return std::binary_search(v.begin(), v.end(), x);
  };
  const auto phi = [&](Elem x) { return alg.join(alg.meet(x, neg_a), neg_c_star); };
  const auto phi_inv = [&](Elem y) { return alg.fusion(y, c); };
  Report r;

  r.add("carriers-partition", first_failing(n, [&](Elem x) {
          return in(s.lower_ids, x) != in(s.upper_ids, x);
        }));
  r.add("upper-iff-not-below-c", first_failing(n, [&](Elem x) {
          return alg.mleq(neg_c_star, x) == !alg.mleq(x, c);
        }));
  r.add("sides-are-members",
        is_member(s.spec.lower) && is_member(s.spec.upper) ? Witness{} : Witness{std::vector<Elem>{c}},
        {"c"});
  r.add("a-in-lower-negative-cone", alg.leq(a, c) ? Witness{} : Witness{std::vector<Elem>{a}}, {"a"});
  r.add("a-not-below-lower-zero",
        !alg.leq(a, alg.neg(c)) ? Witness{} : Witness{std::vector<Elem>{a}}, {"a"});
  r.add("b-in-negative-cone", alg.leq(b, alg.one()) ? Witness{} : Witness{std::vector<Elem>{b}}, {"b"});
  r.add("c-times-zero", alg.fusion(c, alg.zero()) == alg.join(alg.neg(c), a)
                            ? Witness{}
                            : Witness{std::vector<Elem>{c}},
        {"c"});
  r.add("zero-below-b", alg.leq(alg.zero(), b) ? Witness{} : Witness{std::vector<Elem>{b}}, {"b"});
  r.add("phi-of-y-times-c", first_failing_in(s.upper_ids, [&](Elem y) {
          return phi(alg.fusion(y, c)) == alg.fusion(y, b);
        }), {"y"});
  r.add("below-neg-a-iff-join-upper", first_failing_pair(n, [&](Elem x, Elem y) {
          if (!in(s.lower_ids, x) || !in(s.upper_ids, y)) return true;
          return alg.leq(x, neg_a) == in(s.upper_ids, alg.join(x, y));
        }));
  r.add("phi-inverse-left", first_failing(n, [&](Elem x) {
          return !(alg.mleq(a, x) && alg.mleq(x, c)) || phi_inv(phi(x)) == x;
        }));
  r.add("phi-inverse-right", first_failing(n, [&](Elem y) {
          return !(alg.mleq(neg_c_star, y) && alg.mleq(y, b)) || phi(phi_inv(y)) == y;
        }), {"y"});
  const bool spec_ok = validate_gluing(s.spec).ok();
  r.add("spec-valid", spec_ok ? Witness{} : Witness{std::vector<Elem>{c}}, {"c"});
  bool equal = false;
  if (spec_ok) {
    try {
      equal = equal_by_names(glue(s.spec).result, alg);
    } catch (const Error&) {
      equal = false;
    }
  }
  r.add("reglue-equals-input", equal ? Witness{} : Witness{std::vector<Elem>{c}}, {"c"});
  return r;
}

DecompositionTree make_leaf(FiniteInRL alg) {
  return std::make_shared<const DecompositionNode>(
      DecompositionNode{std::move(alg), std::nullopt, nullptr, nullptr});
}

DecompositionTree make_node(FiniteInRL alg, NamedGluing gluing, DecompositionTree lower,
                            DecompositionTree upper) {
  return std::make_shared<const DecompositionNode>(
      DecompositionNode{std::move(alg), std::move(gluing), std::move(lower), std::move(upper)});
}

DecompositionTree decompose(const FiniteInRL& alg) {
  if (!is_member(alg)) throw DecompositionError("input is not a member of the variety");
  if (is_boolean(alg)) return make_leaf(alg);
  const auto atoms = find_atoms(alg);
  if (atoms.empty()) throw DecompositionError("non-Boolean input without atoms");
  SplitResult s = split(alg, atoms.front());
  if (const Check* bad = verify_split(alg, s).first_failure())
    throw DecompositionError("split at '" + alg.name(s.c) + "' fails '" + bad->name + "'");
  auto lower = decompose(s.spec.lower);
  auto upper = decompose(s.spec.upper);
  return make_node(alg, names_of(s.spec), std::move(lower), std::move(upper));
}

namespace {

void collect(const DecompositionTree& t, std::vector<FiniteInRL>& out) {
  if (t->is_leaf()) {
    out.push_back(t->algebra);
    return;
  }
  collect(t->lower, out);
  collect(t->upper, out);
}

}  // namespace

std::vector<FiniteInRL> leaves(const DecompositionTree& tree) {
  std::vector<FiniteInRL> out;
  collect(tree, out);
  return out;
}

FiniteInRL reassemble(const DecompositionTree& tree) {
  if (tree->is_leaf()) return tree->algebra;
  GluingSpec spec = resolve(reassemble(tree->lower), reassemble(tree->upper), *tree->gluing);
  return glue(spec).result;
}

}  // namespace inrl
