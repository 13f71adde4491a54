#include "inrl/gluing.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>

#include "inrl/axioms.hpp"
#include "inrl/errors.hpp"

namespace inrl {

namespace {

std::optional<Elem> apply(const std::map<Elem, Elem>& m, Elem x) {
  const auto it = m.find(x);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

std::map<Elem, Elem> inverse(const std::map<Elem, Elem>& m) {
  std::map<Elem, Elem> out;
  for (const auto& [x, y] : m) out.emplace(y, x);
  return out;
}

const Witness failed_whole = std::vector<Elem>{};

}  // namespace

GluingSpec resolve(FiniteInRL lower, FiniteInRL upper, const NamedGluing& named) {
  auto lookup = [](const FiniteInRL& alg, const std::string& name, const char* side) {
    const auto e = alg.find(name);
    if (!e) throw GluingError("unknown " + std::string(side) + " element '" + name + "'");
    return *e;
  };
  const Elem a = lookup(lower, named.a, "lower");
  const Elem b = lookup(upper, named.b, "upper");
  std::map<Elem, Elem> phi;
  for (const auto& [x, y] : named.phi)
    if (!phi.emplace(lookup(lower, x, "lower"), lookup(upper, y, "upper")).second)
      throw GluingError("phi maps '" + x + "' twice");
  return GluingSpec{std::move(lower), std::move(upper), a, b, std::move(phi)};
}

NamedGluing names_of(const GluingSpec& spec) {
  NamedGluing out{spec.lower.name(spec.a), spec.upper.name(spec.b), {}};
  for (const auto& [x, y] : spec.phi) out.phi.emplace_back(spec.lower.name(x), spec.upper.name(y));
  return out;
}

Report validate_gluing(const GluingSpec& spec) {
  const FiniteInRL& A = spec.lower;
  const FiniteInRL& B = spec.upper;
  const Elem a = spec.a;
  const Elem b = spec.b;
  Report r;

  r.add("lower-is-member", is_member(A) ? Witness{} : failed_whole);
  r.add("upper-is-member", is_member(B) ? Witness{} : failed_whole);
  r.add("names-disjoint", first_failing(A.size(), [&](Elem x) { return !B.find(A.name(x)); }));

  const bool a_ok = a < A.size();
  const bool b_ok = b < B.size();
  r.add("a-in-negative-cone", a_ok && A.leq(a, A.one()) ? Witness{} : Witness{std::vector<Elem>{a}}, {"a"});
  r.add("a-not-below-zero", a_ok && !A.leq(a, A.zero()) ? Witness{} : Witness{std::vector<Elem>{a}}, {"a"});
  r.add("b-in-negative-cone", b_ok && B.leq(b, B.one()) ? Witness{} : Witness{std::vector<Elem>{b}}, {"b"});

  {
    Elem top = 0;
    for (Elem y = 0; y < B.size(); ++y) top = B.join(top, y);
    const Elem bottom = B.neg(top);
    r.add("upper-bounded", first_failing(B.size(), [&](Elem y) {
            return B.leq(bottom, y) && B.leq(y, top);
          }));
  }
  if (!a_ok || !b_ok) {
    for (const char* name : {"phi-domain", "phi-codomain", "phi-injective", "phi-preserves-fusion",
                             "phi-preserves-join", "zero-of-b"})
      r.add(name, failed_whole);
    return r;
  }

  std::vector<Elem> domain, codomain;
  for (Elem x = 0; x < A.size(); ++x)
    if (A.mleq(a, x)) domain.push_back(x);
  for (Elem y = 0; y < B.size(); ++y)
    if (B.mleq(y, b)) codomain.push_back(y);

  r.add("phi-domain", first_failing(A.size(), [&](Elem x) {
          return spec.phi.contains(x) == std::binary_search(domain.begin(), domain.end(), x);
        }));
  {
    std::set<Elem> image;
    for (const auto& [x, y] : spec.phi) image.insert(y);
    r.add("phi-codomain", first_failing(B.size(), [&](Elem y) {
            return image.contains(y) == std::binary_search(codomain.begin(), codomain.end(), y);
          }), {"y"});
  }
  r.add("phi-injective", first_failing_pair_in(domain, [&](Elem x, Elem y) {
          const auto px = apply(spec.phi, x), py = apply(spec.phi, y);
          return x == y || !px || !py || *px != *py;
        }));
  r.add("phi-preserves-fusion", first_failing_pair_in(domain, [&](Elem x, Elem y) {
          const auto px = apply(spec.phi, x), py = apply(spec.phi, y);
          const auto pxy = apply(spec.phi, A.fusion(x, y));
          return px && py && pxy && *pxy == B.fusion(*px, *py);
        }));
  r.add("phi-preserves-join", first_failing_pair_in(domain, [&](Elem x, Elem y) {
          const auto px = apply(spec.phi, x), py = apply(spec.phi, y);
          const auto pxy = apply(spec.phi, A.join(x, y));
          return px && py && pxy && *pxy == B.join(*px, *py);
        }));
  {
    const auto img = apply(spec.phi, A.join(a, A.zero()));
    r.add("zero-of-b", img && *img == B.block_bottom(b) ? Witness{} : Witness{std::vector<Elem>{b}}, {"b"});
  }
  return r;
}

std::string format_gluing_witness(const Check& check, const GluingSpec& spec) {
  static const std::set<std::string> upper_side{"b-in-negative-cone", "upper-bounded", "phi-codomain",
                                                "zero-of-b"};
  const FiniteInRL& side = upper_side.contains(check.name) ? spec.upper : spec.lower;
  for (Elem e : check.witness)
    if (e >= side.size()) return {};
  return format_witness(check, side);
}

GluedAlgebra glue(const GluingSpec& spec) {
  const Report report = validate_gluing(spec);
  if (const Check* c = report.first_failure()) {
    std::string msg = "gluing ingredient '" + c->name + "' fails";
    if (const auto w = format_gluing_witness(*c, spec); !w.empty()) msg += ": " + w;
    throw GluingError(msg);
  }
  const FiniteInRL& A = spec.lower;
  const FiniteInRL& B = spec.upper;
  const std::size_t na = A.size();
  const std::size_t nb = B.size();
  const std::size_t n = na + nb;
  const Elem a = spec.a;
  const Elem b = spec.b;
  const Elem neg_a = A.neg(a);
  const auto phi_inv = inverse(spec.phi);
  const auto up = [&](Elem y) { return static_cast<Elem>(na + y); };
  const auto phi = [&](Elem x) { return spec.phi.at(x); };
  const auto pull = [&](Elem y) { return phi_inv.at(B.fusion(y, b)); };  // phi^-1(y . b)

  std::vector<Elem> join(n * n), fusion(n * n), neg(n);
  std::vector<std::string> names;
  std::vector<Provenance> prov;
  for (Elem x = 0; x < na; ++x) {
    names.push_back(A.name(x));
    prov.push_back({Side::lower, x});
    neg[x] = A.neg(x);
  }
  for (Elem y = 0; y < nb; ++y) {
    names.push_back(B.name(y));
    prov.push_back({Side::upper, y});
    neg[up(y)] = up(B.neg(y));
  }
  auto set = [&](std::vector<Elem>& t, Elem i, Elem j, Elem v) {
    t[i * n + j] = v;
    t[j * n + i] = v;
  };
  for (Elem x = 0; x < na; ++x)
    for (Elem y = 0; y < na; ++y) {
      join[x * n + y] = A.join(x, y);
      fusion[x * n + y] = A.fusion(x, y);
    }
  for (Elem x = 0; x < nb; ++x)
    for (Elem y = 0; y < nb; ++y) {
      join[up(x) * n + up(y)] = up(B.join(x, y));
      fusion[up(x) * n + up(y)] = up(B.fusion(x, y));
    }
  for (Elem x = 0; x < na; ++x)
    for (Elem y = 0; y < nb; ++y) {
      set(fusion, x, up(y), A.fusion(x, pull(y)));
      if (A.leq(x, neg_a))
        set(join, x, up(y), up(B.join(phi(A.join(x, a)), y)));
      else
        set(join, x, up(y), A.join(x, pull(y)));
    }

  GluedAlgebra g{FiniteInRL(std::move(names), std::move(join), std::move(fusion), std::move(neg),
                            up(B.one())),
                 std::move(prov), nb};
  if (const Check* c = validate(g.result).first_failure())
    throw InternalError("glued algebra violates '" + c->name + "'");
  return g;
}

Report verify_glued(const GluingSpec& spec, const GluedAlgebra& glued) {
  const FiniteInRL& A = spec.lower;
  const FiniteInRL& B = spec.upper;
  const FiniteInRL& C = glued.result;
  const std::size_t na = A.size();
  const std::size_t n = C.size();
  const Elem a = spec.a;
  const Elem b = spec.b;
  const Elem neg_a = A.neg(a);
  const auto phi_inv = inverse(spec.phi);
  const auto is_upper = [&](Elem z) { return z >= na; };
  const auto local = [&](Elem z) { return static_cast<Elem>(is_upper(z) ? z - na : z); };
  Report r;

  r.add("size-additive", n == na + B.size() ? Witness{} : failed_whole);
  r.add("unit-and-zero-from-upper",
        C.one() == glued.from_upper(B.one()) && C.zero() == glued.from_upper(B.zero()) ? Witness{}
                                                                                       : failed_whole);
  r.add("neg-restricts", first_failing(n, [&](Elem z) {
          if (is_upper(z)) return C.neg(z) == glued.from_upper(B.neg(local(z)));
          return C.neg(z) == A.neg(z);
        }));
  r.add("order-characterization", first_failing_pair(n, [&](Elem x, Elem y) {
          bool expected;
          if (!is_upper(x) && !is_upper(y)) {
            expected = A.leq(x, y);
          } else if (is_upper(x) && is_upper(y)) {
            expected = B.leq(local(x), local(y));
          } else if (!is_upper(x)) {
            expected = A.leq(x, neg_a) && B.leq(spec.phi.at(A.join(x, a)), local(y));
          } else {
            expected = A.leq(phi_inv.at(B.fusion(local(x), b)), y) && !A.leq(y, neg_a);
          }
          return C.leq(x, y) == expected;
        }));
  r.add("fusion-below-neg-a", first_failing_pair(n, [&](Elem x, Elem y) {
          if (!is_upper(x) || is_upper(y)) return true;
          const Elem p = phi_inv.at(B.fusion(local(x), b));
          return A.leq(A.fusion(p, y), neg_a) == A.leq(y, neg_a);
        }));
  r.add("zero-iff-lower-zero", first_failing(na, [&](Elem z) {
          return C.leq(z, C.zero()) == A.leq(z, A.zero());
        }), {"z"});
  return r;
}

Report verify_cone_lemmas(const FiniteInRL& alg, Elem a) {
  const std::size_t n = alg.size();
  const Elem neg_a = alg.neg(a);
  const Elem bottom = alg.block_bottom(a);
  const Elem top = alg.block_top(a);
  Report r;
  r.add("absorption", first_failing(n, [&](Elem x) {
          return !alg.leq(x, neg_a) || alg.meet(alg.join(x, a), neg_a) == alg.join(x, bottom);
        }));
  r.add("absorption-upset", first_failing(n, [&](Elem x) {
          return !alg.mleq(a, x) || (alg.meet(alg.join(alg.neg(x), a), neg_a) == alg.neg(x) &&
                                     alg.join(alg.meet(x, neg_a), a) == x);
        }));
  r.add("fusion-preservation", first_failing_pair(n, [&](Elem x, Elem y) {
          return !alg.leq(x, top) || !alg.leq(y, top) ||
                 alg.join(alg.fusion(x, y), a) == alg.fusion(alg.join(x, a), alg.join(y, a));
        }));
  r.add("fusion-preservation-upset", first_failing_pair(n, [&](Elem x, Elem y) {
          return !alg.mleq(a, x) || !alg.mleq(a, y) ||
                 alg.meet(alg.fusion(x, y), neg_a) == alg.fusion(alg.meet(x, neg_a), alg.meet(y, neg_a));
        }));
  return r;
}

}  // namespace inrl
