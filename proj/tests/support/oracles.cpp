#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

#include "inrl/axioms.hpp"
#include "inrl/generators.hpp"
#include "inrl/isomorphism.hpp"

namespace oracle {

std::vector<char> order_from_covers(std::size_t n, const std::vector<std::pair<Elem, Elem>>& covers) {
  std::vector<char> r(n * n, 0);
  for (Elem x = 0; x < n; ++x) r[x * n + x] = 1;
  for (auto [x, y] : covers) r[x * n + y] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z)
          if (r[x * n + y] && r[y * n + z] && !r[x * n + z]) {
            r[x * n + z] = 1;
            changed = true;
          }
  }
  return r;
}

std::vector<Elem> closure(const FiniteInRL& alg, const std::vector<Elem>& seeds) {
  std::vector<char> in(alg.size(), 0);
  for (Elem s : seeds) in[s] = 1;
  in[alg.one()] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem x = 0; x < alg.size(); ++x) {
      if (!in[x]) continue;
      for (Elem y = 0; y < alg.size(); ++y) {
        if (!in[y]) continue;
        for (Elem z : {alg.neg(x), alg.join(x, y), alg.fusion(x, y)})
          if (!in[z]) in[z] = changed = true;
      }
    }
  }
  std::vector<Elem> out;
  for (Elem x = 0; x < alg.size(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

std::vector<std::vector<Elem>> filters(const FiniteInRL& alg) {
  std::vector<Elem> minus;
  for (Elem x = 0; x < alg.size(); ++x)
    if (alg.join(x, alg.one()) == alg.one()) minus.push_back(x);
  const std::size_t m = minus.size();
  std::vector<std::vector<Elem>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    std::vector<Elem> s;
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1U) s.push_back(minus[i]);
    auto has = [&](Elem x) { return std::find(s.begin(), s.end(), x) != s.end(); };
    bool ok = true;
    for (Elem x : s) {
      for (Elem y : minus)
        if (alg.join(x, y) == y && !has(y)) ok = false;
      for (Elem y : s)
        if (!has(alg.meet(x, y))) ok = false;
    }
    if (ok) out.push_back(s);
  }
  return out;
}

std::vector<std::size_t> normalize(const std::vector<std::size_t>& class_of) {
  std::map<std::size_t, std::size_t> relabel;
  std::vector<std::size_t> out;
  for (std::size_t c : class_of) {
    auto it = relabel.try_emplace(c, relabel.size()).first;
    out.push_back(it->second);
  }
  return out;
}

std::vector<std::vector<std::size_t>> congruences(const FiniteInRL& alg) {
  const std::size_t n = alg.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> rgs(n, 0);
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t used) {
    if (i == n) {
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
          if (rgs[x] != rgs[y]) continue;
          if (rgs[alg.neg(x)] != rgs[alg.neg(y)]) return;
          for (Elem z = 0; z < n; ++z)
            if (rgs[alg.join(x, z)] != rgs[alg.join(y, z)] || rgs[alg.fusion(x, z)] != rgs[alg.fusion(y, z)])
              return;
        }
      out.push_back(rgs);
      return;
    }
    for (std::size_t c = 0; c <= used && c < n; ++c) {
      rgs[i] = c;
      go(i + 1, std::max(used, c + 1));
    }
  };
  if (n > 0) {
    rgs[0] = 0;
    go(1, 1);
  }
  return out;
}

std::vector<FiniteInRL> enumerate(std::size_t n) {
  std::vector<std::pair<Elem, Elem>> off;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y) off.emplace_back(x, y);

  // Every commutative idempotent table, one cell value per unordered pair.
  auto all_tables = [&](const std::function<bool(const std::vector<Elem>&)>& keep) {
    std::vector<std::vector<Elem>> out;
    std::vector<Elem> t(n * n);
    for (Elem x = 0; x < n; ++x) t[x * n + x] = x;
    std::function<void(std::size_t)> go = [&](std::size_t k) {
      if (k == off.size()) {
        if (keep(t)) out.push_back(t);
        return;
      }
      for (Elem v = 0; v < n; ++v) {
        t[off[k].first * n + off[k].second] = t[off[k].second * n + off[k].first] = v;
        go(k + 1);
      }
    };
    go(0);
    return out;
  };
  auto associative = [&](const std::vector<Elem>& t) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z)
          if (t[t[x * n + y] * n + z] != t[x * n + t[y * n + z]]) return false;
    return true;
  };
  const auto semilattices = all_tables(associative);

  std::vector<std::vector<Elem>> involutions;
  std::vector<Elem> perm(n);
  for (Elem x = 0; x < n; ++x) perm[x] = x;
  do {
    bool inv = true;
    for (Elem x = 0; x < n; ++x) inv = inv && perm[perm[x]] == x;
    if (inv) involutions.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<FiniteInRL> found;
  for (const auto& neg : involutions)
    for (Elem unit = 0; unit < n; ++unit)
      for (const auto& fusion : semilattices) {
        bool unital = true;
        for (Elem x = 0; x < n; ++x) unital = unital && fusion[unit * n + x] == x;
        if (!unital) continue;
        for (const auto& join : semilattices) {
          FiniteInRL alg({}, join, fusion, neg, unit);
          if (!inrl::is_member(alg)) continue;
          const bool fresh = std::none_of(found.begin(), found.end(),
                                          [&](const FiniteInRL& f) { return inrl::isomorphic(f, alg); });
          if (fresh) found.push_back(alg);
        }
      }
  return found;
}

std::vector<inrl::GluingSpec> gluing_specs(const FiniteInRL& lower, const FiniteInRL& upper) {
  std::vector<inrl::GluingSpec> out;
  for (Elem a = 0; a < lower.size(); ++a) {
    if (!lower.leq(a, lower.one()) || lower.leq(a, lower.zero())) continue;
    std::vector<Elem> dom;
    for (Elem x = 0; x < lower.size(); ++x)
      if (lower.fusion(a, x) == a) dom.push_back(x);
    for (Elem b = 0; b < upper.size(); ++b) {
      if (!upper.leq(b, upper.one())) continue;
      std::vector<Elem> cod;
      for (Elem y = 0; y < upper.size(); ++y)
        if (upper.fusion(y, b) == y) cod.push_back(y);
      if (cod.size() != dom.size()) continue;
      do {
        inrl::GluingSpec s{lower, upper, a, b, {}};
        for (std::size_t i = 0; i < dom.size(); ++i) s.phi[dom[i]] = cod[i];
        if (inrl::validate_gluing(s).ok()) out.push_back(std::move(s));
      } while (std::next_permutation(cod.begin(), cod.end()));
    }
  }
  return out;
}

std::vector<std::vector<FiniteInRL>> enumerate_by_gluing(std::size_t max_size) {
  std::vector<std::vector<FiniteInRL>> by_size(max_size + 1);
  auto add = [&](const FiniteInRL& alg) {
    auto& bucket = by_size[alg.size()];
    if (std::none_of(bucket.begin(), bucket.end(), [&](const FiniteInRL& f) { return inrl::isomorphic(f, alg); }))
      bucket.push_back(alg.renamed(inrl::default_names(alg.size())));
  };
  auto tagged = [](const FiniteInRL& alg, const std::string& tag) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < alg.size(); ++i) names.push_back(tag + std::to_string(i));
    return alg.renamed(std::move(names));
  };
  for (std::size_t n = 1; n <= max_size; ++n) {
    if ((n & (n - 1)) == 0) add(inrl::boolean_algebra(static_cast<std::size_t>(std::countr_zero(n))));
    for (std::size_t k = 2; k + 1 <= n; ++k)
      for (const auto& lower : by_size[k])
        for (const auto& upper : by_size[n - k])
          for (const auto& spec : gluing_specs(tagged(lower, "L"), tagged(upper, "U")))
            add(inrl::glue(spec).result);
  }
  return by_size;
}

}  // namespace oracle
