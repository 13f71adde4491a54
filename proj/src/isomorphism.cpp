#include "inrl/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace inrl {

namespace {

constexpr Elem unset = std::numeric_limits<Elem>::max();

using Signature = std::array<std::size_t, 7>;

std::vector<Signature> signatures(const FiniteInRL& alg) {
  const std::size_t n = alg.size();
  std::vector<std::size_t> bottom_count(n, 0);
  for (Elem x = 0; x < n; ++x) ++bottom_count[alg.block_bottom(x)];
  std::vector<Signature> out(n);
  for (Elem x = 0; x < n; ++x) {
    std::size_t below = 0, mbelow = 0;
    for (Elem y = 0; y < n; ++y) {
      below += alg.leq(y, x) ? 1 : 0;
      mbelow += alg.mleq(y, x) ? 1 : 0;
    }
    out[x] = {bottom_count[alg.block_bottom(x)],
              x == alg.one() ? 1U : 0U,
              x == alg.zero() ? 1U : 0U,
              alg.leq(alg.one(), x) ? 1U : 0U,
              alg.leq(x, alg.one()) ? 1U : 0U,
              below,
              mbelow};
  }
  return out;
}

struct Search {
  const FiniteInRL& a;
  const FiniteInRL& b;
  std::vector<Signature> sig_a;
  std::vector<Signature> sig_b;

  struct State {
    Bijection fwd;
    Bijection inv;
    std::vector<Elem> assigned;  // domain elements in assignment order
  };

  bool assign(State& s, Elem x, Elem y) const {
    if (s.fwd[x] != unset) return s.fwd[x] == y;
    if (s.inv[y] != unset || sig_a[x] != sig_b[y]) return false;
    s.fwd[x] = y;
    s.inv[y] = x;
    s.assigned.push_back(x);
    return true;
  }

  // Closes the partial map under the operations; fails on a conflict.
  bool propagate(State& s, std::size_t from) const {
    for (std::size_t i = from; i < s.assigned.size(); ++i) {
      const Elem x = s.assigned[i];
      const Elem y = s.fwd[x];
      if (!assign(s, a.neg(x), b.neg(y))) return false;
      for (std::size_t j = 0; j <= i; ++j) {
        const Elem z = s.assigned[j];
        const Elem w = s.fwd[z];
        if (!assign(s, a.join(x, z), b.join(y, w))) return false;
        if (!assign(s, a.fusion(x, z), b.fusion(y, w))) return false;
      }
    }
    return true;
  }

  bool extend(State& s, std::optional<Bijection>& out) const {
    auto next = std::find(s.fwd.begin(), s.fwd.end(), unset);
    if (next == s.fwd.end()) {
      out = s.fwd;
      return true;
    }
    const Elem x = static_cast<Elem>(next - s.fwd.begin());
    for (Elem y = 0; y < b.size(); ++y) {
      if (s.inv[y] != unset || sig_a[x] != sig_b[y]) continue;
      State t = s;
      const std::size_t from = t.assigned.size();
      if (assign(t, x, y) && propagate(t, from) && extend(t, out)) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<Bijection> find_isomorphism(const FiniteInRL& a, const FiniteInRL& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  Search search{a, b, signatures(a), signatures(b)};
  auto sorted_a = search.sig_a;
  auto sorted_b = search.sig_b;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return std::nullopt;

  Search::State s{Bijection(n, unset), Bijection(n, unset), {}};
  if (!search.assign(s, a.one(), b.one()) || !search.propagate(s, 0)) return std::nullopt;
  std::optional<Bijection> out;
  search.extend(s, out);
  if (out && !is_isomorphism(a, b, *out)) return std::nullopt;
  return out;
}

bool isomorphic(const FiniteInRL& a, const FiniteInRL& b) {
  return find_isomorphism(a, b).has_value();
}

bool is_isomorphism(const FiniteInRL& a, const FiniteInRL& b, std::span<const Elem> map) {
  const std::size_t n = a.size();
  if (b.size() != n || map.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (Elem y : map) {
    if (y >= n || hit[y]) return false;
    hit[y] = true;
  }
  if (map[a.one()] != b.one()) return false;
  for (Elem x = 0; x < n; ++x) {
    if (map[a.neg(x)] != b.neg(map[x])) return false;
    for (Elem y = 0; y < n; ++y)
      if (map[a.join(x, y)] != b.join(map[x], map[y]) ||
          map[a.fusion(x, y)] != b.fusion(map[x], map[y]))
        return false;
  }
  return true;
}

std::optional<Bijection> name_matching(const FiniteInRL& a, const FiniteInRL& b) {
  if (a.size() != b.size()) return std::nullopt;
  Bijection map(a.size());
  for (Elem x = 0; x < a.size(); ++x) {
    const auto y = b.find(a.name(x));
    if (!y) return std::nullopt;
    map[x] = *y;
  }
  return map;
}

bool equal_by_names(const FiniteInRL& a, const FiniteInRL& b) {
  const auto map = name_matching(a, b);
  return map && is_isomorphism(a, b, *map);
}

}  // namespace inrl
