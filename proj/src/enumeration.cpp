#include "inrl/enumeration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include "inrl/axioms.hpp"
#include "inrl/errors.hpp"

namespace inrl {

namespace {

struct Labeling {
  std::size_t n = 0;
  Elem unit = 0;
  std::optional<Elem> zero;  // absent when n is odd
  std::vector<std::pair<Elem, Elem>> pairs;
  std::vector<Elem> neg;
};

Labeling standard_labeling(std::size_t n) {
  Labeling l;
  l.n = n;
  l.neg.resize(n);
  l.neg[0] = n % 2 ? 0 : 1;
  Elem first = 1;
  if (n % 2 == 0) {
    l.zero = 1;
    l.neg[1] = 0;
    first = 2;
  }
  for (Elem x = first; x + 1 < n; x += 2) {
    l.pairs.emplace_back(x, x + 1);
    l.neg[x] = x + 1;
    l.neg[x + 1] = x;
  }
  return l;
}

std::vector<std::string> canonical_names(std::size_t n) {
  std::vector<std::string> names{"1"};
  if (n % 2 == 0) names.push_back("0");
  for (std::size_t k = 1; names.size() < n; ++k) {
    names.push_back("x" + std::to_string(k));
    names.push_back("-x" + std::to_string(k));
  }
  return names;
}

/// x <= y from fusion and negation alone.
bool derived_leq(std::span<const Elem> f, std::span<const Elem> neg, std::size_t n, Elem x, Elem y) {
  const Elem z = f[x * n + neg[y]];
  return f[z * n + neg[z]] == z;
}

/// Join and lattice order recovered from a complete fusion table, or
/// nothing if the recovered relation is not a lattice order.
std::optional<std::vector<Elem>> recover_join(std::span<const Elem> f, std::span<const Elem> neg,
                                              std::size_t n) {
  std::vector<char> leq(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) leq[x * n + y] = derived_leq(f, neg, n, x, y);
  for (Elem x = 0; x < n; ++x) {
    if (!leq[x * n + x]) return std::nullopt;
    for (Elem y = 0; y < n; ++y) {
      if (x != y && leq[x * n + y] && leq[y * n + x]) return std::nullopt;
      for (Elem z = 0; z < n; ++z)
        if (leq[x * n + y] && leq[y * n + z] && !leq[x * n + z]) return std::nullopt;
    }
  }
  std::vector<Elem> join(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      std::optional<Elem> least;
      for (Elem u = 0; u < n; ++u)
        if (leq[x * n + u] && leq[y * n + u] && (!least || leq[u * n + *least])) least = u;
      if (!least) return std::nullopt;
      for (Elem u = 0; u < n; ++u)
        if (leq[x * n + u] && leq[y * n + u] && !leq[*least * n + u]) return std::nullopt;
      join[x * n + y] = *least;
    }
  return join;
}

class Search {
 public:
  explicit Search(std::size_t n) : n_(n), lab_(standard_labeling(n)), f_(n * n, unset()) {
    for (Elem x = 0; x < n; ++x) {
      put(0, x, x);
      put(x, x, x);
    }
    for (const auto& [x, y] : lab_.pairs) cells_.emplace_back(x, y);
    pair_cells_ = cells_.size();
    for (Elem x = 1; x < n; ++x)
      for (Elem y = x + 1; y < n; ++y)
        if (f_[x * n + y] == unset() && lab_.neg[x] != y) cells_.emplace_back(x, y);
  }

  std::map<std::vector<Elem>, FiniteInRL> run() {
    descend(0);
    return std::move(found_);
  }

 private:
  Elem unset() const { return static_cast<Elem>(n_); }
  Elem at(Elem x, Elem y) const { return f_[x * n_ + y]; }
  void put(Elem x, Elem y, Elem v) {
    f_[x * n_ + y] = v;
    f_[y * n_ + x] = v;
  }

  bool associative_so_far() const {
    const Elem u = unset();
    for (Elem p = 0; p < n_; ++p)
      for (Elem q = 0; q < n_; ++q) {
        const Elem s = at(p, q);
        if (s == u) continue;
        for (Elem r = 0; r < n_; ++r) {
          const Elem t = at(q, r);
          if (t == u) continue;
          const Elem left = at(s, r);
          const Elem right = at(p, t);
          if (left != u && right != u && left != right) return false;
        }
      }
    return true;
  }

  // 1 = holds, 0 = fails, -1 = not yet known.
  int leq_known(Elem x, Elem y) const {
    const Elem z = at(x, lab_.neg[y]);
    if (z == unset()) return -1;
    return at(z, lab_.neg[z]) == z ? 1 : 0;
  }

  bool order_consistent_so_far() const {
    for (Elem x = 0; x < n_; ++x) {
      if (leq_known(x, x) == 0) return false;
      for (Elem y = 0; y < n_; ++y) {
        const int xy = leq_known(x, y);
        if (xy != 1) continue;
        if (x != y && leq_known(y, x) == 1) return false;
        for (Elem z = 0; z < n_; ++z) {
          if (leq_known(y, z) == 1 && leq_known(x, z) == 0) return false;
          const Elem xz = at(x, z), yz = at(y, z);
          if (xz != unset() && yz != unset() && leq_known(xz, yz) == 0) return false;
        }
      }
    }
    return true;
  }

  void descend(std::size_t k) {
    if (k == cells_.size()) {
      leaf();
      return;
    }
    const auto [x, y] = cells_[k];
    for (Elem v = 0; v < n_; ++v) {
      put(x, y, v);
      if (associative_so_far() && (k + 1 < pair_cells_ || order_consistent_so_far())) descend(k + 1);
    }
    put(x, y, unset());
  }

  void leaf() {
    auto join = recover_join(f_, lab_.neg, n_);
    if (!join) return;
    FiniteInRL alg(canonical_names(n_), std::move(*join), f_, lab_.neg, 0);
    if (!is_member(alg)) return;
    FiniteInRL canon = canonical_form(alg);
    std::vector<Elem> key(canon.fusion_table().begin(), canon.fusion_table().end());
    found_.emplace(std::move(key), std::move(canon));
  }

  std::size_t n_;
  Labeling lab_;
  std::vector<Elem> f_;
  std::vector<std::pair<Elem, Elem>> cells_;
  std::size_t pair_cells_ = 0;
  std::map<std::vector<Elem>, FiniteInRL> found_;
};

}  // namespace

std::vector<FiniteInRL> Corpus::of_size(std::size_t k) const {
  std::vector<FiniteInRL> out;
  for (const auto& a : algebras)
    if (a.size() == k) out.push_back(a);
  return out;
}

FiniteInRL canonical_form(const FiniteInRL& alg) {
  const std::size_t n = alg.size();
  const Elem unit = alg.one();
  const Elem zero = alg.zero();
  if (alg.neg(unit) != zero || (n % 2 == 1) != (unit == zero))
    throw StructuralError("canonical form needs a member");
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem x = 0; x < n; ++x) {
    if (x == unit || x == zero) continue;
    const Elem y = alg.neg(x);
    if (y == x) throw StructuralError("canonical form needs a member");
    if (x < y) pairs.emplace_back(x, y);
  }
  const Labeling target = standard_labeling(n);
  const std::size_t p = pairs.size();

  std::vector<std::size_t> order(p);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Elem> perm(n), best_perm;
  std::vector<Elem> best, table(n * n);
  do {
    for (std::size_t flips = 0; flips < (std::size_t{1} << p); ++flips) {
      perm[unit] = target.unit;
      if (target.zero) perm[zero] = *target.zero;
      for (std::size_t k = 0; k < p; ++k) {
        auto [u, v] = pairs[order[k]];
        if ((flips >> k) & 1U) std::swap(u, v);
        perm[u] = target.pairs[k].first;
        perm[v] = target.pairs[k].second;
      }
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) table[perm[x] * n + perm[y]] = perm[alg.fusion(x, y)];
      if (best.empty() || table < best) {
        best = table;
        best_perm = perm;
      }
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return alg.relabeled(best_perm).renamed(canonical_names(n));
}

std::vector<FiniteInRL> enumerate_size(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw CapExceeded("enumeration size " + std::to_string(n) + " exceeds the cap of " + std::to_string(cap));
  if (n == 0) return {};
  std::vector<FiniteInRL> out;
  for (auto& [key, alg] : Search(n).run()) out.push_back(std::move(alg));
  return out;
}

Corpus enumerate_up_to_iso(std::size_t max_size, std::size_t cap) {
  if (max_size > cap)
    throw CapExceeded("enumeration size " + std::to_string(max_size) + " exceeds the cap of " +
                      std::to_string(cap));
  Corpus c;
  c.max_size = max_size;
  c.counts.assign(max_size + 1, 0);
  for (std::size_t k = 1; k <= max_size; ++k) {
    auto level = enumerate_size(k, cap);
    c.counts[k] = level.size();
    for (auto& a : level) c.algebras.push_back(std::move(a));
  }
  return c;
}

}  // namespace inrl
