#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace inrl {

/// Index of an element within one algebra, in [0, size()).
using Elem = std::uint32_t;

/// A finite algebra in the InRL-semiring signature: join, fusion, a single
/// negation and the fusion unit. Meet, residual and zero are derived on
/// demand and never stored.
///
/// Construction checks only the shape of the data (square tables, entries
/// in range, distinct names). Whether the axioms hold is a separate
/// question answered by `validate`.
class FiniteInRL {
 public:
  /// Tables are row-major n*n. An empty `names` yields "e0", "e1", ...
  FiniteInRL(std::vector<std::string> names, std::vector<Elem> join, std::vector<Elem> fusion,
             std::vector<Elem> neg, Elem one);

  std::size_t size() const noexcept { return n_; }

  Elem join(Elem x, Elem y) const noexcept { return join_[x * n_ + y]; }
  Elem fusion(Elem x, Elem y) const noexcept { return fusion_[x * n_ + y]; }
  Elem neg(Elem x) const noexcept { return neg_[x]; }
  Elem one() const noexcept { return one_; }
  Elem zero() const noexcept { return neg_[one_]; }

  Elem meet(Elem x, Elem y) const noexcept { return neg(join(neg(x), neg(y))); }
  /// x -> y, the residual of fusion.
  Elem residual(Elem x, Elem y) const noexcept { return neg(fusion(neg(y), x)); }

  /// Lattice order: x <= y iff x v y = y.
  bool leq(Elem x, Elem y) const noexcept { return join(x, y) == y; }
  /// Monoidal order: x [= y iff x . y = x.
  bool mleq(Elem x, Elem y) const noexcept { return fusion(x, y) == x; }

  /// 0_x and 1_x, the bounds of the Boolean block of x.
  Elem block_bottom(Elem x) const noexcept { return meet(x, neg(x)); }
  Elem block_top(Elem x) const noexcept { return join(x, neg(x)); }

  const std::string& name(Elem x) const noexcept { return names_[x]; }
  std::span<const std::string> names() const noexcept { return names_; }
  std::optional<Elem> find(std::string_view name) const;
  /// Like `find` but throws StructuralError for an unknown name.
  Elem at(std::string_view name) const;

  std::span<const Elem> join_table() const noexcept { return join_; }
  std::span<const Elem> fusion_table() const noexcept { return fusion_; }
  std::span<const Elem> neg_table() const noexcept { return neg_; }

  /// Same algebra with elements renamed; `names.size()` must equal size().
  FiniteInRL renamed(std::vector<std::string> names) const;

  /// Image under a bijection `perm` (old index -> new index).
  FiniteInRL relabeled(std::span<const Elem> perm) const;

  friend bool operator==(const FiniteInRL&, const FiniteInRL&) = default;

 private:
  std::size_t n_;
  std::vector<std::string> names_;
  std::vector<Elem> join_;
  std::vector<Elem> fusion_;
  std::vector<Elem> neg_;
  Elem one_;
};

/// All elements 0..n-1 of an algebra, for range-for loops.
std::vector<Elem> elements(const FiniteInRL& alg);

/// Default element names "e0", "e1", ...
std::vector<std::string> default_names(std::size_t n);

}  // namespace inrl
