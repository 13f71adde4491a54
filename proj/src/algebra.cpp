#include "inrl/algebra.hpp"

#include <numeric>
#include <unordered_set>

#include "inrl/errors.hpp"

namespace inrl {

namespace {

void check_table(std::string_view label, const std::vector<Elem>& table, std::size_t expected,
                 std::size_t n) {
  if (table.size() != expected)
    throw StructuralError(std::string(label) + " table has " + std::to_string(table.size()) +
                          " entries, expected " + std::to_string(expected));
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] >= n)
      throw StructuralError(std::string(label) + " entry " + std::to_string(i) + " is out of range");
}

}  // namespace

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

FiniteInRL::FiniteInRL(std::vector<std::string> names, std::vector<Elem> join,
                       std::vector<Elem> fusion, std::vector<Elem> neg, Elem one)
    : n_(neg.size()),
      names_(std::move(names)),
      join_(std::move(join)),
      fusion_(std::move(fusion)),
      neg_(std::move(neg)),
      one_(one) {
  if (n_ == 0) throw StructuralError("an algebra needs at least one element");
  if (names_.empty()) names_ = default_names(n_);
  if (names_.size() != n_)
    throw StructuralError("expected " + std::to_string(n_) + " element names, got " +
                          std::to_string(names_.size()));
  std::unordered_set<std::string_view> seen;
  for (const auto& s : names_) {
    if (s.empty()) throw StructuralError("empty element name");
    if (!seen.insert(s).second) throw StructuralError("duplicate element name '" + s + "'");
  }
  check_table("join", join_, n_ * n_, n_);
  check_table("fusion", fusion_, n_ * n_, n_);
  check_table("neg", neg_, n_, n_);
  if (one_ >= n_) throw StructuralError("unit element is out of range");
}

std::optional<Elem> FiniteInRL::find(std::string_view name) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (names_[i] == name) return static_cast<Elem>(i);
  return std::nullopt;
}

Elem FiniteInRL::at(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw StructuralError("unknown element '" + std::string(name) + "'");
}

FiniteInRL FiniteInRL::renamed(std::vector<std::string> names) const {
  return FiniteInRL(std::move(names), join_, fusion_, neg_, one_);
}

FiniteInRL FiniteInRL::relabeled(std::span<const Elem> perm) const {
  if (perm.size() != n_) throw StructuralError("relabeling has the wrong length");
  std::vector<bool> hit(n_, false);
  for (auto p : perm) {
    if (p >= n_ || hit[p]) throw StructuralError("relabeling is not a bijection");
    hit[p] = true;
  }
  std::vector<std::string> names(n_);
  std::vector<Elem> join(n_ * n_), fusion(n_ * n_), neg(n_);
  for (std::size_t x = 0; x < n_; ++x) {
    names[perm[x]] = names_[x];
    neg[perm[x]] = perm[neg_[x]];
    for (std::size_t y = 0; y < n_; ++y) {
      join[perm[x] * n_ + perm[y]] = perm[join_[x * n_ + y]];
      fusion[perm[x] * n_ + perm[y]] = perm[fusion_[x * n_ + y]];
    }
  }
  return FiniteInRL(std::move(names), std::move(join), std::move(fusion), std::move(neg), perm[one_]);
}

std::vector<Elem> elements(const FiniteInRL& alg) {
  std::vector<Elem> out(alg.size());
  std::iota(out.begin(), out.end(), Elem{0});
  return out;
}

}  // namespace inrl
