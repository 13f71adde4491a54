#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "inrl/algebra.hpp"

namespace inrl {

/// Outcome of one named clause. On failure `witness` holds the first
/// counterexample tuple in lexicographic index order.
struct Check {
  std::string name;
  bool passed = true;
  std::vector<Elem> witness;
  /// Variable names for the witness; defaults to x, y, z, w, ...
  std::vector<std::string> labels;
};

using Witness = std::optional<std::vector<Elem>>;

class Report {
 public:
  Check& add(std::string name, Witness failure, std::vector<std::string> labels = {});
  void merge(const Report& other);

  bool ok() const noexcept;
  std::span<const Check> checks() const noexcept { return checks_; }
  const Check* find(std::string_view name) const noexcept;
  /// Throws std::out_of_range for an unknown clause.
  bool passed(std::string_view name) const;
  const Check* first_failure() const noexcept;
  std::vector<const Check*> failures() const;

 private:
  std::vector<Check> checks_;
};

/// Axiom verdicts for one algebra.
using AxiomReport = Report;

/// "x=a y=-b" using the element names of `alg`.
std::string format_witness(const Check& check, const FiniteInRL& alg);

// Lexicographically first tuple violating `holds`, by element index.

template <class Pred>
Witness first_failing(std::size_t n, Pred holds) {
  for (Elem x = 0; x < n; ++x)
    if (!holds(x)) return std::vector<Elem>{x};
  return std::nullopt;
}

template <class Pred>
Witness first_failing_pair(std::size_t n, Pred holds) {
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (!holds(x, y)) return std::vector<Elem>{x, y};
  return std::nullopt;
}

template <class Pred>
Witness first_failing_triple(std::size_t n, Pred holds) {
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (!holds(x, y, z)) return std::vector<Elem>{x, y, z};
  return std::nullopt;
}

/// Same search restricted to tuples drawn from `domain`, in its order.
template <class Pred>
Witness first_failing_in(std::span<const Elem> domain, Pred holds) {
  for (Elem x : domain)
    if (!holds(x)) return std::vector<Elem>{x};
  return std::nullopt;
}

template <class Pred>
Witness first_failing_pair_in(std::span<const Elem> domain, Pred holds) {
  for (Elem x : domain)
    for (Elem y : domain)
      if (!holds(x, y)) return std::vector<Elem>{x, y};
  return std::nullopt;
}

template <class Pred>
Witness first_failing_triple_in(std::span<const Elem> domain, Pred holds) {
  for (Elem x : domain)
    for (Elem y : domain)
      for (Elem z : domain)
        if (!holds(x, y, z)) return std::vector<Elem>{x, y, z};
  return std::nullopt;
}

}  // namespace inrl
