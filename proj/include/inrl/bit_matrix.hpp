#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace inrl {

/// Square boolean relation stored as packed 64-bit rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n);

  static BitMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  bool test(std::size_t i, std::size_t j) const noexcept {
    return (bits_[i * words_ + (j >> 6)] >> (j & 63)) & 1U;
  }
  void set(std::size_t i, std::size_t j, bool value = true) noexcept;

  std::span<const std::uint64_t> row(std::size_t i) const noexcept {
    return {bits_.data() + i * words_, words_};
  }

  /// Number of set bits in row i.
  std::size_t row_count(std::size_t i) const noexcept;
  std::size_t count() const noexcept;

  /// Warshall closure, one OR of packed rows per (k, i).
  void transitive_closure();

  BitMatrix transpose() const;
  BitMatrix unite(const BitMatrix& other) const;

  /// Cover pairs of a partial order: i < j with nothing strictly between.
  BitMatrix covers() const;

  bool is_reflexive() const noexcept;
  bool is_symmetric() const noexcept;
  bool is_antisymmetric() const noexcept;
  bool is_transitive() const;
  bool is_partial_order() const { return is_reflexive() && is_antisymmetric() && is_transitive(); }
  bool is_equivalence() const { return is_reflexive() && is_symmetric() && is_transitive(); }

  bool subset_of(const BitMatrix& other) const noexcept;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace inrl
