#include "inrl/bit_matrix.hpp"

#include <bit>

namespace inrl {

BitMatrix::BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

void BitMatrix::set(std::size_t i, std::size_t j, bool value) noexcept {
  auto& word = bits_[i * words_ + (j >> 6)];
  const std::uint64_t mask = std::uint64_t{1} << (j & 63);
  if (value)
    word |= mask;
  else
    word &= ~mask;
}

std::size_t BitMatrix::row_count(std::size_t i) const noexcept {
  std::size_t total = 0;
  for (auto w : row(i)) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BitMatrix::count() const noexcept {
  std::size_t total = 0;
  for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

void BitMatrix::transitive_closure() {
  for (std::size_t k = 0; k < n_; ++k) {
    const std::uint64_t* rk = bits_.data() + k * words_;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!test(i, k)) continue;
      std::uint64_t* ri = bits_.data() + i * words_;
      for (std::size_t w = 0; w < words_; ++w) ri[w] |= rk[w];
    }
  }
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (test(i, j)) t.set(j, i);
  return t;
}

BitMatrix BitMatrix::unite(const BitMatrix& other) const {
  BitMatrix u = *this;
  for (std::size_t w = 0; w < bits_.size(); ++w) u.bits_[w] |= other.bits_[w];
  return u;
}

BitMatrix BitMatrix::covers() const {
  BitMatrix strict = *this;
  for (std::size_t i = 0; i < n_; ++i) strict.set(i, i, false);
  BitMatrix result = strict;
  for (std::size_t i = 0; i < n_; ++i) {
    std::uint64_t* out = result.bits_.data() + i * words_;
    for (std::size_t k = 0; k < n_; ++k) {
      if (!strict.test(i, k)) continue;
      const std::uint64_t* above_k = strict.bits_.data() + k * words_;
      for (std::size_t w = 0; w < words_; ++w) out[w] &= ~above_k[w];
    }
  }
  return result;
}

bool BitMatrix::is_reflexive() const noexcept {
  for (std::size_t i = 0; i < n_; ++i)
    if (!test(i, i)) return false;
  return true;
}

bool BitMatrix::is_symmetric() const noexcept {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (test(i, j) != test(j, i)) return false;
  return true;
}

bool BitMatrix::is_antisymmetric() const noexcept {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (test(i, j) && test(j, i)) return false;
  return true;
}

bool BitMatrix::is_transitive() const {
  BitMatrix closed = *this;
  closed.transitive_closure();
  return closed == *this;
}

bool BitMatrix::subset_of(const BitMatrix& other) const noexcept {
  if (other.n_ != n_) return false;
  for (std::size_t w = 0; w < bits_.size(); ++w)
    if (bits_[w] & ~other.bits_[w]) return false;
  return true;
}

}  // namespace inrl
