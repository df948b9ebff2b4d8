/*
 * Copyright 2026 The permsum Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace permsum {

/// Dynamically sized bitset over 64-bit words. Bits past size() stay zero.
class BitSet {
 public:
  BitSet() = default;
  explicit BitSet(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }
  std::span<std::uint64_t> words() { return words_; }
  std::span<const std::uint64_t> words() const { return words_; }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  void set_all() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    if (bits_ % 64 != 0 && !words_.empty()) {
      words_.back() = (std::uint64_t{1} << (bits_ % 64)) - 1;
    }
  }

  bool any() const {
    for (auto w : words_) {
      if (w != 0) return true;
    }
    return false;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Index of the lowest set bit, or size() when empty.
  std::size_t first() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) {
        return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
      }
    }
    return bits_;
  }

  /// this &= row
  void intersect(std::span<const std::uint64_t> row) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= row[w];
  }

  /// this &= ~row
  void subtract(std::span<const std::uint64_t> row) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~row[w];
  }

  /// this = a & row
  void assign_and(const BitSet& a, std::span<const std::uint64_t> row) {
    bits_ = a.bits_;
    words_.resize(a.words_.size());
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] = a.words_[w] & row[w];
  }

  friend bool operator==(const BitSet&, const BitSet&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Square 0/1 matrix stored as contiguous bit-packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), stride_((n + 63) / 64), words_(n * stride_, 0) {}

  std::size_t size() const { return n_; }
  std::size_t stride() const { return stride_; }

  std::span<const std::uint64_t> row(std::size_t i) const {
    return {words_.data() + i * stride_, stride_};
  }
  bool test(std::size_t i, std::size_t j) const {
    return (words_[i * stride_ + (j >> 6)] >> (j & 63)) & 1U;
  }
  void set(std::size_t i, std::size_t j) {
    words_[i * stride_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
  }
  std::size_t row_count(std::size_t i) const {
    std::size_t c = 0;
    for (auto w : row(i)) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

 private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace permsum
