// Copyright 2026 The boxcover Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <utility>
#include <vector>

namespace boxcover {

// Plain bit vector with constant-time rank.
class RankBitVector {
 public:
  RankBitVector() = default;
  explicit RankBitVector(size_t n) : size_(n), words_(n / 64 + 1, 0) {}

  void Set(size_t i) { words_[i / 64] |= uint64_t{1} << (i % 64); }
  void SetWord(size_t w, uint64_t bits) { words_[w] = bits; }

  void Finalize() {
    counts_.resize(words_.size() + 1);
    counts_[0] = 0;
    for (size_t w = 0; w < words_.size(); ++w) {
      counts_[w + 1] = counts_[w] + std::popcount(words_[w]);
    }
  }

  // Number of set bits in [0, i).
  uint32_t Rank1(size_t i) const {
    uint64_t mask = (uint64_t{1} << (i % 64)) - 1;
    return counts_[i / 64] + std::popcount(words_[i / 64] & mask);
  }
  uint32_t Rank0(size_t i) const { return static_cast<uint32_t>(i) - Rank1(i); }

  size_t size() const { return size_; }

 private:
  size_t size_ = 0;
  std::vector<uint64_t> words_;
  std::vector<uint32_t> counts_;
};

// Wavelet matrix over a sequence of integers in [0, sigma). Uses
// n * ceil(log2 sigma) bits plus rank directories. Supports order statistics
// and rank counting restricted to a position range in O(log sigma).
class WaveletMatrix {
 public:
  WaveletMatrix() = default;

  // Takes the sequence by value; pass an rvalue to avoid a copy.
  WaveletMatrix(std::vector<uint32_t> values, uint32_t sigma)
      : size_(values.size()) {
    levels_ = 1;
    while ((uint64_t{1} << levels_) < sigma) ++levels_;
    bits_.reserve(levels_);
    zeros_.reserve(levels_);
    std::vector<uint32_t> cur = std::move(values);
    std::vector<uint32_t> next(cur.size());
    std::vector<uint32_t> ones(cur.size());
    for (int level = levels_ - 1; level >= 0; --level) {
      RankBitVector bv(size_);
      // Stable partition by the current bit, zeros first. Branch-free: both
      // buffers are written and only the matching cursor advances.
      size_t z = 0, o = 0;
      for (size_t w = 0; w * 64 < size_; ++w) {
        const size_t end = std::min(size_, w * 64 + 64);
        uint64_t word = 0;
        for (size_t i = w * 64; i < end; ++i) {
          const uint32_t v = cur[i];
          const uint32_t bit = (v >> level) & 1;
          word |= uint64_t{bit} << (i % 64);
          next[z] = v;
          ones[o] = v;
          z += bit ^ 1;
          o += bit;
        }
        bv.SetWord(w, word);
      }
      bv.Finalize();
      std::copy(ones.begin(), ones.begin() + o, next.begin() + z);
      cur.swap(next);
      bits_.push_back(std::move(bv));
      zeros_.push_back(static_cast<uint32_t>(z));
    }
  }

  size_t size() const { return size_; }

  // k-th smallest (0-based) value among positions [begin, end).
  uint32_t KthSmallest(size_t begin, size_t end, size_t k) const {
    assert(begin <= end && end <= size_ && k < end - begin);
    uint32_t value = 0;
    for (int i = 0; i < levels_; ++i) {
      const RankBitVector& bv = bits_[i];
      uint32_t z_begin = bv.Rank0(begin);
      uint32_t z_end = bv.Rank0(end);
      uint32_t zeros = z_end - z_begin;
      value <<= 1;
      if (k < zeros) {
        begin = z_begin;
        end = z_end;
      } else {
        k -= zeros;
        value |= 1;
        begin = zeros_[i] + bv.Rank1(begin);
        end = zeros_[i] + bv.Rank1(end);
      }
    }
    return value;
  }

  // Number of values strictly less than `bound` among positions [begin, end).
  size_t CountLess(size_t begin, size_t end, uint64_t bound) const {
    if (begin >= end) return 0;
    if (bound >= (uint64_t{1} << levels_)) return end - begin;
    size_t count = 0;
    for (int i = 0; i < levels_; ++i) {
      const RankBitVector& bv = bits_[i];
      int bit = levels_ - 1 - i;
      if ((bound >> bit) & 1) {
        count += bv.Rank0(end) - bv.Rank0(begin);
        begin = zeros_[i] + bv.Rank1(begin);
        end = zeros_[i] + bv.Rank1(end);
      } else {
        begin = bv.Rank0(begin);
        end = bv.Rank0(end);
      }
    }
    return count;
  }

 private:
  size_t size_ = 0;
  int levels_ = 0;
  std::vector<RankBitVector> bits_;
  std::vector<uint32_t> zeros_;
};

}  // namespace boxcover
