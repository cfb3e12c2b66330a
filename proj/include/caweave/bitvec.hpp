#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "caweave/error.hpp"

namespace caweave {

// Packed, dynamically sized bit vector. Bits past size() are kept zero so
// that word-level comparisons and popcounts need no masking.
class BitVector {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t n, bool value = false)
      : words_(word_count(n), value ? ~word_type{0} : word_type{0}), size_(n) {
    clear_tail();
  }

  // Parses '0'/'1' characters; whitespace is skipped.
  static BitVector from_string(std::string_view text) {
    BitVector out;
    for (char c : text) {
      if (c == '0' || c == '1') {
        out.push_back(c == '1');
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',') {
        continue;
      } else {
        throw Error(Errc::invalid_input,
                    "unexpected character '" + std::string(1, c) + "' in bit string");
      }
    }
    return out;
  }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  bool operator[](std::size_t i) const noexcept { return test(i); }

  void set(std::size_t i, bool value = true) noexcept {
    const word_type mask = word_type{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= word_type{1} << (i % kWordBits); }

  void push_back(bool value) {
    if (size_ % kWordBits == 0) words_.push_back(0);
    ++size_;
    set(size_ - 1, value);
  }

  void resize(std::size_t n) {
    words_.resize(word_count(n), 0);
    size_ = n;
    clear_tail();
  }

  void append(const BitVector& other) {
    for (std::size_t i = 0; i < other.size(); ++i) push_back(other.test(i));
  }

  std::size_t count() const noexcept {
    std::size_t total = 0;
    for (word_type w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
  }
  bool any() const noexcept { return !none(); }

  std::span<const word_type> words() const noexcept { return words_; }

  // 64 bits starting at `pos`; positions at or past size() read as zero.
  word_type extract(std::size_t pos) const noexcept {
    if (pos >= size_) return 0;
    const std::size_t w = pos / kWordBits;
    const std::size_t b = pos % kWordBits;
    word_type out = words_[w] >> b;
    if (b != 0 && w + 1 < words_.size()) out |= words_[w + 1] << (kWordBits - b);
    return out;
  }

  BitVector& operator^=(const BitVector& other) {
    if (other.size_ != size_) throw Error(Errc::width_mismatch, "xor of bit vectors of unequal length");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
  }
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }

  BitVector& operator&=(const BitVector& other) {
    if (other.size_ != size_) throw Error(Errc::width_mismatch, "and of bit vectors of unequal length");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  friend BitVector operator&(BitVector lhs, const BitVector& rhs) { return lhs &= rhs; }

  friend bool operator==(const BitVector& a, const BitVector& b) noexcept {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

  // out[i] = (*this)[(i + k) mod n]. `out` is resized; no allocation when it
  // already has the right size.
  void rotate_into(BitVector& out, std::size_t k) const {
    out.resize(size_);
    if (size_ == 0) return;
    k %= size_;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const std::size_t start = (i * kWordBits + k) % size_;
      const std::size_t before_wrap = size_ - start;
      word_type w = extract(start);
      if (before_wrap < kWordBits) w |= extract(0) << before_wrap;
      out.words_[i] = w;
    }
    out.clear_tail();
  }

  BitVector rotated(std::size_t k) const {
    BitVector out;
    rotate_into(out, k);
    return out;
  }

  // out[i] = (*this)[i + k], zero past the end.
  BitVector shifted_down(std::size_t k) const {
    BitVector out(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = extract(i * kWordBits + k);
    out.clear_tail();
    return out;
  }

  // out[i + k] = (*this)[i], zero below k.
  BitVector shifted_up(std::size_t k) const {
    BitVector out(size_);
    const std::size_t ws = k / kWordBits;
    const std::size_t bs = k % kWordBits;
    for (std::size_t i = ws; i < words_.size(); ++i) {
      word_type w = words_[i - ws] << bs;
      if (bs != 0 && i > ws) w |= words_[i - ws - 1] >> (kWordBits - bs);
      out.words_[i] = w;
    }
    out.clear_tail();
    return out;
  }

  // *this ^= (src shifted up by k), truncated to size(). No allocation.
  void xor_shifted_up(const BitVector& src, std::size_t k) noexcept {
    const std::size_t ws = k / kWordBits;
    const std::size_t bs = k % kWordBits;
    const std::size_t n = std::min(words_.size(), src.words_.size() + ws + 1);
    for (std::size_t i = ws; i < n; ++i) {
      const std::size_t j = i - ws;
      word_type w = j < src.words_.size() ? src.words_[j] << bs : 0;
      if (bs != 0 && j > 0 && j - 1 < src.words_.size()) w |= src.words_[j - 1] >> (kWordBits - bs);
      words_[i] ^= w;
    }
    clear_tail();
  }

  // First min(64, size()) bits of rotated(k), packed into one word.
  word_type cyclic_window(std::size_t k) const noexcept {
    if (size_ == 0) return 0;
    const std::size_t start = k % size_;
    const std::size_t before_wrap = size_ - start;
    word_type w = extract(start);
    if (before_wrap < kWordBits) w |= extract(0) << before_wrap;
    if (size_ < kWordBits) w &= (word_type{1} << size_) - 1;
    return w;
  }

  BitVector reversed() const {
    BitVector out(size_);
    for (std::size_t i = 0; i < size_; ++i) out.set(size_ - 1 - i, test(i));
    return out;
  }

  BitVector slice(std::size_t pos, std::size_t len) const {
    if (pos + len > size_) throw Error(Errc::index_out_of_range, "slice past end of bit vector");
    BitVector out(len);
    for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] = extract(pos + i * kWordBits);
    out.clear_tail();
    return out;
  }

  std::string to_string() const {
    std::string out(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
      if (test(i)) out[i] = '1';
    }
    return out;
  }

 private:
  static std::size_t word_count(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

  void clear_tail() noexcept {
    const std::size_t rem = size_ % kWordBits;
    if (rem != 0 && !words_.empty()) words_.back() &= (word_type{1} << rem) - 1;
  }

  std::vector<word_type> words_;
  std::size_t size_ = 0;
};

}  // namespace caweave
