#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "caweave/bitvec.hpp"
#include "caweave/error.hpp"
#include "caweave/gf2field.hpp"
#include "caweave/gf2poly.hpp"

namespace caweave {

// One minimal period of a periodic binary sequence. Index arithmetic is
// always modulo period().
class PeriodicSequence {
 public:
  // `cycle` must hold a whole number of periods; the result is reduced to the
  // minimal period.
  static PeriodicSequence from_cycle(const BitVector& cycle) {
    if (cycle.empty()) throw Error(Errc::empty_input, "sequence has no bits");
    const std::size_t n = cycle.size();
    BitVector scratch;
    for (std::size_t d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      cycle.rotate_into(scratch, d);
      if (scratch == cycle) return PeriodicSequence(cycle.slice(0, d));
    }
    return PeriodicSequence(cycle);
  }

  static PeriodicSequence parse(std::string_view text) { return from_cycle(BitVector::from_string(text)); }

  const BitVector& bits() const noexcept { return bits_; }
  std::size_t period() const noexcept { return bits_.size(); }
  bool at(std::size_t i) const noexcept { return bits_.test(i % bits_.size()); }
  bool is_zero() const noexcept { return bits_.none(); }

  // `length` consecutive bits starting at index 0; must be a multiple of the
  // period.
  BitVector cycle(std::size_t length) const {
    if (length % period() != 0) {
      throw Error(Errc::not_divisible, "cycle length " + std::to_string(length) +
                                           " is not a multiple of period " + std::to_string(period()));
    }
    BitVector out(length);
    for (std::size_t i = 0; i < length; ++i) out.set(i, bits_.test(i % period()));
    return out;
  }

  // {s_(i+k)}
  PeriodicSequence rotated(std::size_t k) const { return PeriodicSequence(bits_.rotated(k)); }

  std::string to_string() const { return bits_.to_string(); }

  friend bool operator==(const PeriodicSequence&, const PeriodicSequence&) = default;

 private:
  explicit PeriodicSequence(BitVector bits) : bits_(std::move(bits)) {}

  BitVector bits_;
};

inline PeriodicSequence minimal_period(const BitVector& bits) { return PeriodicSequence::from_cycle(bits); }

struct Lfsr {
  PrimitivePolynomial poly;
  BitVector state;  // a_0 ... a_(L-1)
};

// a_(i+L) = p_(L-1) a_(i+L-1) + ... + p_0 a_i
inline BitVector lfsr_generate(const Lfsr& lfsr, std::size_t n, bool require_nonzero = true) {
  const int degree = lfsr.poly.degree();
  if (lfsr.state.size() != static_cast<std::size_t>(degree)) {
    throw Error(Errc::width_mismatch, "LFSR state has " + std::to_string(lfsr.state.size()) +
                                          " bits, polynomial degree is " + std::to_string(degree));
  }
  if (require_nonzero && lfsr.state.none()) throw Error(Errc::zero_state, "PN-sequence needs a nonzero state");

  const std::uint64_t taps = lfsr.poly.mask() & ((std::uint64_t{1} << degree) - 1);
  std::uint64_t window = 0;  // bit j holds a_(i+j)
  for (int j = 0; j < degree; ++j) {
    if (lfsr.state.test(static_cast<std::size_t>(j))) window |= std::uint64_t{1} << j;
  }
  BitVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.set(i, window & 1u);
    const std::uint64_t next = static_cast<std::uint64_t>(std::popcount(window & taps)) & 1u;
    window = (window >> 1) | (next << (degree - 1));
  }
  return out;
}

inline PeriodicSequence pn_sequence(const PrimitivePolynomial& p, const BitVector& seed) {
  return PeriodicSequence::from_cycle(lfsr_generate(Lfsr{p, seed}, p.period()));
}

// Sequence generated from the all-ones seed.
inline PeriodicSequence pn_sequence(const PrimitivePolynomial& p) {
  return pn_sequence(p, BitVector(static_cast<std::size_t>(p.degree()), true));
}

struct LinearComplexity {
  std::size_t lc = 0;
  // Monic characteristic polynomial of the shortest recurrence, in the
  // convention of lfsr_generate (degree lc).
  Gf2Poly minimal_polynomial;
};

// Berlekamp-Massey over a finite prefix.
inline LinearComplexity berlekamp_massey(const BitVector& s) {
  const std::size_t n = s.size();
  const BitVector reversed = s.reversed();  // reversed[j] = s[n - 1 - j]
  BitVector conn(n + 1);                    // c_0 + c_1 x + ... (feedback form)
  BitVector prev(n + 1);
  BitVector saved(n + 1);
  conn.set(0);
  prev.set(0);
  std::size_t lc = 0;
  std::size_t gap = 1;
  for (std::size_t k = 0; k < n; ++k) {
    // d = sum_{i=0..lc} c_i s_(k-i) = sum_i c_i reversed[n-1-k+i]
    std::uint64_t acc = 0;
    const std::size_t base = n - 1 - k;
    const auto words = conn.words();
    for (std::size_t w = 0; w * BitVector::kWordBits <= lc; ++w) {
      acc ^= words[w] & reversed.extract(base + w * BitVector::kWordBits);
    }
    if ((std::popcount(acc) & 1) == 0) {
      ++gap;
    } else if (2 * lc <= k) {
      saved = conn;
      conn.xor_shifted_up(prev, gap);
      lc = k + 1 - lc;
      prev = std::move(saved);
      saved = BitVector(n + 1);
      gap = 1;
    } else {
      conn.xor_shifted_up(prev, gap);
      ++gap;
    }
  }
  BitVector minimal(lc + 1);
  for (std::size_t j = 0; j <= lc; ++j) minimal.set(j, conn.test(lc - j));
  return {lc, Gf2Poly(std::move(minimal))};
}

// Two periods are enough to pin down the minimal polynomial of a periodic
// sequence, since LC <= T.
inline LinearComplexity linear_complexity(const PeriodicSequence& seq) {
  return berlekamp_massey(seq.cycle(2 * seq.period()));
}

// sum_i c_i s_(n+i): the sequence obtained by applying poly(E) to a cycle,
// where E is the advance operator.
inline BitVector apply_polynomial(const Gf2Poly& poly, const BitVector& cycle) {
  BitVector out(cycle.size());
  BitVector scratch;
  for (std::size_t i = 0; i < poly.coefficients().size(); ++i) {
    if (!poly.coefficient(i)) continue;
    cycle.rotate_into(scratch, i);
    out ^= scratch;
  }
  return out;
}

// Smallest k with b_i = a_(i+k) for all i, or nullopt.
inline std::optional<std::size_t> shift_between(const PeriodicSequence& a, const PeriodicSequence& b) {
  if (a.period() != b.period()) return std::nullopt;
  const std::uint64_t fingerprint = b.bits().cyclic_window(0);
  BitVector scratch;
  for (std::size_t k = 0; k < a.period(); ++k) {
    if (a.bits().cyclic_window(k) != fingerprint) continue;
    a.bits().rotate_into(scratch, k);
    if (scratch == b.bits()) return k;
  }
  return std::nullopt;
}

// Shift of a PN-sequence, or the all-zero sequence.
class ShiftOrZero {
 public:
  static ShiftOrZero zero() { return ShiftOrZero(true, 0); }
  static ShiftOrZero shift(std::uint64_t k) { return ShiftOrZero(false, k); }

  bool is_zero() const noexcept { return zero_; }
  std::uint64_t value() const {
    if (zero_) throw Error(Errc::invalid_input, "the zero sequence has no shift");
    return shift_;
  }

  std::string to_string() const { return zero_ ? "ZERO" : std::to_string(shift_); }

  friend bool operator==(const ShiftOrZero&, const ShiftOrZero&) = default;

 private:
  ShiftOrZero(bool zero, std::uint64_t shift) : zero_(zero), shift_(shift) {}

  bool zero_;
  std::uint64_t shift_;
};

// {a_i + a_(i+k)} = {a_(i+Z(k))}
inline ShiftOrZero sum_shift(const ZechTable& zech, std::uint64_t k) {
  const ZechLog z = zech(static_cast<std::int64_t>(k % zech.period()));
  return z.is_infinite() ? ShiftOrZero::zero() : ShiftOrZero::shift(z.exponent());
}

// {a_(i+k1) + a_(i+k2)} = {a_(i + Z(k2-k1) + k1)}
inline ShiftOrZero combined_shift(const ZechTable& zech, std::uint64_t k1, std::uint64_t k2) {
  const std::uint64_t period = zech.period();
  k1 %= period;
  k2 %= period;
  if (k1 == k2) return ShiftOrZero::zero();
  const std::uint64_t diff = (k2 + period - k1) % period;
  return ShiftOrZero::shift((zech(static_cast<std::int64_t>(diff)).exponent() + k1) % period);
}

// Sum of two components; the zero sequence is the identity.
inline ShiftOrZero add_shifts(const ZechTable& zech, const ShiftOrZero& a, const ShiftOrZero& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return combined_shift(zech, a.value(), b.value());
}

inline ShiftOrZero advance(const ShiftOrZero& s, std::uint64_t delta, std::uint64_t period) {
  return s.is_zero() ? s : ShiftOrZero::shift((s.value() + delta) % period);
}

}  // namespace caweave
