#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "caweave/bitvec.hpp"
#include "caweave/error.hpp"
#include "caweave/gf2field.hpp"
#include "caweave/gf2poly.hpp"
#include "caweave/sequence.hpp"

namespace caweave {

// Interleaving of shifted copies of the PN-sequence generated by `poly` from
// `seed`. Stream j is the base sequence advanced by shifts[j].
struct InterleaveSpec {
  PrimitivePolynomial poly;
  BitVector seed;
  std::vector<std::uint64_t> shifts;

  std::size_t streams() const noexcept { return shifts.size(); }
  bool power_of_two() const noexcept { return std::has_single_bit(shifts.size()); }

  void validate() const {
    if (shifts.empty()) throw Error(Errc::invalid_input, "interleaving needs at least one shift");
    if (seed.size() != static_cast<std::size_t>(poly.degree())) {
      throw Error(Errc::width_mismatch, "seed has " + std::to_string(seed.size()) + " bits, degree is " +
                                            std::to_string(poly.degree()));
    }
    if (seed.none()) throw Error(Errc::zero_state, "seed must be nonzero");
  }

  // Shifts reduced mod T and translated so that shifts[0] == 0.
  InterleaveSpec canonical() const {
    InterleaveSpec out = *this;
    const std::uint64_t period = poly.period();
    const std::uint64_t first = shifts.empty() ? 0 : shifts.front() % period;
    for (auto& k : out.shifts) k = (k % period + period - first) % period;
    return out;
  }
};

// Round-robin merge, not period-minimized: out[n*t + j] = streams[j][n].
inline BitVector interleave_cycle(std::span<const PeriodicSequence> streams) {
  if (streams.empty()) throw Error(Errc::invalid_input, "no streams to interleave");
  const std::size_t period = streams.front().period();
  for (const auto& s : streams) {
    if (s.period() != period) {
      throw Error(Errc::period_mismatch, "stream periods " + std::to_string(period) + " and " +
                                             std::to_string(s.period()) + " differ");
    }
  }
  const std::size_t t = streams.size();
  BitVector out(period * t);
  for (std::size_t n = 0; n < period; ++n) {
    for (std::size_t j = 0; j < t; ++j) out.set(n * t + j, streams[j].bits().test(n));
  }
  return out;
}

inline PeriodicSequence interleave(std::span<const PeriodicSequence> streams) {
  return PeriodicSequence::from_cycle(interleave_cycle(streams));
}

// Splits one cycle into t streams (stream j takes positions j, j+t, ...).
inline std::vector<PeriodicSequence> deinterleave(const BitVector& cycle, std::size_t t) {
  if (t == 0 || cycle.size() % t != 0) {
    throw Error(Errc::not_divisible, "cycle of " + std::to_string(cycle.size()) +
                                         " bits does not split into " + std::to_string(t) + " streams");
  }
  const std::size_t len = cycle.size() / t;
  std::vector<PeriodicSequence> out;
  out.reserve(t);
  for (std::size_t j = 0; j < t; ++j) {
    BitVector stream(len);
    for (std::size_t n = 0; n < len; ++n) stream.set(n, cycle.test(n * t + j));
    out.push_back(PeriodicSequence::from_cycle(stream));
  }
  return out;
}

inline std::vector<PeriodicSequence> deinterleave(const PeriodicSequence& s, std::size_t t) {
  return deinterleave(s.bits(), t);
}

inline std::vector<PeriodicSequence> spec_streams(const InterleaveSpec& spec) {
  spec.validate();
  const PeriodicSequence base = pn_sequence(spec.poly, spec.seed);
  std::vector<PeriodicSequence> streams;
  streams.reserve(spec.streams());
  for (std::uint64_t k : spec.shifts) streams.push_back(base.rotated(k % base.period()));
  return streams;
}

// One cycle of length t*T; deinterleaving it gives back the shifted streams
// even when the minimal period is shorter.
inline BitVector build_cycle(const InterleaveSpec& spec) { return interleave_cycle(spec_streams(spec)); }

inline PeriodicSequence build_from_spec(const InterleaveSpec& spec) {
  return PeriodicSequence::from_cycle(build_cycle(spec));
}

struct InterleaveReport {
  std::size_t streams = 0;
  std::size_t period = 0;
  std::size_t lc = 0;
  Gf2Poly minimal_polynomial;
  bool is_max_lc = false;
  bool annihilated_by_p_pow = false;
  // Growth bounds are only claimed for a power-of-two number of streams.
  bool power_of_two = false;
};

inline InterleaveReport analyze(const InterleaveSpec& spec) {
  const PeriodicSequence seq = build_from_spec(spec);
  const LinearComplexity lc = linear_complexity(seq);
  InterleaveReport report;
  report.streams = spec.streams();
  report.period = seq.period();
  report.lc = lc.lc;
  report.minimal_polynomial = lc.minimal_polynomial;
  report.is_max_lc = lc.lc == spec.streams() * static_cast<std::size_t>(spec.poly.degree());
  const Gf2Poly bound = spec.poly.poly().pow(static_cast<unsigned>(spec.streams()));
  report.annihilated_by_p_pow = lc.minimal_polynomial.divides(bound);
  report.power_of_two = spec.power_of_two();
  return report;
}

// Renders the minimal polynomial as "(p)^e" when it is a power of the base
// polynomial, otherwise in plain form.
inline std::string describe_minimal_polynomial(const InterleaveReport& report, const PrimitivePolynomial& p) {
  const Gf2Poly& m = report.minimal_polynomial;
  if (m.degree() > 0 && m.degree() % p.degree() == 0) {
    const auto e = static_cast<unsigned>(m.degree() / p.degree());
    if (p.poly().pow(e) == m) {
      return e == 1 ? p.to_string() : "(" + p.to_string() + ")^" + std::to_string(e);
    }
  }
  return m.to_string();
}

// Max-LC test for a power-of-two number of streams t without running
// Berlekamp-Massey: the minimal polynomial divides p^t, so LC = tL exactly
// when p^(t-1)(E) does not annihilate the cycle.
inline bool has_max_lc_power_of_two(const BitVector& cycle, const PrimitivePolynomial& p, std::size_t t) {
  if (!std::has_single_bit(t)) throw Error(Errc::unsupported_t, "stream count must be a power of two");
  if (t == 1) return cycle.any();
  return apply_polynomial(p.poly().pow(static_cast<unsigned>(t - 1)), cycle).any();
}

// Operations that assume maximum linear complexity call this first.
inline void require_max_lc(const InterleaveReport& report) {
  if (!report.is_max_lc) {
    throw Error(Errc::max_lc_required, "linear complexity " + std::to_string(report.lc) +
                                           " is below the maximum for " + std::to_string(report.streams) +
                                           " streams");
  }
}

}  // namespace caweave
