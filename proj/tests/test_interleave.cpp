#include <gtest/gtest.h>

#include <random>

#include "caweave/interleave.hpp"
#include "oracles.hpp"

using namespace caweave;

namespace {

InterleaveSpec spec(const char* poly, const char* seed, std::vector<std::uint64_t> shifts) {
  return {PrimitivePolynomial::parse(poly), BitVector::from_string(seed), std::move(shifts)};
}

}  // namespace

TEST(Interleave, TwoStreamsDegreeFive) {
  const auto s = spec("1+x^2+x^5", "11111", {0, 17});
  const auto seq = build_from_spec(s);
  EXPECT_EQ(seq.to_string(), "11101010100100001110011110100111011101000000110100110111100100");
  const auto r = analyze(s);
  EXPECT_EQ(r.period, 62u);
  EXPECT_EQ(r.lc, 10u);
  EXPECT_TRUE(r.is_max_lc);
  EXPECT_TRUE(r.annihilated_by_p_pow);
  EXPECT_EQ(describe_minimal_polynomial(r, s.poly), "(1+x^2+x^5)^2");
}

TEST(Interleave, TwoStreamsDegreeThree) {
  const auto s = spec("1+x^2+x^3", "111", {0, 1});
  EXPECT_EQ(build_from_spec(s).to_string(), "11111001100001");
  const auto r = analyze(s);
  EXPECT_EQ(r.lc, 6u);
  EXPECT_EQ(r.minimal_polynomial, Gf2Poly::parse("1+x^2+x^3").pow(2));
  EXPECT_EQ(describe_minimal_polynomial(r, s.poly), "(1+x^2+x^3)^2");
}

TEST(Interleave, FourStreams) {
  const auto s = spec("1+x^2+x^3", "100", {0, 5, 4, 1});
  EXPECT_EQ(build_from_spec(s).to_string(), "1110001001011011100111000111");
  EXPECT_TRUE(analyze(s).is_max_lc);
}

TEST(Interleave, SingleStreamEchoesPn) {
  const auto s = spec("1+x^2+x^5", "11111", {0});
  EXPECT_EQ(build_from_spec(s), pn_sequence(s.poly));
  EXPECT_EQ(analyze(s).lc, 5u);
}

TEST(Interleave, EqualShiftsKeepMaxLc) {
  // a_0 a_0 a_1 a_1 ... is annihilated by p^2 but not by p
  const auto r = analyze(spec("1+x+x^3", "111", {3, 3}));
  EXPECT_EQ(r.period, 14u);
  EXPECT_TRUE(r.is_max_lc);
  EXPECT_TRUE(analyze(spec("1+x+x^3", "111", {0, 0, 0, 0})).is_max_lc);
}

TEST(Interleave, CollapsingShiftsLoseMaxLc) {
  // this pair re-interleaves the PN-sequence into itself
  const auto s = spec("1+x^2+x^3", "111", {0, 4});
  const auto r = analyze(s);
  EXPECT_EQ(r.period, 7u);
  EXPECT_EQ(r.lc, 3u);
  EXPECT_FALSE(r.is_max_lc);
  EXPECT_THROW(require_max_lc(r), Error);
  EXPECT_FALSE(has_max_lc_power_of_two(build_cycle(s), s.poly, 2));
}

TEST(Interleave, ValidateErrors) {
  EXPECT_THROW(build_cycle(spec("1+x+x^3", "11", {0, 1})), Error);
  EXPECT_THROW(build_cycle(spec("1+x+x^3", "000", {0, 1})), Error);
  EXPECT_THROW(build_cycle(spec("1+x+x^3", "111", {})), Error);
}

TEST(Interleave, PeriodMismatch) {
  const std::vector<PeriodicSequence> streams{PeriodicSequence::parse("1110100"), PeriodicSequence::parse("110")};
  try {
    interleave(streams);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::period_mismatch);
  }
}

TEST(Interleave, DeinterleaveRoundTrip) {
  std::mt19937_64 rng(4);
  for (const auto& p : primitive_polynomials(4)) {
    for (std::size_t t : {1u, 2u, 3u, 5u}) {
      std::vector<std::uint64_t> shifts(t);
      for (auto& k : shifts) k = rng() % p.period();
      const InterleaveSpec s{p, BitVector(4, true), shifts};
      const auto streams = spec_streams(s);
      EXPECT_EQ(deinterleave(build_cycle(s), t), streams);
    }
  }
  EXPECT_THROW(deinterleave(BitVector(7), 2), Error);
}

TEST(Interleave, CanonicalShifts) {
  const auto s = spec("1+x+x^3", "111", {5, 12, 2}).canonical();
  EXPECT_EQ(s.shifts, (std::vector<std::uint64_t>{0, 0, 4}));
}

TEST(Interleave, LcNeverExceedsBound) {
  // minimal polynomial divides p(x^t), and p^t when t is a power of two
  std::mt19937_64 rng(5);
  for (int L = 3; L <= 4; ++L) {
    for (const auto& p : primitive_polynomials(L)) {
      for (int trial = 0; trial < 10; ++trial) {
        for (std::size_t t : {2u, 3u, 4u}) {
          std::vector<std::uint64_t> shifts(t);
          for (auto& k : shifts) k = rng() % p.period();
          const InterleaveSpec s{p, BitVector(static_cast<std::size_t>(L), true), shifts};
          const auto r = analyze(s);
          if (t != 3) {
            EXPECT_TRUE(r.annihilated_by_p_pow);
            EXPECT_EQ(has_max_lc_power_of_two(build_cycle(s), p, t), r.is_max_lc);
          }
          EXPECT_TRUE(r.minimal_polynomial.divides(p.poly().compose_power(t)));
          EXPECT_EQ(r.lc, oracle::linear_complexity(oracle::bits(build_from_spec(s).to_string())));
        }
      }
    }
  }
}
