#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "caweave/ca102.hpp"
#include "oracles.hpp"
#include "reference_tables.hpp"

using namespace caweave;

namespace {

InterleaveSpec spec(const char* poly, const char* seed, std::vector<std::uint64_t> shifts) {
  return {PrimitivePolynomial::parse(poly), BitVector::from_string(seed), std::move(shifts)};
}

template <std::size_t N>
CaGrid grid_of(const std::array<std::string_view, N>& rows) {
  std::vector<BitVector> out;
  for (auto r : rows) out.push_back(BitVector::from_string(r));
  return CaGrid::from_rows(std::move(out));
}

std::vector<std::size_t> circled(const Ca102Synthesis& s) {
  std::vector<std::size_t> out;
  for (const auto& r : s.recurrence_shifts) out.push_back(r.shift);
  return out;
}

InterleaveSpec width10_spec() {
  const auto p = PrimitivePolynomial::parse("1+x^3+x^4");
  const auto k = shift_between(pn_sequence(p), PeriodicSequence::parse("010110010001111"));
  return {p, BitVector::from_string("1111"), {0, *k}};
}

}  // namespace

TEST(Ca102, DerivedGridOfPnSequence) {
  const auto cols = derive_grid(BitVector::from_string("1001110"), 7);
  EXPECT_EQ(CaGrid::from_columns(cols), grid_of(reference::kTable2a));
  EXPECT_EQ(minimal_length(PeriodicSequence::parse("1001110"), 100), 7u);
  EXPECT_TRUE(derive_grid(BitVector(3), 0).empty());
}

TEST(Ca102, PnLength) {
  EXPECT_EQ(pn_ca_length(ZechTable::build(PrimitivePolynomial::parse("1+x^3+x^4"))), 5u);
  EXPECT_EQ(pn_ca_length(ZechTable::build(PrimitivePolynomial::parse("1+x^2+x^3"))), 7u);
  EXPECT_EQ(predicted_length(ZechTable::build(PrimitivePolynomial::parse("1+x^2+x^3")), 2), 28u);
}

TEST(Ca102, Width10) {
  const auto s = synthesize_102(width10_spec());
  EXPECT_EQ(s.spec.shifts[1], 4u);
  EXPECT_EQ(build_from_spec(s.spec).to_string(), "101110110110001110000011010101");
  EXPECT_EQ(s.minimal_length, 10u);
  EXPECT_EQ(s.predicted_length, 10u);
  EXPECT_EQ(circled(s), (std::vector<std::size_t>{24, 18, 12, 6}));
  EXPECT_EQ(s.grid, grid_of(reference::kGrid102Len10));
  EXPECT_TRUE(s.cyclic_closure);
  EXPECT_TRUE(s.engine_agrees);
  EXPECT_EQ(s.predicted, s.ledger);
}

TEST(Ca102, Width14Ledger) {
  const auto s = synthesize_102(spec("1+x^2+x^3", "111", {0, 1}));
  EXPECT_EQ(s.minimal_length, 14u);
  EXPECT_EQ(s.predicted_length, 14u);
  EXPECT_EQ(s.grid, grid_of(reference::kGrid102Len14));
  ASSERT_EQ(s.ledger.size(), 14u);
  for (std::size_t j = 0; j < 14; ++j) {
    const int a = reference::kTable4First[j];
    const int b = reference::kTable4Second[j];
    EXPECT_EQ(s.ledger[j].parts[0], a < 0 ? ShiftOrZero::zero() : ShiftOrZero::shift(a)) << j;
    EXPECT_EQ(s.ledger[j].parts[1], b < 0 ? ShiftOrZero::zero() : ShiftOrZero::shift(b)) << j;
  }
  EXPECT_EQ(s.predicted, s.ledger);
}

TEST(Ca102, Width28) {
  const auto s = synthesize_102(spec("1+x^2+x^3", "100", {0, 5, 4, 1}));
  EXPECT_EQ(s.minimal_length, 28u);
  EXPECT_EQ(s.predicted_length, 28u);
  EXPECT_EQ(circled(s), (std::vector<std::size_t>{20, 12, 4, 24, 16, 8}));
  EXPECT_EQ(s.grid, grid_of(reference::kGrid102Len28));
  EXPECT_TRUE(s.predicted.empty());
}

TEST(Ca102, EqualShiftsLedgerColumnOne) {
  // k = 0: column 1 is (zero, Z(1))
  const auto s = synthesize_102(spec("1+x^2+x^3", "111", {0, 0}));
  EXPECT_TRUE(s.ledger[1].parts[0].is_zero());
  EXPECT_EQ(s.ledger[1].parts[1], ShiftOrZero::shift(5));
  EXPECT_EQ(s.predicted, s.ledger);
}

TEST(Ca102, PredictedLedgerMatchesObservedEverywhere) {
  for (int L = 3; L <= 5; ++L) {
    for (const auto& p : primitive_polynomials(L)) {
      const ZechTable zech = ZechTable::build(p);
      const PeriodicSequence base = pn_sequence(p);
      for (std::uint64_t k1 : {std::uint64_t{0}, std::uint64_t{2}}) {
        for (std::uint64_t k2 = 0; k2 < p.period(); ++k2) {
          const InterleaveSpec s{p, BitVector(static_cast<std::size_t>(L), true), {k1, k2}};
          const std::size_t width = 2 * p.period();
          EXPECT_EQ(predicted_ledger(s, zech, width), observed_ledger(build_cycle(s), 2, base, width))
              << p.to_string() << " " << k1 << "," << k2;
        }
      }
    }
  }
}

TEST(Ca102, MinimalLengthMatchesOracle) {
  std::mt19937_64 rng(7);
  for (int L = 3; L <= 5; ++L) {
    for (const auto& p : primitive_polynomials(L)) {
      for (std::size_t t : {1u, 2u, 3u, 4u}) {
        std::vector<std::uint64_t> shifts(t);
        for (auto& k : shifts) k = rng() % p.period();
        const InterleaveSpec s{p, BitVector(static_cast<std::size_t>(L), true), shifts};
        const BitVector cycle = build_cycle(s);
        const std::size_t cap = 1u << (t * L);
        EXPECT_EQ(minimal_length(cycle, cap), oracle::ca102_width(oracle::bits(cycle.to_string()), cap));
      }
    }
  }
}

TEST(Ca102, MinimalLengthDividesPredicted) {
  std::mt19937_64 rng(8);
  for (int L = 3; L <= 6; ++L) {
    for (const auto& p : primitive_polynomials(L)) {
      const ZechTable zech = ZechTable::build(p);
      for (unsigned t_exp = 0; t_exp <= 2; ++t_exp) {
        const std::size_t t = std::size_t{1} << t_exp;
        for (int trial = 0; trial < 5; ++trial) {
          std::vector<std::uint64_t> shifts(t);
          for (auto& k : shifts) k = rng() % p.period();
          const InterleaveSpec s{p, BitVector(static_cast<std::size_t>(L), true), shifts};
          if (!analyze(s).is_max_lc) continue;
          const auto len = minimal_length(build_cycle(s), t * p.period());
          ASSERT_TRUE(len);
          EXPECT_EQ(predicted_length(zech, t_exp) % *len, 0u);
        }
      }
    }
  }
}

TEST(Ca102, NonPowerOfTwoStreams) {
  const auto s = synthesize_102(spec("1+x^2+x^3", "111", {0, 1, 3}), 10000);
  EXPECT_EQ(s.predicted_length, 0u);
  EXPECT_TRUE(s.cyclic_closure);
  EXPECT_TRUE(s.engine_agrees);
  EXPECT_EQ(s.ledger.size(), s.minimal_length);
  EXPECT_TRUE(s.recurrence_shifts.empty());
  try {
    synthesize_102(spec("1+x^2+x^3", "111", {0, 1, 3}), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::budget_exceeded);
  }
}

TEST(Ca102, Errors) {
  try {
    synthesize_102(spec("1+x^2+x^3", "111", {0, 4}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::max_lc_required);
  }
  const auto four = spec("1+x^2+x^3", "100", {0, 5, 4, 1});
  EXPECT_THROW(predicted_ledger(four, ZechTable::build(four.poly), 4), Error);
  EXPECT_THROW(minimal_length(BitVector(), 3), Error);
}

TEST(Ca102, Deterministic) {
  EXPECT_EQ(synthesize_102(width10_spec()).grid, synthesize_102(width10_spec()).grid);
}
