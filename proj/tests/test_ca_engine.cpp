#include <gtest/gtest.h>

#include <random>

#include "caweave/ca_engine.hpp"
#include "oracles.hpp"
#include "reference_tables.hpp"

using namespace caweave;

namespace {

template <std::size_t N>
CaGrid grid_of(const std::array<std::string_view, N>& rows) {
  std::vector<BitVector> out;
  for (auto r : rows) out.push_back(BitVector::from_string(r));
  return CaGrid::from_rows(std::move(out));
}

}  // namespace

TEST(RuleVector, ParseAndPrint) {
  const auto a = RuleVector::parse("102x7");
  EXPECT_EQ(a.width(), 7u);
  EXPECT_EQ(a.boundary(), Boundary::cyclic);
  EXPECT_TRUE(a.is_regular());
  EXPECT_TRUE(a.is_canonical());
  EXPECT_EQ(a.to_string(), "102x7");
  const auto b = RuleVector::parse("0111001110");
  EXPECT_EQ(b.boundary(), Boundary::null);
  EXPECT_EQ(b[0], Rule::r90);
  EXPECT_EQ(b[1], Rule::r150);
  EXPECT_EQ(b.to_string(), "0111001110");
  EXPECT_FALSE(RuleVector::parse("102x4", Boundary::null).is_canonical());
  EXPECT_THROW(RuleVector::parse("103x4"), Error);
  EXPECT_THROW(RuleVector::parse("102xq"), Error);
}

TEST(Step, MatchesOracleForAllRules) {
  std::mt19937_64 rng(6);
  const int rules[] = {60, 90, 102, 150};
  for (std::size_t n : {1u, 2u, 5u, 63u, 64u, 65u, 100u}) {
    for (auto boundary : {Boundary::cyclic, Boundary::null}) {
      std::vector<Rule> cells(n);
      std::vector<int> numbers(n);
      oracle::Bits state(n);
      for (std::size_t i = 0; i < n; ++i) {
        numbers[i] = rules[rng() % 4];
        cells[i] = rule_from_number(numbers[i]);
        state[i] = static_cast<int>(rng() & 1);
      }
      const RuleVector rv(cells, boundary);
      const auto ob = boundary == Boundary::cyclic ? oracle::Boundary::cyclic : oracle::Boundary::null;
      const auto want = oracle::ca_run(numbers, state, 10, ob);
      const auto got = run(rv, BitVector::from_string(oracle::str(state)), 10);
      ASSERT_EQ(got.height(), 11u);
      for (std::size_t r = 0; r < want.size(); ++r) EXPECT_EQ(got.row(r).to_string(), oracle::str(want[r]));
    }
  }
}

TEST(Step, WidthMismatch) {
  EXPECT_THROW(step(RuleVector::parse("102x5"), BitVector(4)), Error);
}

TEST(Step, Rule102GridFromTable) {
  const CaGrid a = grid_of(reference::kTable2a);
  EXPECT_EQ(run(RuleVector::uniform(Rule::r102, 7, Boundary::cyclic), a.row(0), 6), a);
  // one more step wraps back to row 0
  EXPECT_EQ(step(RuleVector::uniform(Rule::r102, 7, Boundary::cyclic), a.row(6)), a.row(0));
}

TEST(Step, Rule60IsMirrorOf102) {
  const CaGrid a = grid_of(reference::kTable2a);
  const CaGrid b = grid_of(reference::kTable2b);
  EXPECT_EQ(run(RuleVector::uniform(Rule::r60, 7, Boundary::cyclic), a.row(0).reversed(), 6), b);
  EXPECT_EQ(a.mirrored(), b);
}

TEST(Step, HybridNullGrids) {
  const CaGrid a = grid_of(reference::kTable3a);
  const CaGrid b = grid_of(reference::kTable3b);
  EXPECT_EQ(run(RuleVector::parse("001"), a.row(0), 6), a);
  EXPECT_EQ(run(RuleVector::parse("100"), b.row(0), 6), b);
}

TEST(Step, Rule102ColumnsAreRotations) {
  // Under cyclic rule 102 every column of a PN grid is a rotation of column 0.
  const CaGrid a = grid_of(reference::kTable2a);
  const auto c0 = column(a, 0);
  for (std::size_t j = 1; j < a.width(); ++j) EXPECT_TRUE(shift_between(c0, column(a, j)).has_value());
}

TEST(CaGrid, Accessors) {
  const CaGrid a = grid_of(reference::kTable2a);
  EXPECT_EQ(a.column_bits(0).to_string(), "1001110");
  EXPECT_THROW(a.column_bits(7), Error);
  EXPECT_EQ(CaGrid::from_columns({a.column_bits(0), a.column_bits(1)}).row(0).to_string(), "11");
  EXPECT_THROW(CaGrid::from_columns({BitVector(3), BitVector(4)}), Error);
  EXPECT_EQ(sufficient_height(7), 14u);
}

TEST(CaGrid, RenderAndCsv) {
  const CaGrid g = CaGrid::from_rows({BitVector::from_string("10"), BitVector::from_string("01")});
  EXPECT_EQ(render(g), "█·\n·█");
  EXPECT_EQ(to_csv(g), "1,0\n0,1\n");
  EXPECT_EQ(render(CaGrid{}), "");
}
