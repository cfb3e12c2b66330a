#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "caweave/bitvec.hpp"
#include "caweave/ca_engine.hpp"
#include "caweave/error.hpp"
#include "caweave/gf2field.hpp"
#include "caweave/gf2poly.hpp"
#include "caweave/interleave.hpp"
#include "caweave/ledger.hpp"
#include "caweave/sequence.hpp"

namespace caweave {

inline constexpr int kDefaultSynthesisMaxDegree = 20;

// Null-boundary 90/150 CA written as bits, 1 = rule 150 and 0 = rule 90.
class HybridRuleString {
 public:
  HybridRuleString() = default;
  explicit HybridRuleString(BitVector bits) : bits_(std::move(bits)) {}

  static HybridRuleString parse(std::string_view text) { return HybridRuleString(BitVector::from_string(text)); }

  const BitVector& bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return bits_.size(); }
  bool is_150(std::size_t i) const noexcept { return bits_.test(i); }

  HybridRuleString mirrored() const { return HybridRuleString(bits_.reversed()); }
  RuleVector to_rule_vector() const { return RuleVector::hybrid(bits_); }
  std::string to_string() const { return bits_.to_string(); }

  friend bool operator==(const HybridRuleString&, const HybridRuleString&) = default;

 private:
  BitVector bits_;
};

namespace detail {

// Delta_k = (x + c_k) Delta_(k-1) + Delta_(k-2) on bit masks; len <= 63.
inline std::uint64_t charpoly_mask(std::uint64_t rules, int len) {
  std::uint64_t prev = 0;
  std::uint64_t cur = 1;
  for (int k = 0; k < len; ++k) {
    const bool c = (rules >> k) & 1u;
    const std::uint64_t next = (cur << 1) ^ (c ? cur : 0) ^ prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace detail

// Characteristic polynomial of the tridiagonal transition matrix.
inline Gf2Poly characteristic_polynomial(const HybridRuleString& rules) {
  Gf2Poly prev;
  Gf2Poly cur = Gf2Poly::one();
  const Gf2Poly x = Gf2Poly::monomial(1);
  for (std::size_t k = 0; k < rules.size(); ++k) {
    Gf2Poly next = cur * x + prev;
    if (rules.is_150(k)) next += cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// Every length-L rule string whose characteristic polynomial is p, in
// lexicographic order of the printed string.
inline std::vector<HybridRuleString> all_pn_cas(const PrimitivePolynomial& p,
                                                int max_degree = kDefaultSynthesisMaxDegree) {
  const int len = p.degree();
  if (len > max_degree) {
    throw Error(Errc::budget_exceeded, "exhaustive synthesis limited to degree " + std::to_string(max_degree));
  }
  const std::uint64_t target = p.mask();
  std::vector<HybridRuleString> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << len); ++m) {
    // Cell j reads the j-th character, which is the high end of m.
    std::uint64_t rules = 0;
    for (int j = 0; j < len; ++j) rules |= ((m >> (len - 1 - j)) & 1u) << j;
    if (detail::charpoly_mask(rules, len) != target) continue;
    BitVector bits(static_cast<std::size_t>(len));
    for (int j = 0; j < len; ++j) bits.set(static_cast<std::size_t>(j), (rules >> j) & 1u);
    out.emplace_back(std::move(bits));
  }
  return out;
}

// The two 90/150 CAs of length L generating PN-sequences of p.
inline std::pair<HybridRuleString, HybridRuleString> synthesize_pn_ca(const PrimitivePolynomial& p,
                                                                      int max_degree = kDefaultSynthesisMaxDegree) {
  auto found = all_pn_cas(p, max_degree);
  if (found.size() != 2) {
    throw Error(Errc::not_found, std::to_string(found.size()) + " rule strings for " + p.to_string() +
                                     ", expected exactly two");
  }
  return {std::move(found[0]), std::move(found[1])};
}

// Complement the last bit and append the reversed string, t_exp times.
inline HybridRuleString mirror_expand(const HybridRuleString& s, unsigned t_exp) {
  BitVector bits = s.bits();
  for (unsigned round = 0; round < t_exp && !bits.empty(); ++round) {
    bits.flip(bits.size() - 1);
    bits.append(bits.reversed());
  }
  return HybridRuleString(std::move(bits));
}

// Columns of the null-boundary CA determined by column 0, solving each cell's
// update for its right neighbour:
//   c_(j+1)[i] = c_(j-1)[i] + r_j c_j[i] + c_j[i+1],  c_(-1) = 0.
inline std::vector<BitVector> derive_columns(const HybridRuleString& rules, const BitVector& column0) {
  std::vector<BitVector> columns;
  if (rules.size() == 0) return columns;
  columns.reserve(rules.size());
  columns.push_back(column0);
  for (std::size_t j = 0; j + 1 < rules.size(); ++j) {
    BitVector next = columns[j].rotated(1);
    if (rules.is_150(j)) next ^= columns[j];
    if (j > 0) next ^= columns[j - 1];
    columns.push_back(std::move(next));
  }
  return columns;
}

struct ColumnVerification {
  bool verified = false;
  CaGrid grid;
};

// The last cell has no right neighbour, so its own update must hold:
// c_(M-1)[i+1] = c_(M-2)[i] + r c_(M-1)[i].
inline ColumnVerification verify_column0(const HybridRuleString& rules, const BitVector& target_cycle) {
  ColumnVerification out;
  if (rules.size() == 0 || target_cycle.empty()) return out;
  const auto columns = derive_columns(rules, target_cycle);
  const std::size_t last = columns.size() - 1;
  BitVector expected(target_cycle.size());
  if (last > 0) expected = columns[last - 1];
  if (rules.is_150(last)) expected ^= columns[last];
  const bool closed = columns[last].rotated(1) == expected;

  out.grid = CaGrid::from_columns(columns);
  const bool forward = run(rules.to_rule_vector(), out.grid.row(0), out.grid.height() - 1) == out.grid;
  // The forward run does not wrap in time, so also require the last row to
  // step back to row 0.
  const bool wraps = step(rules.to_rule_vector(), out.grid.rows().back()) == out.grid.row(0);
  out.verified = closed && forward && wraps;
  return out;
}

inline ColumnVerification verify_column0(const HybridRuleString& rules, const PeriodicSequence& target) {
  return verify_column0(rules, target.bits());
}

inline std::vector<ColumnLedgerEntry> decompose_columns(const CaGrid& grid, std::size_t t,
                                                        const PeriodicSequence& base) {
  std::vector<ColumnLedgerEntry> ledger;
  ledger.reserve(grid.width());
  for (std::size_t j = 0; j < grid.width(); ++j) ledger.push_back({j, decompose_column(grid.column_bits(j), t, base)});
  return ledger;
}

struct BalanceStats {
  std::size_t ones = 0;
  std::size_t zeros = 0;
  double ratio = 0.0;  // ones / (ones + zeros)
};

inline BalanceStats balance_stats(const BitVector& cycle) {
  BalanceStats out;
  out.ones = cycle.count();
  out.zeros = cycle.size() - out.ones;
  if (!cycle.empty()) out.ratio = static_cast<double>(out.ones) / static_cast<double>(cycle.size());
  return out;
}

inline BalanceStats balance_stats(const PeriodicSequence& seq) { return balance_stats(seq.bits()); }

struct Ca9150Synthesis {
  InterleaveSpec spec;
  InterleaveReport report;
  unsigned t_exp = 0;
  std::array<HybridRuleString, 2> base{};
  std::array<HybridRuleString, 2> pair{};
  std::array<bool, 2> verified{};
  std::array<CaGrid, 2> grids{};
  std::array<std::vector<ColumnLedgerEntry>, 2> ledgers{};
};

inline Ca9150Synthesis synthesize_9150(const InterleaveSpec& spec, int max_degree = kDefaultSynthesisMaxDegree) {
  if (!spec.power_of_two()) {
    throw Error(Errc::unsupported_t, "90/150 synthesis needs a power-of-two stream count, got " +
                                         std::to_string(spec.streams()));
  }
  Ca9150Synthesis out{spec, analyze(spec)};
  require_max_lc(out.report);
  out.t_exp = static_cast<unsigned>(std::countr_zero(spec.streams()));
  auto [first, second] = synthesize_pn_ca(spec.poly, max_degree);
  out.base = {first, second};

  const BitVector cycle = build_cycle(spec);
  const PeriodicSequence pn = pn_sequence(spec.poly, spec.seed);
  for (std::size_t i = 0; i < 2; ++i) {
    out.pair[i] = mirror_expand(out.base[i], out.t_exp);
    auto check = verify_column0(out.pair[i], cycle);
    out.verified[i] = check.verified;
    out.grids[i] = std::move(check.grid);
    if (out.verified[i]) out.ledgers[i] = decompose_columns(out.grids[i], spec.streams(), pn);
  }
  return out;
}

}  // namespace caweave
