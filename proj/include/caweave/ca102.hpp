#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "caweave/bitvec.hpp"
#include "caweave/ca_engine.hpp"
#include "caweave/error.hpp"
#include "caweave/gf2field.hpp"
#include "caweave/interleave.hpp"
#include "caweave/ledger.hpp"
#include "caweave/sequence.hpp"

namespace caweave {

// Columns 0..width-1 of the cyclic 102-CA whose column 0 is `column0`.
// Rule 102 (x_j <- x_j + x_(j+1)) rearranges to c_(j+1)[i] = c_j[i] + c_j[i+1],
// so each column is determined by the one to its left.
inline std::vector<BitVector> derive_grid(const BitVector& column0, std::size_t width) {
  std::vector<BitVector> columns;
  columns.reserve(width);
  if (width == 0) return columns;
  columns.push_back(column0);
  BitVector scratch;
  for (std::size_t j = 1; j < width; ++j) {
    BitVector next = columns.back();
    next.rotate_into(scratch, 1);
    next ^= scratch;
    columns.push_back(std::move(next));
  }
  return columns;
}

// T / gcd(T, Z(1)): width of the 102-CA generating the PN-sequence itself.
inline std::uint64_t pn_ca_length(const ZechTable& zech) {
  const std::uint64_t period = zech.period();
  return period / std::gcd(period, zech(1).exponent());
}

// 2^t_exp * T / gcd(T, Z(1)).
inline std::uint64_t predicted_length(const ZechTable& zech, unsigned t_exp) {
  return (std::uint64_t{1} << t_exp) * pn_ca_length(zech);
}

// Smallest width j >= 1 at which the derived column j equals column 0, i.e.
// the cyclic 102-CA closes up. nullopt when no j <= cap works.
inline std::optional<std::size_t> minimal_length(const BitVector& column0, std::size_t cap) {
  if (column0.empty()) throw Error(Errc::empty_input, "empty target column");
  BitVector current = column0;
  BitVector scratch;
  for (std::size_t j = 1; j <= cap; ++j) {
    current.rotate_into(scratch, 1);
    current ^= scratch;
    if (current == column0) return j;
  }
  return std::nullopt;
}

inline std::optional<std::size_t> minimal_length(const PeriodicSequence& target, std::size_t cap) {
  return minimal_length(target.bits(), cap);
}

// Shift ledger for a 2-stream spec from the Zech recurrences alone, without
// building any sequence.
inline std::vector<ColumnLedgerEntry> predicted_ledger(const InterleaveSpec& spec, const ZechTable& zech,
                                                       std::size_t width) {
  if (spec.streams() != 2) {
    throw Error(Errc::unsupported_t, "shift recurrences are only available for 2 streams, got " +
                                         std::to_string(spec.streams()));
  }
  const std::uint64_t period = zech.period();
  const std::uint64_t k1 = spec.shifts[0] % period;
  const std::uint64_t k = (spec.shifts[1] % period + period - k1) % period;
  const std::uint64_t d = zech(1).exponent();
  auto at = [&](std::uint64_t offset) { return ShiftOrZero::shift((k1 + offset) % period); };

  std::vector<ColumnLedgerEntry> ledger{};
  ledger.reserve(width);
  if (k == 0) {
    // Column 2r: (rD, rD). Column 2r+1: (zero, (r+1)D).
    for (std::size_t j = 0; j < width; ++j) {
      const std::uint64_t r = j / 2;
      if (j % 2 == 0) {
        ledger.push_back({j, {at(r * d % period), at(r * d % period)}});
      } else {
        ledger.push_back({j, {ShiftOrZero::zero(), at((r + 1) * d % period)}});
      }
    }
    return ledger;
  }
  if (k == 1) {
    // Column 2r: (rD, rD + 1). Column 2r+1: ((r+1)D, zero).
    for (std::size_t j = 0; j < width; ++j) {
      const std::uint64_t r = j / 2;
      if (j % 2 == 0) {
        ledger.push_back({j, {at(r * d % period), at((r * d + 1) % period)}});
      } else {
        ledger.push_back({j, {at((r + 1) * d % period), ShiftOrZero::zero()}});
      }
    }
    return ledger;
  }
  // k1' = k1 + Z(k2 - k1), k2' = k1 + 1 + Z(k2 - k1 - 1), with the zero
  // sequence absorbed if a difference ever vanishes.
  ShiftOrZero first = ShiftOrZero::shift(k1);
  ShiftOrZero second = ShiftOrZero::shift((k1 + k) % period);
  for (std::size_t j = 0; j < width; ++j) {
    ledger.push_back({j, {first, second}});
    const ShiftOrZero next_first = add_shifts(zech, first, second);
    const ShiftOrZero next_second = add_shifts(zech, second, advance(first, 1, period));
    first = next_first;
    second = next_second;
  }
  return ledger;
}

// Shift ledger measured on the derived columns of `target_cycle`.
inline std::vector<ColumnLedgerEntry> observed_ledger(const BitVector& target_cycle, std::size_t t,
                                                      const PeriodicSequence& base, std::size_t width) {
  std::vector<ColumnLedgerEntry> ledger{};
  ledger.reserve(width);
  const auto columns = derive_grid(target_cycle, width);
  for (std::size_t j = 0; j < columns.size(); ++j) ledger.push_back({j, decompose_column(columns[j], t, base)});
  return ledger;
}

struct RecurrenceShift {
  std::size_t column = 0;
  std::size_t shift = 0;  // column j equals column 0 advanced by `shift`
};

struct Ca102Synthesis {
  InterleaveSpec spec;
  InterleaveReport report;
  // Zero when the stream count is not a power of two (no closed form).
  std::uint64_t predicted_length = 0;
  std::size_t minimal_length = 0;
  CaGrid grid{};
  std::vector<ColumnLedgerEntry> ledger{};
  std::vector<ColumnLedgerEntry> predicted{};  // only for 2 streams
  std::vector<RecurrenceShift> recurrence_shifts{};
  bool cyclic_closure = false;
  bool engine_agrees = false;
};

// Builds the 102-CA of minimal width whose column 0 is the spec's
// interleaving. `cap` defaults to streams * T.
inline Ca102Synthesis synthesize_102(const InterleaveSpec& spec, std::optional<std::size_t> cap = std::nullopt) {
  Ca102Synthesis out{spec, analyze(spec)};
  require_max_lc(out.report);
  const ZechTable zech = ZechTable::build(spec.poly);
  const std::size_t streams = spec.streams();
  const BitVector cycle = build_cycle(spec);
  const PeriodicSequence base = pn_sequence(spec.poly, spec.seed);

  if (spec.power_of_two()) {
    out.predicted_length = predicted_length(zech, static_cast<unsigned>(std::countr_zero(streams)));
  }
  const std::size_t limit = cap.value_or(streams * static_cast<std::size_t>(spec.poly.period()));
  const auto width = minimal_length(cycle, limit);
  if (!width) {
    // For 2^t streams the closed form bounds the width, so a miss is a bug.
    throw Error(spec.power_of_two() ? Errc::not_found : Errc::budget_exceeded,
                "no cyclic closure within " + std::to_string(limit) + " columns");
  }
  out.minimal_length = *width;

  const auto columns = derive_grid(cycle, *width + 1);
  out.cyclic_closure = columns.back() == columns.front();
  out.grid = CaGrid::from_columns({columns.begin(), columns.end() - 1});
  out.engine_agrees =
      run(RuleVector::uniform(Rule::r102, *width, Boundary::cyclic), out.grid.row(0), out.grid.height() - 1) ==
      out.grid;

  for (std::size_t j = 0; j < *width; ++j) out.ledger.push_back({j, decompose_column(columns[j], streams, base)});
  if (streams == 2) out.predicted = predicted_ledger(spec, zech, *width);

  // Every t-th column is a rotation of column 0 only for 2^k streams.
  if (!spec.power_of_two()) return out;
  const PeriodicSequence col0 = PeriodicSequence::from_cycle(columns.front());
  for (std::size_t j = streams; j < *width; j += streams) {
    const auto k = shift_between(col0, PeriodicSequence::from_cycle(columns[j]));
    if (!k) throw Error(Errc::decomposition_failed, "column " + std::to_string(j) + " is not a rotation of column 0");
    out.recurrence_shifts.push_back({j, *k});
  }
  return out;
}

}  // namespace caweave
