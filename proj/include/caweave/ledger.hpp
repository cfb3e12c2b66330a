#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "caweave/bitvec.hpp"
#include "caweave/error.hpp"
#include "caweave/interleave.hpp"
#include "caweave/sequence.hpp"

namespace caweave {

// Decomposition of one CA column into its interleaved components, each a
// rotation of the base PN-sequence or the zero sequence.
struct ColumnLedgerEntry {
  std::size_t column = 0;
  std::vector<ShiftOrZero> parts;

  friend bool operator==(const ColumnLedgerEntry&, const ColumnLedgerEntry&) = default;
};

inline std::vector<ShiftOrZero> decompose_column(const BitVector& column_cycle, std::size_t t,
                                                 const PeriodicSequence& base) {
  std::vector<ShiftOrZero> parts;
  parts.reserve(t);
  for (const PeriodicSequence& stream : deinterleave(column_cycle, t)) {
    if (stream.is_zero()) {
      parts.push_back(ShiftOrZero::zero());
      continue;
    }
    const auto k = shift_between(base, stream);
    if (!k) {
      throw Error(Errc::decomposition_failed,
                  "stream " + stream.to_string() + " is neither zero nor a rotation of " + base.to_string());
    }
    parts.push_back(ShiftOrZero::shift(*k));
  }
  return parts;
}

// CSV rows: column_index,part_index,shift_or_ZERO
inline std::string ledger_csv(const std::vector<ColumnLedgerEntry>& ledger) {
  std::string out = "column_index,part_index,shift_or_ZERO\n";
  for (const auto& entry : ledger) {
    for (std::size_t p = 0; p < entry.parts.size(); ++p) {
      out += std::to_string(entry.column) + "," + std::to_string(p) + "," + entry.parts[p].to_string() + "\n";
    }
  }
  return out;
}

}  // namespace caweave
