#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "caweave/bitvec.hpp"
#include "caweave/error.hpp"
#include "caweave/sequence.hpp"

namespace caweave {

enum class Rule { r60 = 60, r90 = 90, r102 = 102, r150 = 150 };
enum class Boundary { cyclic, null };

// Each rule is a width-3 XOR neighborhood; 60 and 102 have one null tap.
struct Taps {
  bool left;
  bool self;
  bool right;
};

constexpr Taps rule_taps(Rule rule) {
  switch (rule) {
    case Rule::r60: return {true, true, false};
    case Rule::r90: return {true, false, true};
    case Rule::r102: return {false, true, true};
    case Rule::r150: return {true, true, true};
  }
  return {false, false, false};
}

inline Rule rule_from_number(int number) {
  switch (number) {
    case 60: return Rule::r60;
    case 90: return Rule::r90;
    case 102: return Rule::r102;
    case 150: return Rule::r150;
    default: throw Error(Errc::invalid_input, "unsupported rule " + std::to_string(number));
  }
}

class RuleVector {
 public:
  RuleVector(std::vector<Rule> cells, Boundary boundary) : cells_(std::move(cells)), boundary_(boundary) {
    left_ = BitVector(cells_.size());
    self_ = BitVector(cells_.size());
    right_ = BitVector(cells_.size());
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      const Taps taps = rule_taps(cells_[i]);
      left_.set(i, taps.left);
      self_.set(i, taps.self);
      right_.set(i, taps.right);
    }
  }

  static RuleVector uniform(Rule rule, std::size_t width, Boundary boundary) {
    return RuleVector(std::vector<Rule>(width, rule), boundary);
  }

  // 1 = rule 150, 0 = rule 90, null boundary.
  static RuleVector hybrid(const BitVector& bits) {
    std::vector<Rule> cells(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) cells[i] = bits.test(i) ? Rule::r150 : Rule::r90;
    return RuleVector(std::move(cells), Boundary::null);
  }

  // "102x7" / "60x7" (cyclic unless overridden) or a 90/150 string such as
  // "0111001110" (null unless overridden).
  static RuleVector parse(std::string_view text, std::optional<Boundary> boundary = std::nullopt) {
    const std::size_t x = text.find('x');
    if (x != std::string_view::npos) {
      const std::string rule_part(text.substr(0, x));
      const std::string width_part(text.substr(x + 1));
      int number = 0;
      std::size_t width = 0;
      try {
        std::size_t used = 0;
        number = std::stoi(rule_part, &used);
        if (used != rule_part.size()) throw Error(Errc::invalid_input, "bad rule");
        width = std::stoul(width_part, &used);
        if (used != width_part.size()) throw Error(Errc::invalid_input, "bad width");
      } catch (const std::exception&) {
        throw Error(Errc::invalid_input, "cannot parse rule vector '" + std::string(text) + "'");
      }
      return uniform(rule_from_number(number), width, boundary.value_or(Boundary::cyclic));
    }
    RuleVector rv = hybrid(BitVector::from_string(text));
    if (boundary) rv = RuleVector(rv.cells_, *boundary);
    return rv;
  }

  std::size_t width() const noexcept { return cells_.size(); }
  Boundary boundary() const noexcept { return boundary_; }
  const std::vector<Rule>& cells() const noexcept { return cells_; }
  Rule operator[](std::size_t i) const { return cells_.at(i); }

  bool is_regular() const {
    return std::adjacent_find(cells_.begin(), cells_.end(), std::not_equal_to<>()) == cells_.end();
  }

  // Regular 102/60 with cyclic boundary, or hybrid 90/150 with null boundary.
  bool is_canonical() const {
    const bool all_102_or_60 =
        is_regular() && !cells_.empty() && (cells_.front() == Rule::r102 || cells_.front() == Rule::r60);
    const bool all_90_150 = std::all_of(cells_.begin(), cells_.end(),
                                        [](Rule r) { return r == Rule::r90 || r == Rule::r150; });
    return (all_102_or_60 && boundary_ == Boundary::cyclic) || (all_90_150 && boundary_ == Boundary::null);
  }

  std::string to_string() const {
    const bool hybrid_form = std::all_of(cells_.begin(), cells_.end(),
                                         [](Rule r) { return r == Rule::r90 || r == Rule::r150; });
    if (!cells_.empty() && is_regular() && !hybrid_form) {
      return std::to_string(static_cast<int>(cells_.front())) + "x" + std::to_string(cells_.size());
    }
    std::string out;
    for (Rule r : cells_) {
      if (r == Rule::r150) {
        out += '1';
      } else if (r == Rule::r90) {
        out += '0';
      } else {
        return "mixed";
      }
    }
    return out;
  }

  const BitVector& left_taps() const noexcept { return left_; }
  const BitVector& self_taps() const noexcept { return self_; }
  const BitVector& right_taps() const noexcept { return right_; }

 private:
  std::vector<Rule> cells_;
  Boundary boundary_;
  BitVector left_;
  BitVector self_;
  BitVector right_;
};

// One synchronous update. All four rules are linear, so the new state is
// (left & L) ^ (self & S) ^ (right & R) computed word-parallel.
inline BitVector step(const RuleVector& rv, const BitVector& state) {
  if (state.size() != rv.width()) {
    throw Error(Errc::width_mismatch, "state width " + std::to_string(state.size()) + " != rule width " +
                                          std::to_string(rv.width()));
  }
  const std::size_t n = state.size();
  if (n == 0) return state;
  BitVector left_neighbor;   // [i] = x_(i-1)
  BitVector right_neighbor;  // [i] = x_(i+1)
  if (rv.boundary() == Boundary::cyclic) {
    left_neighbor = state.rotated(n - 1);
    right_neighbor = state.rotated(1);
  } else {
    left_neighbor = state.shifted_up(1);
    right_neighbor = state.shifted_down(1);
  }
  BitVector next = state & rv.self_taps();
  next ^= left_neighbor & rv.left_taps();
  next ^= right_neighbor & rv.right_taps();
  return next;
}

// Time x cell matrix; row 0 is the initial state.
class CaGrid {
 public:
  CaGrid() = default;
  CaGrid(std::vector<BitVector> rows, std::size_t width) : rows_(std::move(rows)), width_(width) {
    for (const auto& r : rows_) {
      if (r.size() != width_) throw Error(Errc::width_mismatch, "grid rows must share one width");
    }
  }

  static CaGrid from_rows(std::vector<BitVector> rows) {
    const std::size_t width = rows.empty() ? 0 : rows.front().size();
    return CaGrid(std::move(rows), width);
  }

  // Columns must all have the same length (the grid height).
  static CaGrid from_columns(const std::vector<BitVector>& columns) {
    if (columns.empty()) return {};
    const std::size_t height = columns.front().size();
    std::vector<BitVector> rows(height, BitVector(columns.size()));
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != height) throw Error(Errc::width_mismatch, "columns of unequal height");
      for (std::size_t i = 0; i < height; ++i) rows[i].set(j, columns[j].test(i));
    }
    return CaGrid(std::move(rows), columns.size());
  }

  std::size_t height() const noexcept { return rows_.size(); }
  std::size_t width() const noexcept { return width_; }
  const std::vector<BitVector>& rows() const noexcept { return rows_; }
  const BitVector& row(std::size_t r) const { return rows_.at(r); }
  bool cell(std::size_t r, std::size_t c) const { return rows_.at(r).test(c); }

  BitVector column_bits(std::size_t j) const {
    if (j >= width_) {
      throw Error(Errc::index_out_of_range,
                  "column " + std::to_string(j) + " of a width-" + std::to_string(width_) + " grid");
    }
    BitVector out(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) out.set(i, rows_[i].test(j));
    return out;
  }

  CaGrid mirrored() const {
    std::vector<BitVector> rows;
    rows.reserve(rows_.size());
    for (const auto& r : rows_) rows.push_back(r.reversed());
    return CaGrid(std::move(rows), width_);
  }

  friend bool operator==(const CaGrid&, const CaGrid&) = default;

 private:
  std::vector<BitVector> rows_;
  std::size_t width_ = 0;
};

inline CaGrid run(const RuleVector& rv, const BitVector& init, std::size_t steps) {
  std::vector<BitVector> rows;
  rows.reserve(steps + 1);
  rows.push_back(init);
  for (std::size_t s = 0; s < steps; ++s) rows.push_back(step(rv, rows.back()));
  return CaGrid(std::move(rows), rv.width());
}

// The grid must be at least one period tall and hold a whole number of
// periods of the column.
inline PeriodicSequence column(const CaGrid& grid, std::size_t j) {
  return PeriodicSequence::from_cycle(grid.column_bits(j));
}

// Rows needed to confirm a period bound by minimization.
constexpr std::size_t sufficient_height(std::size_t period_bound) { return 2 * period_bound; }

inline std::string render(const CaGrid& grid) {
  std::string out;
  for (const auto& row : grid.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) out += row.test(c) ? "█" : "·";
    out += '\n';
  }
  if (!out.empty()) out.pop_back();
  return out;
}

inline std::string to_csv(const CaGrid& grid) {
  std::string out;
  for (const auto& row : grid.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c != 0) out += ',';
      out += row.test(c) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

}  // namespace caweave
