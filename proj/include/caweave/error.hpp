#pragma once

#include <stdexcept>
#include <string>

namespace caweave {

enum class Errc {
  invalid_input,
  degree_out_of_range,
  not_monic,
  reducible_or_non_primitive,
  zero_state,
  empty_input,
  period_mismatch,
  not_divisible,
  width_mismatch,
  index_out_of_range,
  unsupported_t,
  max_lc_required,
  budget_exceeded,
  // The remaining codes mean a proven property failed to hold, i.e. a bug.
  decomposition_failed,
  not_found,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_input: return "InvalidInput";
    case Errc::degree_out_of_range: return "DegreeOutOfRange";
    case Errc::not_monic: return "NotMonic";
    case Errc::reducible_or_non_primitive: return "ReducibleOrNonPrimitive";
    case Errc::zero_state: return "ZeroState";
    case Errc::empty_input: return "EmptyInput";
    case Errc::period_mismatch: return "PeriodMismatch";
    case Errc::not_divisible: return "NotDivisible";
    case Errc::width_mismatch: return "WidthMismatch";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::unsupported_t: return "UnsupportedT";
    case Errc::max_lc_required: return "MaxLcRequired";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::decomposition_failed: return "DecompositionFailed";
    case Errc::not_found: return "NotFound";
  }
  return "Unknown";
}

inline bool is_invariant_breach(Errc code) {
  return code == Errc::decomposition_failed || code == Errc::not_found;
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace caweave
