#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "caweave/bitvec.hpp"
#include "caweave/error.hpp"
#include "caweave/gf2poly.hpp"

namespace caweave {

// Zech tables are fully materialized, so the degree is capped. Callers may
// pass a different cap explicitly (the CLI reads CAWEAVE_MAX_L).
inline constexpr int kDefaultMaxDegree = 24;
inline constexpr int kHardMaxDegree = 31;

namespace detail {

using PolyMask = std::uint64_t;

// a * b mod m over GF(2); m has degree `deg`, a and b are reduced.
inline PolyMask mulmod(PolyMask a, PolyMask b, PolyMask m, int deg) {
  const PolyMask top = PolyMask{1} << deg;
  PolyMask result = 0;
  while (b != 0) {
    if (b & 1u) result ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= m;
  }
  return result;
}

inline PolyMask powmod(PolyMask base, std::uint64_t e, PolyMask m, int deg) {
  PolyMask result = 1;
  while (e != 0) {
    if (e & 1u) result = mulmod(result, base, m, deg);
    base = mulmod(base, base, m, deg);
    e >>= 1;
  }
  return result;
}

inline int mask_degree(PolyMask a) { return a == 0 ? -1 : 63 - std::countl_zero(a); }

inline PolyMask mask_mod(PolyMask a, PolyMask m) {
  const int dm = mask_degree(m);
  for (int da = mask_degree(a); da >= dm; da = mask_degree(a)) a ^= m << (da - dm);
  return a;
}

inline PolyMask mask_gcd(PolyMask a, PolyMask b) {
  while (b != 0) {
    a = mask_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

// Distinct prime factors by trial division.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    out.push_back(f);
    while (n % f == 0) n /= f;
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline PolyMask to_mask(const BitVector& bits) {
  PolyMask m = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits.test(i)) m |= PolyMask{1} << i;
  }
  return m;
}

}  // namespace detail

enum class PrimitivityFailure { reducible, imprimitive };

class NotPrimitiveError : public Error {
 public:
  NotPrimitiveError(PrimitivityFailure failure, const std::string& poly)
      : Error(Errc::reducible_or_non_primitive,
              poly + (failure == PrimitivityFailure::reducible ? " is reducible"
                                                               : " is irreducible but not primitive")),
        failure_(failure) {}

  PrimitivityFailure failure() const noexcept { return failure_; }

 private:
  PrimitivityFailure failure_;
};

class PrimitivePolynomial {
 public:
  // `coefficients` is ascending: p_0, p_1, ..., p_L.
  static PrimitivePolynomial validate(const BitVector& coefficients, int max_degree = kDefaultMaxDegree) {
    if (coefficients.size() < 3) {
      throw Error(Errc::degree_out_of_range, "primitive polynomial needs degree >= 2");
    }
    if (!coefficients.test(coefficients.size() - 1)) {
      throw Error(Errc::not_monic, "leading coefficient of '" + coefficients.to_string() + "' is 0");
    }
    const int degree = static_cast<int>(coefficients.size()) - 1;
    if (degree > max_degree || degree > kHardMaxDegree) {
      throw Error(Errc::degree_out_of_range,
                  "degree " + std::to_string(degree) + " exceeds cap " + std::to_string(max_degree));
    }
    const Gf2Poly poly(coefficients);
    const detail::PolyMask mask = detail::to_mask(coefficients);
    if (!(mask & 1u)) throw NotPrimitiveError(PrimitivityFailure::reducible, poly.to_string());

    // Ben-Or: p is irreducible iff gcd(p, x^(2^i) - x) = 1 for i <= L/2.
    detail::PolyMask x_pow = 2;  // x^(2^i) mod p, starting at i = 0
    for (int i = 1; i <= degree / 2; ++i) {
      x_pow = detail::mulmod(x_pow, x_pow, mask, degree);
      if (detail::mask_gcd(mask, x_pow ^ 2u) != 1) {
        throw NotPrimitiveError(PrimitivityFailure::reducible, poly.to_string());
      }
    }

    const std::uint64_t period = (std::uint64_t{1} << degree) - 1;
    for (std::uint64_t q : detail::prime_factors(period)) {
      if (detail::powmod(2, period / q, mask, degree) == 1) {
        throw NotPrimitiveError(PrimitivityFailure::imprimitive, poly.to_string());
      }
    }
    return PrimitivePolynomial(poly, mask, degree);
  }

  static PrimitivePolynomial parse(std::string_view text, int max_degree = kDefaultMaxDegree) {
    const bool human = text.find('x') != std::string_view::npos || text.find('+') != std::string_view::npos;
    if (human) return validate(Gf2Poly::parse(text).coefficients(), max_degree);
    return validate(BitVector::from_string(text), max_degree);
  }

  int degree() const noexcept { return degree_; }
  std::uint64_t period() const noexcept { return (std::uint64_t{1} << degree_) - 1; }
  const Gf2Poly& poly() const noexcept { return poly_; }
  detail::PolyMask mask() const noexcept { return mask_; }

  std::string to_string() const { return poly_.to_string(); }
  std::string to_bit_string() const { return poly_.to_bit_string(); }

  friend bool operator==(const PrimitivePolynomial& a, const PrimitivePolynomial& b) noexcept {
    return a.mask_ == b.mask_;
  }

 private:
  PrimitivePolynomial(Gf2Poly poly, detail::PolyMask mask, int degree)
      : poly_(std::move(poly)), mask_(mask), degree_(degree) {}

  Gf2Poly poly_;
  detail::PolyMask mask_ = 0;
  int degree_ = 0;
};

// Every primitive polynomial of the given degree, in increasing order of
// their coefficient masks.
inline std::vector<PrimitivePolynomial> primitive_polynomials(int degree) {
  std::vector<PrimitivePolynomial> out;
  const detail::PolyMask lead = detail::PolyMask{1} << degree;
  for (detail::PolyMask low = 1; low < lead; low += 2) {
    BitVector bits(static_cast<std::size_t>(degree) + 1);
    const detail::PolyMask mask = lead | low;
    for (int i = 0; i <= degree; ++i) bits.set(static_cast<std::size_t>(i), (mask >> i) & 1u);
    try {
      out.push_back(PrimitivePolynomial::validate(bits, degree));
    } catch (const NotPrimitiveError&) {
    }
  }
  return out;
}

// Element of GF(2^L) in the polynomial basis {1, a, ..., a^(L-1)}.
struct FieldElement {
  std::uint32_t bits = 0;

  bool is_zero() const noexcept { return bits == 0; }
  friend bool operator==(FieldElement, FieldElement) = default;
};

class Gf2mField {
 public:
  explicit Gf2mField(const PrimitivePolynomial& p) : mask_(p.mask()), degree_(p.degree()) {}

  static FieldElement zero() { return {0}; }
  static FieldElement one() { return {1}; }
  FieldElement alpha() const { return {2}; }

  FieldElement add(FieldElement a, FieldElement b) const { return {a.bits ^ b.bits}; }
  FieldElement mul(FieldElement a, FieldElement b) const {
    return {static_cast<std::uint32_t>(detail::mulmod(a.bits, b.bits, mask_, degree_))};
  }
  FieldElement alpha_pow(std::uint64_t e) const {
    return {static_cast<std::uint32_t>(detail::powmod(2, e, mask_, degree_))};
  }

 private:
  detail::PolyMask mask_;
  int degree_;
};

// Z(t) for a Zech logarithm, where Z(0) is infinite (alpha^inf = 0).
class ZechLog {
 public:
  static ZechLog infinity() { return ZechLog(true, 0); }
  static ZechLog finite(std::uint64_t exponent) { return ZechLog(false, exponent); }

  bool is_infinite() const noexcept { return infinite_; }
  std::uint64_t exponent() const {
    if (infinite_) throw Error(Errc::invalid_input, "exponent of an infinite Zech logarithm");
    return exponent_;
  }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(exponent_); }

  friend bool operator==(const ZechLog&, const ZechLog&) = default;

 private:
  ZechLog(bool infinite, std::uint64_t exponent) : infinite_(infinite), exponent_(exponent) {}

  bool infinite_;
  std::uint64_t exponent_;
};

// 1 + alpha^t = alpha^Z(t) for every t mod 2^L - 1.
class ZechTable {
 public:
  static ZechTable build(const PrimitivePolynomial& p) {
    const std::uint64_t period = p.period();
    const detail::PolyMask top = detail::PolyMask{1} << p.degree();
    // Discrete log of every nonzero element, one pass over the powers of alpha.
    std::vector<std::uint32_t> log(period + 1, 0);
    detail::PolyMask x = 1;
    for (std::uint64_t e = 0; e < period; ++e) {
      log[x] = static_cast<std::uint32_t>(e);
      x <<= 1;
      if (x & top) x ^= p.mask();
    }
    std::vector<std::uint32_t> entries(period - 1);
    x = 2;  // alpha^1
    for (std::uint64_t t = 1; t < period; ++t) {
      entries[t - 1] = log[x ^ 1u];
      x <<= 1;
      if (x & top) x ^= p.mask();
    }
    return ZechTable(p, std::move(entries));
  }

  ZechLog operator()(std::int64_t t) const {
    const auto period = static_cast<std::int64_t>(period_);
    const auto reduced = static_cast<std::uint64_t>(((t % period) + period) % period);
    if (reduced == 0) return ZechLog::infinity();
    return ZechLog::finite(entries_[reduced - 1]);
  }

  const PrimitivePolynomial& poly() const noexcept { return poly_; }
  std::uint64_t period() const noexcept { return period_; }
  // Entry count including Z(0) = inf.
  std::size_t size() const noexcept { return entries_.size() + 1; }

 private:
  ZechTable(PrimitivePolynomial p, std::vector<std::uint32_t> entries)
      : poly_(std::move(p)), period_(poly_.period()), entries_(std::move(entries)) {}

  PrimitivePolynomial poly_;
  std::uint64_t period_;
  std::vector<std::uint32_t> entries_;
};

}  // namespace caweave
