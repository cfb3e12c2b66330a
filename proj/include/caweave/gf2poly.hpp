#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "caweave/bitvec.hpp"
#include "caweave/error.hpp"

namespace caweave {

// Polynomial over GF(2). Coefficients are stored ascending (bit i is the
// coefficient of x^i) and trimmed, so the zero polynomial has no bits.
class Gf2Poly {
 public:
  Gf2Poly() = default;
  explicit Gf2Poly(BitVector coefficients) : coeffs_(std::move(coefficients)) { trim(); }

  static Gf2Poly one() { return monomial(0); }
  static Gf2Poly monomial(std::size_t k) {
    BitVector bits(k + 1);
    bits.set(k);
    return Gf2Poly(std::move(bits));
  }

  // Accepts either the human form "1+x+x^3" or an ascending coefficient
  // string "1101".
  static Gf2Poly parse(std::string_view text) {
    std::string compact;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    }
    if (compact.empty()) throw Error(Errc::invalid_input, "empty polynomial");
    if (compact.find('x') == std::string::npos && compact.find('X') == std::string::npos &&
        compact.find('+') == std::string::npos) {
      return Gf2Poly(BitVector::from_string(compact));
    }
    BitVector bits;
    std::size_t pos = 0;
    while (pos <= compact.size()) {
      const std::size_t next = std::min(compact.find('+', pos), compact.size());
      const std::string term = compact.substr(pos, next - pos);
      const std::size_t exponent = parse_term(term);
      if (bits.size() <= exponent) bits.resize(exponent + 1);
      bits.flip(exponent);
      pos = next + 1;
    }
    return Gf2Poly(std::move(bits));
  }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool coefficient(std::size_t i) const noexcept { return i < coeffs_.size() && coeffs_.test(i); }
  const BitVector& coefficients() const noexcept { return coeffs_; }

  Gf2Poly& operator+=(const Gf2Poly& other) {
    BitVector rhs = other.coeffs_;
    const std::size_t n = std::max(coeffs_.size(), rhs.size());
    coeffs_.resize(n);
    rhs.resize(n);
    coeffs_ ^= rhs;
    trim();
    return *this;
  }
  friend Gf2Poly operator+(Gf2Poly lhs, const Gf2Poly& rhs) { return lhs += rhs; }

  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    BitVector wide = b.coeffs_;
    wide.resize(a.coeffs_.size() + b.coeffs_.size() - 1);
    BitVector acc(wide.size());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_.test(i)) acc ^= wide.shifted_up(i);
    }
    return Gf2Poly(std::move(acc));
  }

  // Returns {quotient, remainder}.
  static std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& num, const Gf2Poly& den) {
    if (den.is_zero()) throw Error(Errc::invalid_input, "polynomial division by zero");
    if (num.degree() < den.degree()) return {Gf2Poly{}, num};
    BitVector rem = num.coeffs_;
    BitVector quot(static_cast<std::size_t>(num.degree() - den.degree()) + 1);
    BitVector den_wide = den.coeffs_;
    den_wide.resize(rem.size());
    const std::size_t dd = static_cast<std::size_t>(den.degree());
    for (std::size_t top = rem.size(); top-- > dd;) {
      if (!rem.test(top)) continue;
      quot.set(top - dd);
      rem ^= den_wide.shifted_up(top - dd);
    }
    return {Gf2Poly(std::move(quot)), Gf2Poly(std::move(rem))};
  }

  friend Gf2Poly operator%(const Gf2Poly& a, const Gf2Poly& b) { return divmod(a, b).second; }

  bool divides(const Gf2Poly& other) const { return (other % *this).is_zero(); }

  Gf2Poly pow(unsigned exponent) const {
    Gf2Poly result = one();
    Gf2Poly base = *this;
    while (exponent != 0) {
      if (exponent & 1u) result = result * base;
      exponent >>= 1;
      if (exponent != 0) base = base * base;
    }
    return result;
  }

  // p(x^k)
  Gf2Poly compose_power(std::size_t k) const {
    if (is_zero()) return {};
    BitVector bits(static_cast<std::size_t>(degree()) * k + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_.test(i)) bits.set(i * k);
    }
    return Gf2Poly(std::move(bits));
  }

  friend bool operator==(const Gf2Poly& a, const Gf2Poly& b) noexcept { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!coeffs_.test(i)) continue;
      if (!out.empty()) out += '+';
      if (i == 0) {
        out += '1';
      } else if (i == 1) {
        out += 'x';
      } else {
        out += "x^" + std::to_string(i);
      }
    }
    return out;
  }

  std::string to_bit_string() const { return is_zero() ? "0" : coeffs_.to_string(); }

 private:
  static std::size_t parse_term(const std::string& term) {
    if (term == "1") return 0;
    if (term == "x" || term == "X") return 1;
    if (term.size() > 2 && (term[0] == 'x' || term[0] == 'X') && term[1] == '^') {
      std::size_t used = 0;
      unsigned long value = 0;
      try {
        value = std::stoul(term.substr(2), &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == term.size() - 2) return value;
    }
    throw Error(Errc::invalid_input, "cannot parse polynomial term '" + term + "'");
  }

  void trim() {
    std::size_t n = coeffs_.size();
    while (n > 0 && !coeffs_.test(n - 1)) --n;
    if (n != coeffs_.size()) coeffs_.resize(n);
  }

  BitVector coeffs_;
};

}  // namespace caweave
