#pragma once

// Slow reference implementations on plain strings and vectors, written
// independently of the library so tests can compare against them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace oracle {

using Bits = std::vector<int>;

inline Bits bits(const std::string& s) {
  Bits out;
  for (char c : s) out.push_back(c == '1');
  return out;
}

inline std::string str(const Bits& b) {
  std::string out;
  for (int v : b) out += v ? '1' : '0';
  return out;
}

inline Bits rotate(const Bits& b, std::size_t k) {
  Bits out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = b[(i + k) % b.size()];
  return out;
}

inline Bits xor_bits(const Bits& a, const Bits& b) {
  Bits out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
  return out;
}

// Polynomial as ascending coefficient bits in an integer.
inline std::uint64_t poly_from_terms(const std::vector<int>& exponents) {
  std::uint64_t p = 0;
  for (int e : exponents) p ^= std::uint64_t{1} << e;
  return p;
}

inline int deg(std::uint64_t p) {
  int d = -1;
  for (int i = 0; i < 64; ++i) {
    if ((p >> i) & 1u) d = i;
  }
  return d;
}

// alpha^e as a polynomial in alpha reduced mod p, by repeated multiplication.
inline std::uint64_t alpha_power(std::uint64_t p, std::uint64_t e) {
  const int L = deg(p);
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    v <<= 1;
    if ((v >> L) & 1u) v ^= p;
  }
  return v;
}

// Z(t) by searching for the exponent of 1 + alpha^t; nullopt for infinity.
inline std::optional<std::uint64_t> zech(std::uint64_t p, std::uint64_t t) {
  const std::uint64_t T = (std::uint64_t{1} << deg(p)) - 1;
  const std::uint64_t target = alpha_power(p, t % T) ^ 1u;
  if (target == 0) return std::nullopt;
  for (std::uint64_t z = 0; z < T; ++z) {
    if (alpha_power(p, z) == target) return z;
  }
  return std::nullopt;
}

// Direct LFSR: a_(i+L) = sum_j p_j a_(i+j).
inline Bits lfsr(std::uint64_t p, const Bits& seed, std::size_t n) {
  const int L = deg(p);
  Bits a = seed;
  while (a.size() < n) {
    int next = 0;
    const std::size_t i = a.size() - L;
    for (int j = 0; j < L; ++j) next ^= ((p >> j) & 1u) ? a[i + j] : 0;
    a.push_back(next);
  }
  a.resize(n);
  return a;
}

// Linear complexity of a periodic sequence given by one period: the least L
// for which some recurrence of order L holds cyclically, by Gaussian
// elimination over GF(2).
inline std::size_t linear_complexity(const Bits& s) {
  const std::size_t n = s.size();
  bool all_zero = true;
  for (int v : s) all_zero = all_zero && v == 0;
  if (all_zero) return 0;
  for (std::size_t L = 1; L <= n; ++L) {
    // rows: [s_i .. s_(i+L-1) | s_(i+L)]
    std::vector<Bits> rows;
    for (std::size_t i = 0; i < n; ++i) {
      Bits r(L + 1);
      for (std::size_t j = 0; j <= L; ++j) r[j] = s[(i + j) % n];
      rows.push_back(r);
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < L && rank < rows.size(); ++c) {
      std::size_t piv = rank;
      while (piv < rows.size() && !rows[piv][c]) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[rank], rows[piv]);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r != rank && rows[r][c]) rows[r] = xor_bits(rows[r], rows[rank]);
      }
      ++rank;
    }
    bool consistent = true;
    for (std::size_t r = rank; r < rows.size(); ++r) consistent = consistent && rows[r][L] == 0;
    if (consistent) return L;
  }
  return n;
}

enum class Boundary { cyclic, null };

// rule numbers 60, 90, 102, 150 as neighbourhood XORs
inline Bits ca_step(const std::vector<int>& rules, const Bits& x, Boundary b) {
  const std::size_t n = x.size();
  Bits out(n);
  for (std::size_t i = 0; i < n; ++i) {
    int left = 0;
    int right = 0;
    if (b == Boundary::cyclic) {
      left = x[(i + n - 1) % n];
      right = x[(i + 1) % n];
    } else {
      left = i > 0 ? x[i - 1] : 0;
      right = i + 1 < n ? x[i + 1] : 0;
    }
    switch (rules[i]) {
      case 60: out[i] = left ^ x[i]; break;
      case 90: out[i] = left ^ right; break;
      case 102: out[i] = x[i] ^ right; break;
      case 150: out[i] = left ^ x[i] ^ right; break;
      default: break;
    }
  }
  return out;
}

inline std::vector<Bits> ca_run(const std::vector<int>& rules, const Bits& init, std::size_t steps, Boundary b) {
  std::vector<Bits> rows{init};
  for (std::size_t s = 0; s < steps; ++s) rows.push_back(ca_step(rules, rows.back(), b));
  return rows;
}

inline std::vector<int> hybrid_rules(const std::string& s) {
  std::vector<int> out;
  for (char c : s) out.push_back(c == '1' ? 150 : 90);
  return out;
}

// Whether p annihilates the null-boundary hybrid CA: p(T) e = 0 for every unit
// vector e. For irreducible p of degree |rules| this pins the characteristic
// polynomial to p.
inline bool annihilates(std::uint64_t p, const std::string& rules) {
  const std::size_t n = rules.size();
  const auto r = hybrid_rules(rules);
  for (std::size_t u = 0; u < n; ++u) {
    Bits e(n);
    e[u] = 1;
    Bits acc(n);
    Bits cur = e;
    for (int k = 0; k <= deg(p); ++k) {
      if ((p >> k) & 1u) acc = xor_bits(acc, cur);
      cur = ca_step(r, cur, Boundary::null);
    }
    for (int v : acc) {
      if (v) return false;
    }
  }
  return true;
}

// Smallest width w such that the 102-CA column chain returns to column 0.
inline std::optional<std::size_t> ca102_width(const Bits& column0, std::size_t cap) {
  Bits c = column0;
  for (std::size_t w = 1; w <= cap; ++w) {
    c = xor_bits(c, rotate(c, 1));
    if (c == column0) return w;
  }
  return std::nullopt;
}

inline std::vector<Bits> columns_of(const std::vector<Bits>& rows) {
  std::vector<Bits> cols(rows.empty() ? 0 : rows[0].size(), Bits(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) cols[j][i] = rows[i][j];
  }
  return cols;
}

}  // namespace oracle
