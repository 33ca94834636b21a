#ifndef CLFREE_MONOMIAL_HPP
#define CLFREE_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>

#include "clfree/ring.hpp"

namespace clfree {

// Exponent vector. Unused trailing slots are always zero, so comparisons and
// hashing may look at the whole array regardless of ring arity.
struct Monomial {
  std::array<std::uint32_t, kMaxVars> e{};

  int degree() const {
    int d = 0;
    for (auto x : e) d += static_cast<int>(x);
    return d;
  }

  bool is_one() const {
    return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
  }

  static Monomial var(std::size_t i, std::uint32_t power = 1) {
    Monomial m;
    m.e[i] = power;
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
  }

  // a / b; requires divides(b, a).
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// b is a multiple of a.
inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = std::min(a.e[i], b.e[i]);
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] != 0 && b.e[i] != 0) return false;
  return true;
}

enum class MonomialOrder { Grevlex, Lex };

// Three-way comparison: >0 when a is larger. Only the first n slots matter.
inline int compare_grevlex(const Monomial& a, const Monomial& b, std::size_t n) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = n; i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

inline int compare_lex(const Monomial& a, const Monomial& b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
  }
  return 0;
}

inline int compare(MonomialOrder order, const Monomial& a, const Monomial& b, std::size_t n) {
  return order == MonomialOrder::Grevlex ? compare_grevlex(a, b, n) : compare_lex(a, b, n);
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : m.e) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace clfree

#endif
