#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace equinoether {

using Rational = mpq_class;

inline Rational rational_of(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Small prime field, handy as an alternate coefficient ring in tests.
template <std::uint32_t P>
struct ModP {
  std::uint32_t v = 0;

  ModP() = default;
  ModP(long x) {
    long r = x % static_cast<long>(P);
    if (r < 0) r += P;
    v = static_cast<std::uint32_t>(r);
  }

  friend ModP operator+(ModP a, ModP b) { return from_raw((a.v + b.v) % P); }
  friend ModP operator-(ModP a, ModP b) { return from_raw((a.v + P - b.v) % P); }
  friend ModP operator*(ModP a, ModP b) {
    return from_raw(static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a.v) * b.v) % P));
  }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  ModP operator-() const { return from_raw(v == 0 ? 0 : P - v); }
  ModP& operator+=(ModP b) { return *this = *this + b; }
  ModP& operator-=(ModP b) { return *this = *this - b; }
  ModP& operator*=(ModP b) { return *this = *this * b; }
  ModP& operator/=(ModP b) { return *this = *this / b; }
  bool operator==(const ModP&) const = default;
  bool operator<(const ModP& b) const { return v < b.v; }

  ModP inverse() const {  // P assumed prime
    ModP r = from_raw(1), base = *this;
    std::uint32_t e = P - 2;
    while (e) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  static ModP from_raw(std::uint32_t raw) {
    ModP x;
    x.v = raw;
    return x;
  }
};

template <std::uint32_t P>
inline std::string to_string(const ModP<P>& x) {
  return std::to_string(x.v);
}

}  // namespace equinoether
