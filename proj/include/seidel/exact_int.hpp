#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace seidel {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Raised by the fixed-width arithmetic tiers; callers retry with a wider type.
struct ArithmeticOverflow : std::overflow_error {
  ArithmeticOverflow() : std::overflow_error("integer overflow") {}
};

// Fixed-width integer with overflow detection. T is int64_t or __int128.
template <class T>
struct Checked {
  T v{0};

  Checked() = default;
  Checked(T x) : v(x) {}
  Checked(int x) : v(x) {}

  friend Checked operator+(Checked a, Checked b) {
    T r;
    if (__builtin_add_overflow(a.v, b.v, &r)) throw ArithmeticOverflow{};
    return r;
  }
  friend Checked operator-(Checked a, Checked b) {
    T r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw ArithmeticOverflow{};
    return r;
  }
  friend Checked operator*(Checked a, Checked b) {
    T r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw ArithmeticOverflow{};
    return r;
  }
  friend Checked operator/(Checked a, Checked b) { return Checked(a.v / b.v); }
  friend Checked operator%(Checked a, Checked b) { return Checked(a.v % b.v); }
  friend Checked operator-(Checked a) {
    T r;
    if (__builtin_sub_overflow(T(0), a.v, &r)) throw ArithmeticOverflow{};
    return r;
  }
  Checked& operator+=(Checked b) { return *this = *this + b; }
  Checked& operator-=(Checked b) { return *this = *this - b; }
  Checked& operator*=(Checked b) { return *this = *this * b; }
  friend bool operator==(Checked a, Checked b) { return a.v == b.v; }
  friend bool operator!=(Checked a, Checked b) { return a.v != b.v; }
  friend bool operator<(Checked a, Checked b) { return a.v < b.v; }
  friend bool operator>(Checked a, Checked b) { return a.v > b.v; }
  friend bool operator<=(Checked a, Checked b) { return a.v <= b.v; }
  friend bool operator>=(Checked a, Checked b) { return a.v >= b.v; }
};

using CheckedI64 = Checked<std::int64_t>;
using CheckedI128 = Checked<__int128>;

inline int sign_of(const CheckedI64& x) { return x.v < 0 ? -1 : (x.v > 0 ? 1 : 0); }
inline int sign_of(const CheckedI128& x) { return x.v < 0 ? -1 : (x.v > 0 ? 1 : 0); }
inline int sign_of(const BigInt& x) { return x.sign(); }

inline bool is_zero(const CheckedI64& x) { return x.v == 0; }
inline bool is_zero(const CheckedI128& x) { return x.v == 0; }
inline bool is_zero(const BigInt& x) { return x.is_zero(); }

template <class T>
BigInt to_bigint(const Checked<T>& x) {
  if constexpr (sizeof(T) <= 8) return BigInt(x.v);
  // __int128 has no direct cpp_int conversion
  bool neg = x.v < 0;
  unsigned __int128 m = neg ? -(unsigned __int128)x.v : (unsigned __int128)x.v;
  BigInt r = BigInt(static_cast<std::uint64_t>(m >> 64));
  r <<= 64;
  r += BigInt(static_cast<std::uint64_t>(m));
  return neg ? -r : r;
}
inline BigInt to_bigint(const BigInt& x) { return x; }

// Exact division; the quotient must leave no remainder.
template <class T>
T exact_div(const T& a, const T& b) {
  T q = a / b;
  if (!is_zero(a % b)) throw std::logic_error("exact_div: nonzero remainder");
  return q;
}

}  // namespace seidel
