#pragma once

// Coefficient rings for Laurent polynomials.
//
// The default ring is an arbitrary-precision integer. `Checked<T>` is a
// fixed-width fast path that throws on overflow instead of wrapping.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace pkl {

using BigInt = boost::multiprecision::cpp_int;

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

template <std::signed_integral T>
class Checked {
 public:
  constexpr Checked() = default;
  constexpr Checked(T value) : value_(value) {}  // NOLINT(implicit)

  constexpr T value() const { return value_; }

  friend Checked operator+(Checked a, Checked b) {
    T r;
    if (__builtin_add_overflow(a.value_, b.value_, &r)) throw OverflowError("coefficient overflow in addition");
    return r;
  }
  friend Checked operator-(Checked a, Checked b) {
    T r;
    if (__builtin_sub_overflow(a.value_, b.value_, &r)) throw OverflowError("coefficient overflow in subtraction");
    return r;
  }
  friend Checked operator*(Checked a, Checked b) {
    T r;
    if (__builtin_mul_overflow(a.value_, b.value_, &r)) throw OverflowError("coefficient overflow in multiplication");
    return r;
  }
  Checked operator-() const {
    if (value_ == std::numeric_limits<T>::min()) throw OverflowError("coefficient overflow in negation");
    return -value_;
  }
  Checked& operator+=(Checked o) { return *this = *this + o; }
  Checked& operator-=(Checked o) { return *this = *this - o; }
  Checked& operator*=(Checked o) { return *this = *this * o; }

  friend constexpr bool operator==(Checked, Checked) = default;
  friend constexpr auto operator<=>(Checked, Checked) = default;

  friend std::ostream& operator<<(std::ostream& os, Checked c) { return os << +c.value_; }

 private:
  T value_ = 0;
};

using CheckedInt = Checked<std::int64_t>;

// Decimal rendering shared by the polynomial printers and serializers.
inline std::string to_decimal(const BigInt& x) { return x.str(); }
template <std::signed_integral T>
std::string to_decimal(Checked<T> x) {
  return std::to_string(x.value());
}
inline std::string to_decimal(std::int64_t x) { return std::to_string(x); }

template <class Scalar>
Scalar scalar_from_decimal(const std::string& s);

template <>
inline BigInt scalar_from_decimal<BigInt>(const std::string& s) {
  return BigInt(s);
}
template <>
inline CheckedInt scalar_from_decimal<CheckedInt>(const std::string& s) {
  std::size_t pos = 0;
  long long v = std::stoll(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("not an integer: " + s);
  return CheckedInt(v);
}

}  // namespace pkl
