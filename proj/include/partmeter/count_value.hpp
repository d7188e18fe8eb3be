#ifndef PARTMETER_COUNT_VALUE_HPP
#define PARTMETER_COUNT_VALUE_HPP

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "partmeter/error.hpp"

namespace partmeter {

__extension__ typedef unsigned __int128 uint128_t;

/* Exact nonnegative integer with overflow-checked arithmetic. Any operation
 * whose true result does not fit in Rep throws Error(Overflow); nothing ever
 * wraps. The library works in CountValue (128 bits); NarrowCount (64 bits)
 * exists so that the overflow paths can be exercised at small n.
 */
template <class Rep>
class BasicCount {
  static_assert(std::unsigned_integral<Rep> || std::same_as<Rep, uint128_t>);

 public:
  using rep_type = Rep;

  constexpr BasicCount() = default;
  constexpr BasicCount(Rep value) : value_(value) {}  // NOLINT: implicit by intent

  static constexpr BasicCount max() { return BasicCount(~Rep{0}); }

  constexpr Rep value() const { return value_; }

  static std::optional<BasicCount> checked_add(BasicCount a, BasicCount b) {
    Rep r;
    if (__builtin_add_overflow(a.value_, b.value_, &r)) return std::nullopt;
    return BasicCount(r);
  }
  static std::optional<BasicCount> checked_sub(BasicCount a, BasicCount b) {
    if (b.value_ > a.value_) return std::nullopt;
    return BasicCount(a.value_ - b.value_);
  }
  static std::optional<BasicCount> checked_mul(BasicCount a, BasicCount b) {
    Rep r;
    if (__builtin_mul_overflow(a.value_, b.value_, &r)) return std::nullopt;
    return BasicCount(r);
  }

  friend BasicCount operator+(BasicCount a, BasicCount b) {
    return unwrap(checked_add(a, b), "addition");
  }
  friend BasicCount operator-(BasicCount a, BasicCount b) {
    return unwrap(checked_sub(a, b), "subtraction");
  }
  friend BasicCount operator*(BasicCount a, BasicCount b) {
    return unwrap(checked_mul(a, b), "multiplication");
  }
  BasicCount& operator+=(BasicCount o) { return *this = *this + o; }
  BasicCount& operator-=(BasicCount o) { return *this = *this - o; }
  BasicCount& operator*=(BasicCount o) { return *this = *this * o; }

  friend BasicCount operator/(BasicCount a, BasicCount b) {
    if (b.value_ == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
    return BasicCount(a.value_ / b.value_);
  }
  friend BasicCount operator%(BasicCount a, BasicCount b) {
    if (b.value_ == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
    return BasicCount(a.value_ % b.value_);
  }

  friend constexpr auto operator<=>(BasicCount, BasicCount) = default;
  friend constexpr bool operator==(BasicCount, BasicCount) = default;

  std::string to_string() const {
    if (value_ == 0) return "0";
    std::string s;
    for (Rep v = value_; v != 0; v /= 10) s.push_back(static_cast<char>('0' + v % 10));
    std::reverse(s.begin(), s.end());
    return s;
  }

  // Parses a decimal string; throws InvalidArgument or Overflow.
  static BasicCount from_string(const std::string& text) {
    if (text.empty()) throw Error(ErrorKind::InvalidArgument, "empty number");
    BasicCount acc;
    for (char c : text) {
      if (c < '0' || c > '9')
        throw Error(ErrorKind::InvalidArgument, "not a decimal number: " + text);
      acc = acc * BasicCount(10) + BasicCount(static_cast<Rep>(c - '0'));
    }
    return acc;
  }

  friend std::ostream& operator<<(std::ostream& os, BasicCount c) {
    return os << c.to_string();
  }

 private:
  static BasicCount unwrap(std::optional<BasicCount> r, const char* op) {
    if (!r) throw Error(ErrorKind::Overflow, std::string("count overflow in ") + op);
    return *r;
  }

  Rep value_ = 0;
};

using CountValue = BasicCount<uint128_t>;
using NarrowCount = BasicCount<std::uint64_t>;

template <class Rep>
BasicCount<Rep> gcd(BasicCount<Rep> a, BasicCount<Rep> b) {
  Rep x = a.value(), y = b.value();
  while (y != 0) {
    Rep t = x % y;
    x = y;
    y = t;
  }
  return BasicCount<Rep>(x);
}

// Reduced nonnegative fraction of two counts. The denominator is nonzero.
struct Ratio {
  CountValue num;
  CountValue den{1};

  static Ratio reduced(CountValue num, CountValue den);

  friend bool operator==(const Ratio&, const Ratio&) = default;

  std::string to_string() const { return num.to_string() + "/" + den.to_string(); }
  long double approx() const;
};

}  // namespace partmeter

#endif
