// Exact rational numbers over arbitrary-precision integers.
#ifndef COSETS_RATIONAL_HPP_
#define COSETS_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "cosets/common.hpp"

namespace cosets {

using BigInt = boost::multiprecision::cpp_int;

// Always normalized: gcd(num, den) == 1 and den > 0.
struct Rational {
  BigInt num{0};
  BigInt den{1};

  Rational() = default;
  Rational(long long n) : num(n) {}  // NOLINT: implicit by design
  Rational(BigInt n) : num(std::move(n)) {}
  Rational(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) { normalize(); }

  void normalize() {
    if (den == 0) fail("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    BigInt g = boost::multiprecision::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }
  int sign() const { return num == 0 ? 0 : (num < 0 ? -1 : 1); }

  Rational operator-() const {
    Rational r;
    r.num = -num;
    r.den = den;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) fail("rational division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }

  std::string str() const {
    std::string s = num.str();
    if (den != 1) s += "/" + den.str();
    return s;
  }
};

inline Rational parse_rational(std::string_view s) {
  if (s.empty()) fail("empty rational literal");
  auto slash = s.find('/');
  auto parse_int = [](std::string_view t) {
    if (t.empty()) fail("empty integer literal");
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) fail("bare sign in integer literal");
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') fail("bad integer literal '" + std::string(t) + "'");
    if (t[0] == '+') t.remove_prefix(1);  // cpp_int rejects an explicit plus
    return BigInt(std::string(t));
  };
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

}  // namespace cosets

#endif
