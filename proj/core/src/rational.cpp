#include "omega/rational.hpp"

#include <algorithm>

#include "omega/errors.hpp"

namespace omega {
namespace {

[[noreturn]] void overflow() { throw OutOfRange("rational arithmetic overflowed 128 bits"); }

i128 abs128(i128 v) {
  if (v < 0) {
    if (v == -v) overflow();  // minimum value has no positive counterpart
    return -v;
  }
  return v;
}

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i128 mul(i128 a, i128 b) {
  i128 out;
  if (__builtin_mul_overflow(a, b, &out)) overflow();
  return out;
}

i128 add(i128 a, i128 b) {
  i128 out;
  if (__builtin_add_overflow(a, b, &out)) overflow();
  return out;
}

}  // namespace

Rational::Rational(i128 num, i128 den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  if (den < 0) {
    num = mul(num, -1);
    den = mul(den, -1);
  }
  const i128 g = gcd128(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::operator-() const { return Rational(mul(num_, -1), den_); }

Rational operator+(const Rational& a, const Rational& b) {
  // Cross-reduce by gcd of denominators to delay overflow.
  const i128 g = gcd128(a.den_, b.den_);
  const i128 da = a.den_ / g;
  const i128 db = b.den_ / g;
  return Rational(add(mul(a.num_, db), mul(b.num_, da)), mul(mul(da, db), g));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  const i128 g1 = gcd128(a.num_, b.den_);
  const i128 g2 = gcd128(b.num_, a.den_);
  return Rational(mul(a.num_ / g1, b.num_ / g2), mul(a.den_ / g2, b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw InvalidArgument("division by zero rational");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const Rational diff = a - b;
  return diff.num_ <=> 0;
}

Rational abs(const Rational& r) { return r.num() < 0 ? -r : r; }

std::string to_string(i128 value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  u128 magnitude = negative ? static_cast<u128>(0) - static_cast<u128>(value)
                            : static_cast<u128>(value);
  std::string digits;
  while (magnitude > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(magnitude % 10)));
    magnitude /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string to_string(const Rational& r) {
  if (r.is_integer()) return to_string(r.num());
  return to_string(r.num()) + "/" + to_string(r.den());
}

}  // namespace omega
