#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "omega/checked.hpp"

namespace omega {

// Exact rational with 128-bit numerator and denominator, kept in lowest terms
// with a positive denominator. Arithmetic that overflows throws OutOfRange.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(i128 num, i128 den);

  i128 num() const { return num_; }
  i128 den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& other) { return *this = *this + other; }
  Rational& operator-=(const Rational& other) { return *this = *this - other; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  i128 num_ = 0;
  i128 den_ = 1;
};

Rational abs(const Rational& r);

// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(i128 value);

}  // namespace omega
