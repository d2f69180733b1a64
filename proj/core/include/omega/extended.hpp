#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omega/factor.hpp"
#include "omega/rational.hpp"

namespace omega {

struct RationalPower {
  std::uint64_t prime;
  Rational exponent;

  friend bool operator==(const RationalPower&, const RationalPower&) = default;
};

// Positive real prod p^alpha_p with finitely many nonzero rational exponents:
// the positive rationals and their radicals. Canonical form mirrors
// Factorization: strictly increasing primes, no zero exponents.
class ExtendedNumber {
 public:
  ExtendedNumber() = default;
  explicit ExtendedNumber(std::vector<RationalPower> entries);
  explicit ExtendedNumber(const Factorization& f);

  std::span<const RationalPower> entries() const { return entries_; }
  Rational valuation(std::uint64_t prime) const;

  // Multiplication adds exponent maps.
  friend ExtendedNumber operator*(const ExtendedNumber& x, const ExtendedNumber& y);
  friend bool operator==(const ExtendedNumber&, const ExtendedNumber&) = default;

 private:
  std::vector<RationalPower> entries_;
};

using ExtendedDistance = Rational;

// numerator / denominator as exponent map. Throws InvalidArgument on zero.
ExtendedNumber from_rational(std::uint64_t numerator, std::uint64_t denominator);
// x^(1/n). Throws InvalidArgument when n == 0.
ExtendedNumber nth_root(const ExtendedNumber& x, std::uint64_t n);
// Sum over primes of |v_p(x) - v_p(y)|, exact.
ExtendedDistance ext_dist(const ExtendedNumber& x, const ExtendedNumber& y);
// Signed sum of exponents, exact.
Rational ext_big_omega(const ExtendedNumber& x);

// Exponent sequence indexed by prime rank (1-based: rank 1 is the prime 2).
// Only the nonzero coordinates are stored, ascending by rank.
struct ExponentSequence {
  std::vector<std::pair<std::size_t, Rational>> support;

  // Coordinate at `rank`; zero off the support.
  Rational at(std::size_t rank) const;
  // Coordinates 1..length as a dense vector.
  std::vector<Rational> prefix(std::size_t length) const;
};

// Uses the default factorizer to rank primes; throws OutOfRange for primes
// beyond its sieve limit.
ExponentSequence embed(const ExtendedNumber& x);
ExponentSequence embed(const ExtendedNumber& x, const Factorizer& factorizer);
// ||u - v||_1: collects the union of supported ranks, then sums |u_k - v_k|
// with a lookup per rank.
Rational l1_distance(const ExponentSequence& u, const ExponentSequence& v);

// Parses "n", "n/d", or "root(k, n/d)" (whitespace allowed inside the parens).
ExtendedNumber parse_extended(std::string_view literal);
// "2^(-1) * 3", "2^(1/2)"; "1" when empty.
std::string to_string(const ExtendedNumber& x);

}  // namespace omega
