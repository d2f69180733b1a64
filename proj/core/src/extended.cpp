#include "omega/extended.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "omega/errors.hpp"

namespace omega {
namespace {

template <typename Visit>
void merge_supports(const ExtendedNumber& x, const ExtendedNumber& y, Visit&& visit) {
  auto ex = x.entries();
  auto ey = y.entries();
  const Rational zero;
  std::size_t i = 0, j = 0;
  while (i < ex.size() || j < ey.size()) {
    if (j == ey.size() || (i < ex.size() && ex[i].prime < ey[j].prime)) {
      visit(ex[i].prime, ex[i].exponent, zero);
      ++i;
    } else if (i == ex.size() || ey[j].prime < ex[i].prime) {
      visit(ey[j].prime, zero, ey[j].exponent);
      ++j;
    } else {
      visit(ex[i].prime, ex[i].exponent, ey[j].exponent);
      ++i;
      ++j;
    }
  }
}

std::uint64_t parse_u64(std::string_view text, std::string_view literal) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw OutOfRange("integer in '" + std::string(literal) + "' exceeds 64 bits");
  }
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw InvalidArgument("malformed extended literal '" + std::string(literal) + "'");
  }
  return value;
}

ExtendedNumber parse_fraction(std::string_view text, std::string_view literal) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_rational(parse_u64(text, literal), 1);
  return from_rational(parse_u64(text.substr(0, slash), literal),
                       parse_u64(text.substr(slash + 1), literal));
}

}  // namespace

ExtendedNumber::ExtendedNumber(std::vector<RationalPower> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].exponent.is_zero()) throw InvalidArgument("extended number holds a zero exponent");
    if (!is_prime(entries_[i].prime)) {
      throw InvalidArgument(std::to_string(entries_[i].prime) + " is not prime");
    }
    if (i > 0 && entries_[i - 1].prime >= entries_[i].prime) {
      throw InvalidArgument("extended number primes must be strictly increasing");
    }
  }
}

ExtendedNumber::ExtendedNumber(const Factorization& f) {
  for (const auto& e : f.entries()) {
    entries_.push_back({e.prime, Rational(static_cast<std::int64_t>(e.exponent))});
  }
}

Rational ExtendedNumber::valuation(std::uint64_t prime) const {
  for (const auto& e : entries_) {
    if (e.prime == prime) return e.exponent;
  }
  return {};
}

ExtendedNumber operator*(const ExtendedNumber& x, const ExtendedNumber& y) {
  ExtendedNumber out;
  merge_supports(x, y, [&](std::uint64_t p, const Rational& a, const Rational& b) {
    Rational sum = a + b;
    if (!sum.is_zero()) out.entries_.push_back({p, sum});
  });
  return out;
}

ExtendedNumber from_rational(std::uint64_t numerator, std::uint64_t denominator) {
  if (numerator == 0 || denominator == 0) {
    throw InvalidArgument("extended numbers need a positive numerator and denominator");
  }
  const auto& f = default_factorizer();
  const ExtendedNumber up(f.factor(numerator));
  ExtendedNumber down(f.factor(denominator));
  std::vector<RationalPower> inverse;
  for (const auto& e : down.entries()) inverse.push_back({e.prime, -e.exponent});
  return up * ExtendedNumber(std::move(inverse));
}

ExtendedNumber nth_root(const ExtendedNumber& x, std::uint64_t n) {
  if (n == 0) throw InvalidArgument("0th root is undefined");
  const Rational divisor(static_cast<i128>(n), 1);
  std::vector<RationalPower> entries;
  for (const auto& e : x.entries()) entries.push_back({e.prime, e.exponent / divisor});
  return ExtendedNumber(std::move(entries));
}

ExtendedDistance ext_dist(const ExtendedNumber& x, const ExtendedNumber& y) {
  Rational total;
  merge_supports(x, y, [&](std::uint64_t, const Rational& a, const Rational& b) {
    total += abs(a - b);
  });
  return total;
}

Rational ext_big_omega(const ExtendedNumber& x) {
  Rational total;
  for (const auto& e : x.entries()) total += e.exponent;
  return total;
}

Rational ExponentSequence::at(std::size_t rank) const {
  auto it = std::lower_bound(support.begin(), support.end(), rank,
                             [](const auto& entry, std::size_t r) { return entry.first < r; });
  return it != support.end() && it->first == rank ? it->second : Rational();
}

std::vector<Rational> ExponentSequence::prefix(std::size_t length) const {
  std::vector<Rational> dense(length);
  for (const auto& [rank, value] : support) {
    if (rank <= length) dense[rank - 1] = value;
  }
  return dense;
}

ExponentSequence embed(const ExtendedNumber& x, const Factorizer& factorizer) {
  ExponentSequence seq;
  for (const auto& e : x.entries()) seq.support.emplace_back(factorizer.prime_rank(e.prime), e.exponent);
  return seq;
}

ExponentSequence embed(const ExtendedNumber& x) { return embed(x, default_factorizer()); }

Rational l1_distance(const ExponentSequence& u, const ExponentSequence& v) {
  std::set<std::size_t> ranks;
  for (const auto& entry : u.support) ranks.insert(entry.first);
  for (const auto& entry : v.support) ranks.insert(entry.first);
  Rational total;
  for (std::size_t k : ranks) total += abs(u.at(k) - v.at(k));
  return total;
}

ExtendedNumber parse_extended(std::string_view literal) {
  std::string_view text = literal;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  constexpr std::string_view kRoot = "root(";
  if (text.starts_with(kRoot)) {
    if (!text.ends_with(')')) {
      throw InvalidArgument("malformed extended literal '" + std::string(literal) + "'");
    }
    const std::string_view inner = text.substr(kRoot.size(), text.size() - kRoot.size() - 1);
    const auto comma = inner.find(',');
    if (comma == std::string_view::npos) {
      throw InvalidArgument("root(k, n/d) needs two arguments in '" + std::string(literal) + "'");
    }
    const std::uint64_t k = parse_u64(inner.substr(0, comma), literal);
    std::string_view radicand = inner.substr(comma + 1);
    return nth_root(parse_fraction(radicand, literal), k);
  }
  return parse_fraction(text, literal);
}

std::string to_string(const ExtendedNumber& x) {
  if (x.entries().empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& e : x.entries()) {
    if (!first) out << " * ";
    first = false;
    out << e.prime;
    if (e.exponent == Rational(1)) continue;
    if (e.exponent.is_integer() && e.exponent.num() > 0) {
      out << '^' << to_string(e.exponent);
    } else {
      out << "^(" << to_string(e.exponent) << ')';
    }
  }
  return out.str();
}

}  // namespace omega
