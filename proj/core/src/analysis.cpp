#include "omega/analysis.hpp"

#include <cmath>
#include <string>

#include "omega/checked.hpp"
#include "omega/errors.hpp"

namespace omega {

std::uint64_t xi(std::uint64_t p, std::uint64_t s) {
  if (p < 2) throw InvalidArgument("xi needs a base p >= 2");
  if (s == 0) throw InvalidArgument("xi needs s >= 1");
  std::uint64_t k = 0;
  u128 power = p;
  while (power <= s) {
    ++k;
    power *= p;  // power <= s < 2^64 and p < 2^64, so this stays below 2^128
  }
  return k;
}

std::vector<std::uint64_t> closed_ball(std::uint64_t x, std::uint64_t r, std::uint64_t n,
                                       std::uint64_t cap) {
  if (x == 0) throw InvalidArgument("ball center must be >= 1");
  if (n == 0) throw InvalidArgument("ball range I_n needs n >= 1");
  if (n > cap) {
    throw OutOfRange("ball range " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  const auto& f = default_factorizer();
  const Factorization center = f.factor(x);
  std::vector<std::uint64_t> ball;
  for (std::uint64_t y = 1; y <= n; ++y) {
    if (dist(center, f.factor(y)) <= r) ball.push_back(y);
  }
  return ball;
}

std::uint64_t diameter_formula(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("diameter needs n >= 1");
  return xi(2, n) + xi(3, n);
}

DiameterWitness diameter_bruteforce(std::uint64_t n, std::uint64_t cap) {
  if (n == 0) throw InvalidArgument("diameter needs n >= 1");
  if (n > cap) {
    throw OutOfRange("brute-force diameter of I_" + std::to_string(n) + " exceeds cap " +
                     std::to_string(cap));
  }
  const auto& f = default_factorizer();
  std::vector<Factorization> factored;
  factored.reserve(n + 1);
  factored.emplace_back();
  for (std::uint64_t m = 1; m <= n; ++m) factored.push_back(f.factor(m));

  DiameterWitness best{0, {1, 1}};
  for (std::uint64_t a = 1; a <= n; ++a) {
    for (std::uint64_t b = a + 1; b <= n; ++b) {
      const MetricValue d = dist(factored[a], factored[b]);
      if (d > best.value) best = {d, {a, b}};
    }
  }
  return best;
}

OmegaCensus omega_census(std::uint64_t n, const Factorizer& factorizer) {
  if (n == 0) throw InvalidArgument("census needs n >= 1");
  const SpfSieve& sieve = factorizer.sieve();
  if (n > sieve.limit()) {
    throw OutOfRange("census size " + std::to_string(n) + " exceeds sieve limit " +
                     std::to_string(sieve.limit()));
  }
  // Omega(m) = Omega(m / spf(m)) + 1, filled in increasing m.
  std::vector<std::uint8_t> omega(n + 1, 0);
  OmegaCensus census{n, {1}};
  for (std::uint64_t m = 2; m <= n; ++m) {
    omega[m] = static_cast<std::uint8_t>(omega[m / sieve.spf(m)] + 1);
    if (omega[m] >= census.counts.size()) census.counts.resize(omega[m] + 1, 0);
    ++census.counts[omega[m]];
  }
  return census;
}

OmegaCensus omega_census(std::uint64_t n) { return omega_census(n, default_factorizer()); }

double landau_estimate(std::uint64_t n, std::uint64_t k) {
  if (n < 3) throw InvalidArgument("Landau estimate needs n >= 3 so that ln ln n > 0");
  if (k == 0) throw InvalidArgument("Landau estimate needs k >= 1");
  const double x = static_cast<double>(n);
  const double log_x = std::log(x);
  const double loglog_x = std::log(log_x);
  const double km1 = static_cast<double>(k - 1);
  // (ln ln n)^(k-1) / (k-1)! in log space to stay finite for large k.
  const double tail = k == 1 ? 1.0 : std::exp(km1 * std::log(loglog_x) - std::lgamma(km1 + 1.0));
  return x / log_x * tail;
}

}  // namespace omega
