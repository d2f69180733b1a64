#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "omega/factor.hpp"
#include "omega/metric.hpp"

namespace omega {

inline constexpr std::uint64_t kDefaultBallCap = 1'000'000;
inline constexpr std::uint64_t kBruteDiameterCap = 2000;

// Largest k >= 0 with p^k <= s (floor(log_p s)), by exact integer powering.
// Returns 0 when s < p. Throws InvalidArgument for p < 2 or s == 0.
std::uint64_t xi(std::uint64_t p, std::uint64_t s);

// {y in I_n : d(x, y) <= r}, ascending.
std::vector<std::uint64_t> closed_ball(std::uint64_t x, std::uint64_t r, std::uint64_t n,
                                       std::uint64_t cap = kDefaultBallCap);

// Diameter of I_n in closed form: xi(2, n) + xi(3, n).
std::uint64_t diameter_formula(std::uint64_t n);

struct DiameterWitness {
  MetricValue value;
  std::pair<std::uint64_t, std::uint64_t> pair;  // a <= b, lexicographically first
};

// Exhaustive O(n^2) scan of I_n. Throws OutOfRange for n > cap.
DiameterWitness diameter_bruteforce(std::uint64_t n, std::uint64_t cap = kBruteDiameterCap);

struct OmegaCensus {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> counts;  // counts[k] = #{m <= n : Omega(m) = k}

  std::uint64_t count(std::size_t k) const { return k < counts.size() ? counts[k] : 0; }
};

// Exact census over I_n. Requires n <= the factorizer's sieve limit.
OmegaCensus omega_census(std::uint64_t n);
OmegaCensus omega_census(std::uint64_t n, const Factorizer& factorizer);

// Approximate: (n / ln n) (ln ln n)^(k-1) / (k-1)!, in double precision.
// Throws InvalidArgument for n < 3 or k == 0.
double landau_estimate(std::uint64_t n, std::uint64_t k);

}  // namespace omega
