#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "omega/factor.hpp"

namespace omega {

// d(a, b): number of prime multiplications/divisions separating a and b.
// Always a non-negative integer, zero exactly when a == b.
using MetricValue = std::uint64_t;

// Sum over primes of |v_p(a) - v_p(b)|, by merging the two factorizations.
MetricValue dist(const Factorization& a, const Factorization& b);
MetricValue dist(std::uint64_t a, std::uint64_t b);

// Omega(lcm) - Omega(gcd), with lcm and gcd formed exponentwise.
MetricValue dist_via_lcm_gcd(const Factorization& a, const Factorization& b);
MetricValue dist_via_lcm_gcd(std::uint64_t a, std::uint64_t b);

struct LcmGcd {
  Factorization lcm;
  Factorization gcd;
};

// Per-prime max (lcm) and min (gcd) of the exponents.
LcmGcd lcm_gcd_exponents(const Factorization& a, const Factorization& b);
LcmGcd lcm_gcd_exponents(std::uint64_t a, std::uint64_t b);

// The prime p with b = a*p or a = b*p when d(a, b) == 1.
std::optional<std::uint64_t> is_unit_step(std::uint64_t a, std::uint64_t b);

enum class Waypoint { kLcm, kGcd };

// Shortest path a -> waypoint -> b, one prime step per hop. Steps are taken in
// increasing prime order, first toward the waypoint and then toward b.
// Throws OutOfRange when via == kLcm and lcm(a, b) exceeds 64 bits.
std::vector<std::uint64_t> geodesic_through(std::uint64_t a, std::uint64_t b, Waypoint via);

}  // namespace omega
