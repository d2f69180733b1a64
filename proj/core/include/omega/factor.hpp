#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace omega {

inline constexpr std::uint64_t kDefaultSieveLimit = 10'000'000;

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical factorization: strictly increasing primes, exponents >= 1.
// The empty factorization is 1.
class Factorization {
 public:
  Factorization() = default;

  // Validates the canonical-form invariants; throws InvalidArgument.
  explicit Factorization(std::vector<PrimePower> entries);

  // Skips validation. Callers guarantee canonical form.
  static Factorization from_canonical(std::vector<PrimePower> entries) {
    Factorization f;
    f.entries_ = std::move(entries);
    return f;
  }

  std::span<const PrimePower> entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }
  std::size_t distinct_primes() const { return entries_.size(); }

  std::uint32_t valuation(std::uint64_t prime) const;
  // Omega: prime factors counted with multiplicity.
  std::uint64_t big_omega() const;
  // Product of the prime powers, or nullopt when it exceeds 64 bits.
  std::optional<std::uint64_t> value() const;

  // Exponentwise sum.
  friend Factorization operator*(const Factorization& a, const Factorization& b);

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> entries_;
};

// "2^2 * 3"; "1" for the empty factorization.
std::string to_string(const Factorization& f);

// Smallest-prime-factor table on [2, limit].
class SpfSieve {
 public:
  // Throws InvalidArgument when limit < 2.
  explicit SpfSieve(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  // Smallest prime factor of m; m must lie in [2, limit].
  std::uint64_t spf(std::uint64_t m) const;
  const std::vector<std::uint32_t>& primes() const { return primes_; }

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

SpfSieve build_sieve(std::uint64_t limit);

// Factorization engine: sieve lookups up to the sieve limit, trial division by
// small sieved primes above it, then Miller-Rabin plus Pollard-Brent rho.
// Immutable after construction.
class Factorizer {
 public:
  explicit Factorizer(std::uint64_t sieve_limit = kDefaultSieveLimit);

  const SpfSieve& sieve() const { return sieve_; }
  std::uint64_t sieve_limit() const { return sieve_.limit(); }

  Factorization factor(std::uint64_t n) const;
  std::uint32_t valuation(std::uint64_t n, std::uint64_t p) const;
  std::uint64_t big_omega(std::uint64_t n) const;
  // All primes <= n; throws OutOfRange when n exceeds the sieve limit.
  std::vector<std::uint64_t> primes_up_to(std::uint64_t n) const;
  // 1-based index of p among the primes; p must be a prime <= sieve limit.
  std::size_t prime_rank(std::uint64_t p) const;

 private:
  SpfSieve sieve_;
};

// Process-wide factorizer, built lazily on first use. The limit comes from
// set_default_sieve_limit() if called before first use, else the
// OMEGA_SIEVE_LIMIT environment variable, else kDefaultSieveLimit.
const Factorizer& default_factorizer();
// Throws std::logic_error if the default factorizer was already built with a
// different limit.
void set_default_sieve_limit(std::uint64_t limit);

Factorization factor(std::uint64_t n);
std::uint32_t valuation(std::uint64_t n, std::uint64_t p);
std::uint64_t big_omega(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

}  // namespace omega
