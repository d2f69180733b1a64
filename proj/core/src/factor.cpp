#include "omega/factor.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "omega/checked.hpp"
#include "omega/errors.hpp"

namespace omega {
namespace {

// Largest limit the 32-bit spf table can address.
constexpr std::uint64_t kMaxSieveLimit = 2'000'000'000;
// Primes below this are tried by division before falling back to rho.
constexpr std::uint64_t kTrialBound = 1024;

// Montgomery arithmetic modulo an odd n < 2^64, R = 2^64.
class Montgomery {
 public:
  explicit Montgomery(std::uint64_t n) : n_(n), r2_(static_cast<std::uint64_t>(-static_cast<u128>(n) % n)) {
    inv_ = n;  // Newton iteration for n^-1 mod 2^64; each step doubles the correct bits.
    for (int i = 0; i < 5; ++i) inv_ *= 2 - n * inv_;
  }

  std::uint64_t to(std::uint64_t x) const { return mul(x % n_, r2_); }
  std::uint64_t one() const { return to(1); }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return reduce(static_cast<u128>(a) * b);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const u128 sum = static_cast<u128>(a) + b;
    return static_cast<std::uint64_t>(sum >= n_ ? sum - n_ : sum);
  }
  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const {
    std::uint64_t result = one();
    while (exp > 0) {
      if (exp & 1) result = mul(result, base);
      base = mul(base, base);
      exp >>= 1;
    }
    return result;
  }

 private:
  std::uint64_t reduce(u128 t) const {
    const std::uint64_t m = static_cast<std::uint64_t>(t) * -inv_;
    const u128 sum = (t >> 64) + ((static_cast<u128>(m) * n_) >> 64) +
                     (static_cast<std::uint64_t>(t) != 0 ? 1 : 0);
    return static_cast<std::uint64_t>(sum >= n_ ? sum - n_ : sum);
  }

  std::uint64_t n_;
  std::uint64_t r2_;  // R^2 mod n
  std::uint64_t inv_;
};

// One round of Pollard-Brent with increment c, iterating in Montgomery form.
// Returns a nontrivial factor of n, or n on failure. n must be odd.
std::uint64_t brent_round(std::uint64_t n, std::uint64_t c, std::uint64_t start) {
  const Montgomery mont(n);
  const std::uint64_t c_m = mont.to(c);
  auto step = [&](std::uint64_t x) { return mont.add(mont.mul(x, x), c_m); };
  constexpr std::uint64_t kBatch = 128;
  std::uint64_t y = mont.to(start), x = y, saved = y;
  std::uint64_t g = 1, q = mont.one();
  for (std::uint64_t r = 1; g == 1; r <<= 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = step(y);
    for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
      saved = y;
      const std::uint64_t limit = std::min(kBatch, r - k);
      for (std::uint64_t i = 0; i < limit; ++i) {
        y = step(y);
        q = mont.mul(q, x > y ? x - y : y - x);
      }
      g = std::gcd(q, n);
    }
    if (r > (1ULL << 26)) break;
  }
  if (g == n) {
    // Batched product collapsed to zero; replay one step at a time.
    do {
      saved = step(saved);
      g = std::gcd(x > saved ? x - saved : saved - x, n);
    } while (g == 1);
  }
  return g;
}

std::uint64_t find_factor(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  constexpr int kAttempts = 64;
  for (int attempt = 1; attempt <= kAttempts; ++attempt) {
    const std::uint64_t g = brent_round(n, static_cast<std::uint64_t>(attempt), 2 + attempt);
    if (g != 1 && g != n) return g;
  }
  throw std::runtime_error("Pollard-Brent failed to split " + std::to_string(n));
}

void collect_prime_factors(std::uint64_t n, const SpfSieve& sieve,
                           std::vector<std::uint64_t>& out) {
  if (n <= sieve.limit()) {
    for (; n > 1; n /= sieve.spf(n)) out.push_back(sieve.spf(n));
    return;
  }
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = find_factor(n);
  collect_prime_factors(d, sieve, out);
  collect_prime_factors(n / d, sieve, out);
}

std::vector<PrimePower> group_sorted(std::vector<std::uint64_t> primes) {
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower> entries;
  for (std::uint64_t p : primes) {
    if (!entries.empty() && entries.back().prime == p) {
      ++entries.back().exponent;
    } else {
      entries.push_back({p, 1});
    }
  }
  return entries;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  const Montgomery mont(n);
  const std::uint64_t one = mont.one();
  const std::uint64_t minus_one = mont.to(n - 1);
  for (std::uint64_t a : kWitnesses) {
    std::uint64_t x = mont.pow(mont.to(a), d);
    if (x == one || x == minus_one) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mont.mul(x, x);
      if (x == minus_one) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization::Factorization(std::vector<PrimePower> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.exponent == 0) throw InvalidArgument("factorization holds a zero exponent");
    if (!is_prime(e.prime)) {
      throw InvalidArgument("factorization entry " + std::to_string(e.prime) + " is not prime");
    }
    if (i > 0 && entries_[i - 1].prime >= e.prime) {
      throw InvalidArgument("factorization primes must be strictly increasing");
    }
  }
}

std::uint32_t Factorization::valuation(std::uint64_t prime) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), prime,
                             [](const PrimePower& e, std::uint64_t p) { return e.prime < p; });
  return it != entries_.end() && it->prime == prime ? it->exponent : 0;
}

std::uint64_t Factorization::big_omega() const {
  std::uint64_t total = 0;
  for (const auto& e : entries_) total += e.exponent;
  return total;
}

std::optional<std::uint64_t> Factorization::value() const {
  std::uint64_t result = 1;
  for (const auto& e : entries_) {
    auto power = checked_pow(e.prime, e.exponent);
    if (!power) return std::nullopt;
    auto next = checked_mul(result, *power);
    if (!next) return std::nullopt;
    result = *next;
  }
  return result;
}

Factorization operator*(const Factorization& a, const Factorization& b) {
  std::vector<PrimePower> merged;
  merged.reserve(a.entries_.size() + b.entries_.size());
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() || j != b.entries_.end()) {
    if (j == b.entries_.end() || (i != a.entries_.end() && i->prime < j->prime)) {
      merged.push_back(*i++);
    } else if (i == a.entries_.end() || j->prime < i->prime) {
      merged.push_back(*j++);
    } else {
      merged.push_back({i->prime, i->exponent + j->exponent});
      ++i;
      ++j;
    }
  }
  return Factorization::from_canonical(std::move(merged));
}

std::string to_string(const Factorization& f) {
  if (f.is_one()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& e : f.entries()) {
    if (!first) out << " * ";
    first = false;
    out << e.prime;
    if (e.exponent > 1) out << '^' << e.exponent;
  }
  return out.str();
}

SpfSieve::SpfSieve(std::uint64_t limit) : limit_(limit) {
  if (limit < 2) throw InvalidArgument("sieve limit must be at least 2");
  if (limit > kMaxSieveLimit) {
    throw OutOfRange("sieve limit " + std::to_string(limit) + " exceeds " +
                     std::to_string(kMaxSieveLimit));
  }
  // Linear sieve: every composite is struck exactly once, by its smallest prime.
  spf_.assign(limit + 1, 0);
  for (std::uint64_t m = 2; m <= limit; ++m) {
    if (spf_[m] == 0) {
      spf_[m] = static_cast<std::uint32_t>(m);
      primes_.push_back(static_cast<std::uint32_t>(m));
    }
    const std::uint32_t smallest = spf_[m];
    for (std::uint32_t p : primes_) {
      if (p > smallest || static_cast<std::uint64_t>(p) * m > limit) break;
      spf_[p * m] = p;
    }
  }
}

std::uint64_t SpfSieve::spf(std::uint64_t m) const {
  if (m < 2 || m > limit_) {
    throw OutOfRange("spf lookup " + std::to_string(m) + " outside [2, " +
                     std::to_string(limit_) + "]");
  }
  return spf_[m];
}

SpfSieve build_sieve(std::uint64_t limit) { return SpfSieve(limit); }

Factorizer::Factorizer(std::uint64_t sieve_limit) : sieve_(sieve_limit) {}

Factorization Factorizer::factor(std::uint64_t n) const {
  if (n == 0) throw InvalidArgument("cannot factor 0: valuations are undefined");
  std::vector<PrimePower> entries;
  auto push = [&entries](std::uint64_t p) {
    if (!entries.empty() && entries.back().prime == p) {
      ++entries.back().exponent;
    } else {
      entries.push_back({p, 1});
    }
  };

  if (n > sieve_.limit()) {
    for (std::uint32_t p : sieve_.primes()) {
      if (p >= kTrialBound || static_cast<std::uint64_t>(p) * p > n) break;
      while (n % p == 0) {
        push(p);
        n /= p;
      }
    }
  }
  if (n > sieve_.limit()) {
    std::vector<std::uint64_t> rest;
    collect_prime_factors(n, sieve_, rest);
    for (const auto& e : group_sorted(std::move(rest))) {
      // Trial division removed every prime below kTrialBound, so the remaining
      // primes are all larger than anything already pushed.
      entries.push_back(e);
    }
    return Factorization::from_canonical(std::move(entries));
  }
  while (n > 1) {
    const std::uint64_t p = sieve_.spf(n);
    push(p);
    n /= p;
  }
  return Factorization::from_canonical(std::move(entries));
}

std::uint32_t Factorizer::valuation(std::uint64_t n, std::uint64_t p) const {
  if (n == 0) throw InvalidArgument("valuation of 0 is undefined");
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  std::uint32_t k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

std::uint64_t Factorizer::big_omega(std::uint64_t n) const {
  if (n == 0) throw InvalidArgument("Omega(0) is undefined");
  if (n <= sieve_.limit()) {
    std::uint64_t count = 0;
    while (n > 1) {
      n /= sieve_.spf(n);
      ++count;
    }
    return count;
  }
  return factor(n).big_omega();
}

std::vector<std::uint64_t> Factorizer::primes_up_to(std::uint64_t n) const {
  if (n < 2) throw InvalidArgument("primes_up_to requires n >= 2");
  if (n > sieve_.limit()) {
    throw OutOfRange("primes_up_to(" + std::to_string(n) + ") exceeds sieve limit " +
                     std::to_string(sieve_.limit()));
  }
  const auto& primes = sieve_.primes();
  auto end = std::upper_bound(primes.begin(), primes.end(), n);
  return {primes.begin(), end};
}

std::size_t Factorizer::prime_rank(std::uint64_t p) const {
  if (p > sieve_.limit()) {
    throw OutOfRange("prime " + std::to_string(p) + " is beyond the sieve limit " +
                     std::to_string(sieve_.limit()));
  }
  const auto& primes = sieve_.primes();
  auto it = std::lower_bound(primes.begin(), primes.end(), p);
  if (it == primes.end() || *it != p) throw InvalidArgument(std::to_string(p) + " is not prime");
  return static_cast<std::size_t>(it - primes.begin()) + 1;
}

namespace {

struct DefaultState {
  std::mutex mutex;
  std::optional<std::uint64_t> requested_limit;
  std::unique_ptr<Factorizer> factorizer;
};

DefaultState& default_state() {
  static DefaultState state;
  return state;
}

std::uint64_t env_sieve_limit() {
  const char* raw = std::getenv("OMEGA_SIEVE_LIMIT");
  if (raw == nullptr || *raw == '\0') return kDefaultSieveLimit;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(raw, &end, 10);
  if (*end != '\0') throw InvalidArgument("OMEGA_SIEVE_LIMIT is not a decimal integer");
  return parsed;
}

}  // namespace

const Factorizer& default_factorizer() {
  auto& state = default_state();
  std::lock_guard lock(state.mutex);
  if (!state.factorizer) {
    const std::uint64_t limit = state.requested_limit.value_or(env_sieve_limit());
    state.factorizer = std::make_unique<Factorizer>(limit);
  }
  return *state.factorizer;
}

void set_default_sieve_limit(std::uint64_t limit) {
  auto& state = default_state();
  std::lock_guard lock(state.mutex);
  if (state.factorizer) {
    if (state.factorizer->sieve_limit() == limit) return;
    throw std::logic_error("default factorizer already built with a different sieve limit");
  }
  if (limit < 2) throw InvalidArgument("sieve limit must be at least 2");
  state.requested_limit = limit;
}

Factorization factor(std::uint64_t n) { return default_factorizer().factor(n); }
std::uint32_t valuation(std::uint64_t n, std::uint64_t p) {
  return default_factorizer().valuation(n, p);
}
std::uint64_t big_omega(std::uint64_t n) { return default_factorizer().big_omega(n); }
std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  return default_factorizer().primes_up_to(n);
}

}  // namespace omega
