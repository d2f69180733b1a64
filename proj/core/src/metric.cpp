#include "omega/metric.hpp"

#include <algorithm>
#include <string>

#include "omega/errors.hpp"

namespace omega {
namespace {

void require_positive(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) throw InvalidArgument("distance is defined on naturals >= 1 only");
}

// Calls visit(prime, exponent_in_a, exponent_in_b) for every prime in the
// union of both supports, in increasing order.
template <typename Visit>
void merge_supports(const Factorization& a, const Factorization& b, Visit&& visit) {
  auto ea = a.entries();
  auto eb = b.entries();
  std::size_t i = 0, j = 0;
  while (i < ea.size() || j < eb.size()) {
    if (j == eb.size() || (i < ea.size() && ea[i].prime < eb[j].prime)) {
      visit(ea[i].prime, ea[i].exponent, 0u);
      ++i;
    } else if (i == ea.size() || eb[j].prime < ea[i].prime) {
      visit(eb[j].prime, 0u, eb[j].exponent);
      ++j;
    } else {
      visit(ea[i].prime, ea[i].exponent, eb[j].exponent);
      ++i;
      ++j;
    }
  }
}

}  // namespace

MetricValue dist(const Factorization& a, const Factorization& b) {
  MetricValue total = 0;
  merge_supports(a, b, [&](std::uint64_t, std::uint32_t x, std::uint32_t y) {
    total += x > y ? x - y : y - x;
  });
  return total;
}

MetricValue dist(std::uint64_t a, std::uint64_t b) {
  require_positive(a, b);
  if (a == b) return 0;
  const auto& f = default_factorizer();
  return dist(f.factor(a), f.factor(b));
}

LcmGcd lcm_gcd_exponents(const Factorization& a, const Factorization& b) {
  std::vector<PrimePower> lcm, gcd;
  merge_supports(a, b, [&](std::uint64_t p, std::uint32_t x, std::uint32_t y) {
    lcm.push_back({p, std::max(x, y)});
    if (const std::uint32_t low = std::min(x, y); low > 0) gcd.push_back({p, low});
  });
  return {Factorization::from_canonical(std::move(lcm)),
          Factorization::from_canonical(std::move(gcd))};
}

LcmGcd lcm_gcd_exponents(std::uint64_t a, std::uint64_t b) {
  require_positive(a, b);
  const auto& f = default_factorizer();
  return lcm_gcd_exponents(f.factor(a), f.factor(b));
}

MetricValue dist_via_lcm_gcd(const Factorization& a, const Factorization& b) {
  const auto [lcm, gcd] = lcm_gcd_exponents(a, b);
  return lcm.big_omega() - gcd.big_omega();
}

MetricValue dist_via_lcm_gcd(std::uint64_t a, std::uint64_t b) {
  require_positive(a, b);
  const auto& f = default_factorizer();
  return dist_via_lcm_gcd(f.factor(a), f.factor(b));
}

std::optional<std::uint64_t> is_unit_step(std::uint64_t a, std::uint64_t b) {
  require_positive(a, b);
  const std::uint64_t lo = std::min(a, b);
  const std::uint64_t hi = std::max(a, b);
  if (lo == hi || hi % lo != 0) return std::nullopt;
  const std::uint64_t quotient = hi / lo;
  if (!is_prime(quotient)) return std::nullopt;
  return quotient;
}

std::vector<std::uint64_t> geodesic_through(std::uint64_t a, std::uint64_t b, Waypoint via) {
  require_positive(a, b);
  const auto& f = default_factorizer();
  const Factorization fa = f.factor(a);
  const Factorization fb = f.factor(b);
  const auto [lcm, gcd] = lcm_gcd_exponents(fa, fb);
  const Factorization& waypoint = via == Waypoint::kLcm ? lcm : gcd;
  if (!waypoint.value()) {
    throw OutOfRange("lcm(" + std::to_string(a) + ", " + std::to_string(b) +
                     ") does not fit in 64 bits; route through gcd instead");
  }

  std::vector<std::uint64_t> path{a};
  std::uint64_t current = a;
  // Move from `from` to `to` one prime at a time. Division happens when the
  // target exponent is lower, multiplication when it is higher.
  auto walk = [&](const Factorization& from, const Factorization& to) {
    merge_supports(from, to, [&](std::uint64_t p, std::uint32_t x, std::uint32_t y) {
      for (std::uint32_t k = x; k > y; --k) {
        current /= p;
        path.push_back(current);
      }
      for (std::uint32_t k = x; k < y; ++k) {
        current *= p;
        path.push_back(current);
      }
    });
  };
  walk(fa, waypoint);
  walk(waypoint, fb);
  return path;
}

}  // namespace omega
