#include "omega/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "omega/analysis.hpp"
#include "omega/bk_index.hpp"
#include "omega/checked.hpp"
#include "omega/errors.hpp"
#include "omega/extended.hpp"
#include "omega/factor.hpp"
#include "omega/hasse.hpp"
#include "omega/metric.hpp"
#include "omega/random.hpp"

namespace omega {
namespace {

constexpr int kSamples = 10'000;

class Recorder {
 public:
  explicit Recorder(std::string name) { report_.name = std::move(name); }

  template <typename Describe>
  void check(bool ok, Describe&& describe) {
    ++report_.checks;
    if (ok) return;
    if (report_.failures++ == 0) report_.first_failure = describe();
  }

  SuiteReport finish() { return std::move(report_); }

 private:
  SuiteReport report_;
};

std::string describe(std::string_view what, std::initializer_list<std::uint64_t> args) {
  std::ostringstream out;
  out << what << '(';
  bool first = true;
  for (auto a : args) {
    if (!first) out << ", ";
    first = false;
    out << a;
  }
  out << ')';
  return out.str();
}

SuiteReport axioms(SplitMix64& rng) {
  Recorder rec("axioms");
  const auto& f = default_factorizer();
  for (int i = 0; i < kSamples; ++i) {
    const std::uint64_t a = rng.uniform(1, 1'000'000);
    const std::uint64_t b = rng.uniform(1, 1'000'000);
    const std::uint64_t c = rng.uniform(1, 1'000'000);
    const auto fa = f.factor(a), fb = f.factor(b), fc = f.factor(c);
    const MetricValue ab = dist(fa, fb), ba = dist(fb, fa), bc = dist(fb, fc), ac = dist(fa, fc);
    rec.check(dist(fa, fa) == 0, [&] { return describe("identity", {a}); });
    rec.check((ab == 0) == (a == b), [&] { return describe("separation", {a, b}); });
    rec.check(ab == ba, [&] { return describe("symmetry", {a, b}); });
    rec.check(ac <= ab + bc, [&] { return describe("triangle", {a, b, c}); });
  }
  return rec.finish();
}

SuiteReport formula(SplitMix64& rng) {
  Recorder rec("formula");
  const auto& f = default_factorizer();
  for (int i = 0; i < kSamples; ++i) {
    const std::uint64_t a = rng.uniform(1, 1'000'000'000);
    const std::uint64_t b = rng.uniform(1, 1'000'000'000);
    const auto fa = f.factor(a), fb = f.factor(b);
    rec.check(dist(fa, fb) == dist_via_lcm_gcd(fa, fb), [&] { return describe("dist", {a, b}); });
  }
  return rec.finish();
}

SuiteReport invariance(SplitMix64& rng) {
  Recorder rec("invariance");
  for (int i = 0; i < kSamples; ++i) {
    const std::uint64_t a = rng.uniform(1, 1'000'000);
    const std::uint64_t b = rng.uniform(1, 1'000'000);
    const std::uint64_t c = rng.uniform(1, 1'000'000);
    const auto ac = checked_mul(a, c);
    const auto bc = checked_mul(b, c);
    if (!ac || !bc) continue;
    rec.check(dist(*ac, *bc) == dist(a, b), [&] { return describe("d(ac, bc)", {a, b, c}); });
  }
  return rec.finish();
}

bool is_unit_path(const std::vector<std::uint64_t>& path) {
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (!is_unit_step(path[i - 1], path[i])) return false;
  }
  return true;
}

SuiteReport geodesic(SplitMix64& rng) {
  Recorder rec("geodesic");
  const auto& f = default_factorizer();
  for (int i = 0; i < kSamples; ++i) {
    const std::uint64_t a = rng.uniform(1, 1'000'000);
    const std::uint64_t b = rng.uniform(1, 1'000'000);
    const auto fa = f.factor(a), fb = f.factor(b);
    const auto [l, g] = lcm_gcd_exponents(fa, fb);
    const MetricValue d = dist(fa, fb);
    rec.check(dist(fa, l) + dist(l, fb) == d, [&] { return describe("via lcm", {a, b}); });
    rec.check(dist(fa, g) + dist(g, fb) == d, [&] { return describe("via gcd", {a, b}); });
    rec.check(fa * fb == l * g, [&] { return describe("ab = lcm gcd", {a, b}); });
    for (Waypoint via : {Waypoint::kLcm, Waypoint::kGcd}) {
      const auto path = geodesic_through(a, b, via);
      const bool ok = path.front() == a && path.back() == b && path.size() == d + 1 &&
                      is_unit_path(path);
      rec.check(ok, [&] { return describe("geodesic_through", {a, b}); });
    }
  }
  return rec.finish();
}

SuiteReport unit_step(SplitMix64&) {
  Recorder rec("unit-step");
  constexpr std::uint64_t kMax = 2000;
  const SpfSieve sieve(kMax);
  for (std::uint64_t a = 1; a <= kMax; ++a) {
    for (std::uint64_t b = a + 1; b <= kMax; ++b) {
      const bool prime_ratio = b % a == 0 && sieve.spf(b / a) == b / a;
      rec.check(is_unit_step(a, b).has_value() == prime_ratio,
                [&] { return describe("is_unit_step", {a, b}); });
    }
  }
  return rec.finish();
}

SuiteReport ball(SplitMix64&) {
  Recorder rec("ball");
  for (std::uint64_t n : {100ULL, 10'000ULL}) {
    std::vector<std::uint64_t> expected{1};
    const auto primes = primes_up_to(n);
    expected.insert(expected.end(), primes.begin(), primes.end());
    rec.check(closed_ball(1, 1, n) == expected, [&] { return describe("closed_ball", {1, 1, n}); });
  }
  return rec.finish();
}

SuiteReport diameter(SplitMix64&) {
  Recorder rec("diameter");
  for (std::uint64_t n = 1; n <= 300; ++n) {
    rec.check(diameter_formula(n) == diameter_bruteforce(n).value,
              [&] { return describe("diameter", {n}); });
  }
  return rec.finish();
}

SuiteReport hasse(SplitMix64&) {
  Recorder rec("hasse");
  constexpr std::uint64_t kMax = 200;
  const auto& f = default_factorizer();
  std::vector<Factorization> factored{Factorization()};
  for (std::uint64_t m = 1; m <= kMax; ++m) factored.push_back(f.factor(m));
  for (std::uint64_t n = 1; n <= kMax; ++n) {
    const HasseGraph g = build_hasse(n);
    for (std::uint64_t a = 1; a <= n; ++a) {
      const auto bfs = bfs_distances(g, a);
      for (std::uint64_t b = 1; b <= n; ++b) {
        rec.check(bfs[b] == dist(factored[a], factored[b]),
                  [&] { return describe("bfs vs dist", {n, a, b}); });
      }
    }
  }
  return rec.finish();
}

SuiteReport index(SplitMix64& rng) {
  Recorder rec("index");
  constexpr std::uint64_t kCorpus = 500;
  BkIndex idx;
  for (std::uint64_t v = 1; v <= kCorpus; ++v) idx.insert(v);
  const auto& f = default_factorizer();
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t x = rng.uniform(1, 2 * kCorpus);
    const MetricValue r = rng.uniform(0, 6);
    const std::size_t k = rng.uniform(1, 10);
    const auto fx = f.factor(x);
    std::vector<std::uint64_t> scan;
    std::vector<Neighbor> all;
    for (std::uint64_t v = 1; v <= kCorpus; ++v) {
      const MetricValue d = dist(fx, f.factor(v));
      if (d <= r) scan.push_back(v);
      all.push_back({v, d});
    }
    std::sort(all.begin(), all.end(), [](const Neighbor& a, const Neighbor& b) {
      return std::pair(a.distance, a.value) < std::pair(b.distance, b.value);
    });
    all.resize(k);
    rec.check(idx.range(x, r) == scan, [&] { return describe("range", {x, r}); });
    rec.check(idx.nearest(x, k) == all, [&] { return describe("nearest", {x, k}); });
  }
  return rec.finish();
}

ExtendedNumber random_extended(SplitMix64& rng) {
  const ExtendedNumber base = from_rational(rng.uniform(1, 10'000), rng.uniform(1, 10'000));
  return nth_root(base, rng.uniform(1, 6));
}

SuiteReport extended(SplitMix64& rng) {
  Recorder rec("extended");
  for (int i = 0; i < kSamples; ++i) {
    const ExtendedNumber x = random_extended(rng) * random_extended(rng);
    const ExtendedNumber y = random_extended(rng);
    const ExtendedNumber z = random_extended(rng);
    const Rational xy = ext_dist(x, y);
    rec.check(ext_dist(x, x).is_zero(), [&] { return "identity " + to_string(x); });
    rec.check(xy.is_zero() == (x == y), [&] { return "separation " + to_string(x); });
    rec.check(xy == ext_dist(y, x), [&] { return "symmetry " + to_string(x); });
    rec.check(ext_dist(x, z) <= xy + ext_dist(y, z), [&] { return "triangle " + to_string(x); });
    rec.check(l1_distance(embed(x), embed(y)) == xy, [&] { return "isometry " + to_string(x); });
    rec.check(ext_dist(x * z, y * z) == xy, [&] { return "invariance " + to_string(x); });

    const std::uint64_t a = rng.uniform(1, 1'000'000);
    const std::uint64_t b = rng.uniform(1, 1'000'000);
    rec.check(ext_dist(from_rational(a, 1), from_rational(b, 1)) ==
                  Rational(static_cast<std::int64_t>(dist(a, b))),
              [&] { return describe("restriction", {a, b}); });
  }
  return rec.finish();
}

SuiteReport omega_bounds(SplitMix64&) {
  Recorder rec("omega-bounds");
  const auto& f = default_factorizer();
  for (std::uint64_t n = 1; n <= 100'000; ++n) {
    const std::uint64_t omega = f.big_omega(n);
    rec.check(omega <= xi(2, n), [&] { return describe("Omega <= xi_2", {n}); });
    if (n % 2 == 1) rec.check(omega <= xi(3, n), [&] { return describe("Omega <= xi_3", {n}); });
  }
  return rec.finish();
}

// FNV-1a; std::hash is not stable across standard libraries.
std::uint64_t stream_id(std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

using Suite = std::function<SuiteReport(SplitMix64&)>;

const std::vector<std::pair<std::string, Suite>>& registry() {
  static const std::vector<std::pair<std::string, Suite>> suites = {
      {"axioms", axioms},       {"formula", formula},   {"invariance", invariance},
      {"geodesic", geodesic},   {"unit-step", unit_step}, {"ball", ball},
      {"diameter", diameter},   {"hasse", hasse},       {"index", index},
      {"extended", extended},   {"omega-bounds", omega_bounds},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& verification_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, suite] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<SuiteReport> run_verification(std::string_view suite, std::uint64_t seed) {
  std::vector<SuiteReport> reports;
  for (const auto& [name, run] : registry()) {
    if (!suite.empty() && suite != name) continue;
    // Each suite draws from its own stream so adding suites never shifts
    // another suite's samples.
    SplitMix64 rng(seed ^ stream_id(name));
    reports.push_back(run(rng));
  }
  if (reports.empty()) throw InvalidArgument("unknown verification suite '" + std::string(suite) + "'");
  return reports;
}

}  // namespace omega
