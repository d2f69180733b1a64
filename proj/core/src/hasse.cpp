#include "omega/hasse.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "omega/errors.hpp"
#include "omega/factor.hpp"

namespace omega {
namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

void check_vertex(const HasseGraph& g, std::uint64_t v) {
  if (v < 1 || v > g.n()) {
    throw InvalidArgument("vertex " + std::to_string(v) + " outside [1, " + std::to_string(g.n()) +
                          "]");
  }
}

}  // namespace

std::span<const std::uint32_t> HasseGraph::neighbors(std::uint64_t v) const {
  return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> HasseGraph::edges() const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  out.reserve(edge_count());
  for (std::uint64_t a = 1; a <= n_; ++a) {
    for (std::uint32_t b : neighbors(a)) {
      if (b > a) out.emplace_back(a, b);
    }
  }
  return out;
}

HasseGraph build_hasse(std::uint64_t n, std::uint64_t cap) {
  if (n == 0) throw InvalidArgument("Hasse graph needs n >= 1");
  if (n > cap) {
    throw OutOfRange("Hasse graph size " + std::to_string(n) + " exceeds cap " +
                     std::to_string(cap));
  }
  HasseGraph g;
  g.n_ = n;
  if (n == 1) {
    g.offsets_.assign(3, 0);
    return g;
  }
  const auto primes = SpfSieve(n).primes();

  // Forward sieve: a -- a*p for every prime p <= n / a. Two passes, one to
  // size the rows and one to fill them.
  std::vector<std::size_t> degree(n + 2, 0);
  for (std::uint64_t a = 1; a <= n; ++a) {
    for (std::uint32_t p : primes) {
      if (p > n / a) break;
      ++degree[a];
      ++degree[a * p];
    }
  }
  g.offsets_.assign(n + 2, 0);
  for (std::uint64_t v = 1; v <= n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.neighbors_.resize(g.offsets_[n + 1]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end());
  for (std::uint64_t a = 1; a <= n; ++a) {
    for (std::uint32_t p : primes) {
      if (p > n / a) break;
      const std::uint64_t b = a * p;
      g.neighbors_[cursor[a]++] = static_cast<std::uint32_t>(b);
      g.neighbors_[cursor[b]++] = static_cast<std::uint32_t>(a);
    }
  }
  for (std::uint64_t v = 1; v <= n; ++v) {
    std::sort(g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  return g;
}

std::vector<std::uint32_t> bfs_distances(const HasseGraph& g, std::uint64_t source) {
  check_vertex(g, source);
  std::vector<std::uint32_t> dist(g.n() + 1, kUnreached);
  std::vector<std::uint32_t> queue;
  queue.reserve(g.n());
  dist[source] = 0;
  queue.push_back(static_cast<std::uint32_t>(source));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t v = queue[head];
    for (std::uint32_t w : g.neighbors(v)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::uint64_t graph_distance(const HasseGraph& g, std::uint64_t a, std::uint64_t b) {
  check_vertex(g, a);
  check_vertex(g, b);
  if (a == b) return 0;
  // Stops as soon as b is discovered.
  std::vector<std::uint32_t> dist(g.n() + 1, kUnreached);
  std::vector<std::uint32_t> queue{static_cast<std::uint32_t>(a)};
  dist[a] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t v = queue[head];
    for (std::uint32_t w : g.neighbors(v)) {
      if (dist[w] != kUnreached) continue;
      dist[w] = dist[v] + 1;
      if (w == b) return dist[w];
      queue.push_back(w);
    }
  }
  throw std::logic_error("Hasse graph is disconnected");
}

std::string export_dot(const HasseGraph& g) {
  // Omega levels from a local spf pass: level[m] = level[m / spf(m)] + 1.
  std::vector<std::uint32_t> level(g.n() + 1, 0);
  if (g.n() >= 2) {
    const SpfSieve sieve(g.n());
    for (std::uint64_t m = 2; m <= g.n(); ++m) level[m] = level[m / sieve.spf(m)] + 1;
  }
  std::map<std::uint32_t, std::vector<std::uint64_t>> by_level;
  for (std::uint64_t v = 1; v <= g.n(); ++v) by_level[level[v]].push_back(v);

  std::ostringstream out;
  out << "graph hasse_" << g.n() << " {\n";
  for (const auto& [omega, vertices] : by_level) {
    out << "  { rank=same;";
    for (std::uint64_t v : vertices) out << ' ' << v << ';';
    out << " }\n";
  }
  for (const auto& [a, b] : g.edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace omega
