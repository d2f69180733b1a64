#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace omega {

inline constexpr std::uint64_t kDefaultHasseCap = 1'000'000;

// Covering-relation graph of divisibility on I_n = {1, ..., n}: a and b are
// adjacent iff one is the other times a prime. Stored as CSR with sorted
// neighbor lists. Immutable after build.
class HasseGraph {
 public:
  std::uint64_t n() const { return n_; }
  std::size_t edge_count() const { return neighbors_.size() / 2; }
  std::span<const std::uint32_t> neighbors(std::uint64_t v) const;
  // Edges (a, b) with a < b, sorted.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges() const;

 private:
  friend HasseGraph build_hasse(std::uint64_t n, std::uint64_t cap);

  std::uint64_t n_ = 0;
  std::vector<std::size_t> offsets_;  // size n + 2, indexed by vertex
  std::vector<std::uint32_t> neighbors_;
};

// Throws InvalidArgument for n == 0 and OutOfRange for n > cap.
HasseGraph build_hasse(std::uint64_t n, std::uint64_t cap = kDefaultHasseCap);

// BFS shortest-path length. Throws InvalidArgument for vertices outside [1, n].
std::uint64_t graph_distance(const HasseGraph& g, std::uint64_t a, std::uint64_t b);

// BFS distances from `source` to every vertex; index 0 is unused.
std::vector<std::uint32_t> bfs_distances(const HasseGraph& g, std::uint64_t source);

// Undirected DOT: header "graph hasse_<n> {", one rank=same group per Omega
// level, then each edge once as "a -- b;" sorted by (a, b).
std::string export_dot(const HasseGraph& g);

}  // namespace omega
