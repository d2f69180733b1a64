#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "omega/factor.hpp"
#include "omega/metric.hpp"

namespace omega {

struct Neighbor {
  std::uint64_t value;
  MetricValue distance;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

// Counters filled by queries when requested.
struct QueryStats {
  std::size_t nodes_visited = 0;
};

// BK-tree over naturals under d. The first value inserted is the root; child
// edges are labelled with their exact distance to the parent. Each node keeps
// its factorization so queries factor only the probe.
//
// Queries are const and may run concurrently; insert needs exclusive access.
class BkIndex {
 public:
  explicit BkIndex(const Factorizer& factorizer = default_factorizer())
      : factorizer_(&factorizer) {}

  // Returns false (and leaves the index unchanged) if v is already present.
  // Throws InvalidArgument for v == 0.
  bool insert(std::uint64_t v);

  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }

  // Label of the edge from parent to child, if child hangs directly off parent.
  std::optional<MetricValue> edge_label(std::uint64_t parent, std::uint64_t child) const;

  // Every stored v with d(x, v) <= r, ascending.
  std::vector<std::uint64_t> range(std::uint64_t x, MetricValue r,
                                   QueryStats* stats = nullptr) const;

  // The k closest stored values ordered by (distance, value). Throws EmptyIndex.
  std::vector<Neighbor> nearest(std::uint64_t x, std::size_t k,
                                QueryStats* stats = nullptr) const;

  // Stored values in insertion order.
  std::vector<std::uint64_t> values() const;

 private:
  struct Node {
    std::uint64_t value;
    Factorization factors;
    std::map<MetricValue, std::size_t> children;
  };

  const Factorizer* factorizer_;
  std::vector<Node> nodes_;  // nodes_[0] is the root
};

}  // namespace omega
