#include "omega/bk_index.hpp"

#include <algorithm>
#include <queue>

#include "omega/errors.hpp"

namespace omega {

bool BkIndex::insert(std::uint64_t v) {
  if (v == 0) throw InvalidArgument("BK index stores naturals >= 1 only");
  Factorization factors = factorizer_->factor(v);
  if (nodes_.empty()) {
    nodes_.push_back({v, std::move(factors), {}});
    return true;
  }
  std::size_t current = 0;
  while (true) {
    const MetricValue d = dist(nodes_[current].factors, factors);
    if (d == 0) return false;
    auto it = nodes_[current].children.find(d);
    if (it == nodes_[current].children.end()) {
      nodes_[current].children.emplace(d, nodes_.size());
      nodes_.push_back({v, std::move(factors), {}});
      return true;
    }
    current = it->second;
  }
}

std::optional<MetricValue> BkIndex::edge_label(std::uint64_t parent, std::uint64_t child) const {
  for (const Node& node : nodes_) {
    if (node.value != parent) continue;
    for (const auto& [label, index] : node.children) {
      if (nodes_[index].value == child) return label;
    }
    return std::nullopt;
  }
  return std::nullopt;
}

std::vector<std::uint64_t> BkIndex::range(std::uint64_t x, MetricValue r,
                                          QueryStats* stats) const {
  const Factorization probe = factorizer_->factor(x);
  std::vector<std::uint64_t> hits;
  if (nodes_.empty()) return hits;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const Node& node = nodes_[stack.back()];
    stack.pop_back();
    if (stats) ++stats->nodes_visited;
    const MetricValue d = dist(node.factors, probe);
    if (d <= r) hits.push_back(node.value);
    // Triangle inequality: a subtree under label e can only hold matches when
    // |e - d| <= r.
    const MetricValue lo = d > r ? d - r : 0;
    for (auto it = node.children.lower_bound(lo);
         it != node.children.end() && it->first <= d + r; ++it) {
      stack.push_back(it->second);
    }
  }
  std::sort(hits.begin(), hits.end());
  return hits;
}

std::vector<Neighbor> BkIndex::nearest(std::uint64_t x, std::size_t k, QueryStats* stats) const {
  if (nodes_.empty()) throw EmptyIndex();
  if (k == 0) throw InvalidArgument("nearest needs k >= 1");
  const Factorization probe = factorizer_->factor(x);

  auto closer = [](const Neighbor& a, const Neighbor& b) {
    return std::pair(a.distance, a.value) < std::pair(b.distance, b.value);
  };
  // Max-heap on (distance, value): top is the current k-th best.
  std::priority_queue<Neighbor, std::vector<Neighbor>, decltype(closer)> best(closer);

  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const Node& node = nodes_[stack.back()];
    stack.pop_back();
    if (stats) ++stats->nodes_visited;
    const Neighbor candidate{node.value, dist(node.factors, probe)};
    if (best.size() < k) {
      best.push(candidate);
    } else if (closer(candidate, best.top())) {
      best.pop();
      best.push(candidate);
    }
    // With k results in hand only subtrees that can reach distance <= the
    // current k-th distance matter; ties on distance may still win on value.
    const MetricValue d = candidate.distance;
    if (best.size() < k) {
      for (const auto& [label, child] : node.children) stack.push_back(child);
      continue;
    }
    const MetricValue radius = best.top().distance;
    const MetricValue lo = d > radius ? d - radius : 0;
    for (auto it = node.children.lower_bound(lo);
         it != node.children.end() && it->first <= d + radius; ++it) {
      stack.push_back(it->second);
    }
  }

  std::vector<Neighbor> out;
  out.reserve(best.size());
  while (!best.empty()) {
    out.push_back(best.top());
    best.pop();
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> BkIndex::values() const {
  std::vector<std::uint64_t> out;
  out.reserve(nodes_.size());
  for (const Node& node : nodes_) out.push_back(node.value);
  return out;
}

}  // namespace omega
