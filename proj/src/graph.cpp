#include "fgr/graph.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace fgr {

Weight binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Weight r = 1;
  for (int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

Weight factorial(int n) {
  Weight r = 1;
  for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

namespace {

std::uint64_t pair_key(NodeId u, NodeId v) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace

std::optional<std::string> validate_digraph(int node_count, std::span<const Edge> edges, Weight weight_bound) {
  if (node_count < 0) return "negative node count";
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    if (e.source < 0 || e.source >= node_count || e.target < 0 || e.target >= node_count)
      return "node id out of range in edge " + std::to_string(e.source) + " " + std::to_string(e.target);
    if (e.source == e.target) return "self-loop at node " + std::to_string(e.source);
    if (!seen.insert(pair_key(e.source, e.target)).second)
      return "duplicate edge " + std::to_string(e.source) + " " + std::to_string(e.target);
    if (e.weight > weight_bound || e.weight < -weight_bound)
      return "weight " + std::to_string(e.weight) + " outside bound " + std::to_string(weight_bound);
  }
  return std::nullopt;
}

WeightedDigraph::WeightedDigraph(int node_count, std::vector<Edge> edges, Weight weight_bound)
    : node_count_(node_count), edges_(std::move(edges)), weight_bound_(weight_bound) {
  if (auto v = validate_digraph(node_count_, edges_, weight_bound_)) throw InvalidInstance(*v);
  out_start_.assign(node_count_ + 1, 0);
  in_start_.assign(node_count_ + 1, 0);
  for (const Edge& e : edges_) {
    ++out_start_[e.source + 1];
    ++in_start_[e.target + 1];
  }
  for (int i = 0; i < node_count_; ++i) {
    out_start_[i + 1] += out_start_[i];
    in_start_[i + 1] += in_start_[i];
  }
  out_arcs_.resize(edges_.size());
  in_arcs_.resize(edges_.size());
  std::vector<std::size_t> op(out_start_.begin(), out_start_.end() - 1);
  std::vector<std::size_t> ip(in_start_.begin(), in_start_.end() - 1);
  for (const Edge& e : edges_) {
    out_arcs_[op[e.source]++] = {e.target, e.weight};
    in_arcs_[ip[e.target]++] = {e.source, e.weight};
  }
  auto by_node = [](const Arc& a, const Arc& b) { return a.node < b.node; };
  for (int i = 0; i < node_count_; ++i) {
    std::sort(out_arcs_.begin() + out_start_[i], out_arcs_.begin() + out_start_[i + 1], by_node);
    std::sort(in_arcs_.begin() + in_start_[i], in_arcs_.begin() + in_start_[i + 1], by_node);
  }
}

std::optional<Weight> WeightedDigraph::weight(NodeId u, NodeId v) const {
  if (u < 0 || u >= node_count_) return std::nullopt;
  auto arcs = out(u);
  auto it = std::lower_bound(arcs.begin(), arcs.end(), v, [](const Arc& a, NodeId x) { return a.node < x; });
  if (it == arcs.end() || it->node != v) return std::nullopt;
  return it->weight;
}

Weight WeightedDigraph::max_abs_weight() const {
  Weight m = 0;
  for (const Edge& e : edges_) m = std::max(m, checked_abs(e.weight));
  return m;
}

WeightedDigraph make_undirected(int node_count, std::span<const Edge> edges, Weight weight_bound) {
  std::vector<Edge> both;
  both.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    both.push_back(e);
    both.push_back({e.target, e.source, e.weight});
  }
  return WeightedDigraph(node_count, std::move(both), weight_bound);
}

bool is_symmetric(const WeightedDigraph& g) {
  for (const Edge& e : g.edges()) {
    auto w = g.weight(e.target, e.source);
    if (!w || *w != e.weight) return false;
  }
  return true;
}

WeightedDigraph induced_subgraph(const WeightedDigraph& g, std::span<const NodeId> nodes) {
  std::vector<int> local(g.node_count(), -1);
  for (std::size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (local[e.source] >= 0 && local[e.target] >= 0) edges.push_back({local[e.source], local[e.target], e.weight});
  return WeightedDigraph(static_cast<int>(nodes.size()), std::move(edges), g.weight_bound());
}

std::optional<std::string> validate_layered(const WeightedDigraph& g, int k, std::span<const int> layer_of) {
  if (k < 3) return "layer count " + std::to_string(k) + " below 3";
  if (static_cast<int>(layer_of.size()) != g.node_count()) return "layer map size differs from node count";
  for (int v = 0; v < g.node_count(); ++v)
    if (layer_of[v] < 0 || layer_of[v] >= k) return "layer index out of range at node " + std::to_string(v);
  for (const Edge& e : g.edges())
    if (layer_of[e.target] != (layer_of[e.source] + 1) % k)
      return "layer constraint violated by edge " + std::to_string(e.source) + " " + std::to_string(e.target);
  return std::nullopt;
}

CircleLayeredGraph::CircleLayeredGraph(WeightedDigraph graph, int k, std::vector<int> layer_of)
    : graph_(std::move(graph)), k_(k), layer_of_(std::move(layer_of)) {
  if (auto v = validate_layered(graph_, k_, layer_of_)) throw InvalidInstance(*v);
  members_.assign(k_, {});
  for (int v = 0; v < graph_.node_count(); ++v) members_[layer_of_[v]].push_back(v);
}

}  // namespace fgr
