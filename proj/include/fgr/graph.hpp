#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "fgr/checked.hpp"

namespace fgr {

using NodeId = int;

struct Edge {
  NodeId source = 0;
  NodeId target = 0;
  Weight weight = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Arc {
  NodeId node;
  Weight weight;
};

// Returns the first violated invariant, or nullopt.
std::optional<std::string> validate_digraph(int node_count, std::span<const Edge> edges,
                                            Weight weight_bound = kDefaultWeightBound);

// Simple directed graph with exact integer weights. Immutable after
// construction; adjacency lists are sorted by neighbour id.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;
  // Throws InvalidInstance on any invariant violation.
  WeightedDigraph(int node_count, std::vector<Edge> edges, Weight weight_bound = kDefaultWeightBound);

  int node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  Weight weight_bound() const { return weight_bound_; }

  std::span<const Arc> out(NodeId u) const {
    return {out_arcs_.data() + out_start_[u], out_arcs_.data() + out_start_[u + 1]};
  }
  std::span<const Arc> in(NodeId v) const {
    return {in_arcs_.data() + in_start_[v], in_arcs_.data() + in_start_[v + 1]};
  }
  std::size_t out_degree(NodeId u) const { return out_start_[u + 1] - out_start_[u]; }
  std::size_t in_degree(NodeId v) const { return in_start_[v + 1] - in_start_[v]; }
  std::optional<Weight> weight(NodeId u, NodeId v) const;
  bool has_edge(NodeId u, NodeId v) const { return weight(u, v).has_value(); }
  Weight max_abs_weight() const;

  friend bool operator==(const WeightedDigraph& a, const WeightedDigraph& b) {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
  }

 private:
  int node_count_ = 0;
  std::vector<Edge> edges_;
  Weight weight_bound_ = kDefaultWeightBound;
  std::vector<std::size_t> out_start_{0};
  std::vector<Arc> out_arcs_;
  std::vector<std::size_t> in_start_{0};
  std::vector<Arc> in_arcs_;
};

// Symmetric digraph from undirected edges (each stored in both directions).
WeightedDigraph make_undirected(int node_count, std::span<const Edge> edges,
                                Weight weight_bound = kDefaultWeightBound);
bool is_symmetric(const WeightedDigraph& g);

// Induced subgraph on `nodes` (renumbered in the given order).
WeightedDigraph induced_subgraph(const WeightedDigraph& g, std::span<const NodeId> nodes);

std::optional<std::string> validate_layered(const WeightedDigraph& g, int k, std::span<const int> layer_of);

// Digraph whose edges only go from layer i to layer i+1 mod k.
class CircleLayeredGraph {
 public:
  CircleLayeredGraph() = default;
  CircleLayeredGraph(WeightedDigraph graph, int k, std::vector<int> layer_of);

  const WeightedDigraph& graph() const { return graph_; }
  int k() const { return k_; }
  int layer_of(NodeId v) const { return layer_of_[v]; }
  const std::vector<int>& layers() const { return layer_of_; }
  // Nodes of layer i in increasing id order.
  const std::vector<NodeId>& layer(int i) const { return members_[i]; }
  int node_count() const { return graph_.node_count(); }

  friend bool operator==(const CircleLayeredGraph& a, const CircleLayeredGraph& b) {
    return a.k_ == b.k_ && a.layer_of_ == b.layer_of_ && a.graph_ == b.graph_;
  }

 private:
  WeightedDigraph graph_;
  int k_ = 0;
  std::vector<int> layer_of_;
  std::vector<std::vector<NodeId>> members_;
};

}  // namespace fgr
