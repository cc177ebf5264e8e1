#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "fgr/checked.hpp"
#include "fgr/graph.hpp"

namespace fgr {

struct Hyperedge {
  std::vector<NodeId> nodes;  // sorted, distinct
  Weight w1 = 0;
  Weight w2 = 0;
  friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
};

struct NodeSetHash {
  std::size_t operator()(const std::vector<NodeId>& v) const noexcept;
};

std::optional<std::string> validate_hypergraph(int node_count, int arity, const std::vector<int>* part_of,
                                               int part_count, std::span<const Hyperedge> edges,
                                               Weight weight_bound = kDefaultWeightBound);

// k-uniform hypergraph, optionally partitioned into parts, with two weights per
// hyperedge. Hyperedge node lists are sorted on construction.
class UniformHypergraph {
 public:
  UniformHypergraph() = default;
  UniformHypergraph(int node_count, int arity, std::vector<Hyperedge> edges,
                    Weight weight_bound = kDefaultWeightBound);
  UniformHypergraph(int node_count, int arity, std::vector<int> part_of, int part_count,
                    std::vector<Hyperedge> edges, Weight weight_bound = kDefaultWeightBound);

  int node_count() const { return node_count_; }
  int arity() const { return arity_; }
  bool partitioned() const { return part_count_ > 0; }
  int part_count() const { return part_count_; }
  int part_of(NodeId v) const { return part_of_[v]; }
  const std::vector<int>& parts() const { return part_of_; }
  // Members of part p in increasing id order.
  const std::vector<NodeId>& part(int p) const { return members_[p]; }
  // Position of v inside its part.
  int position_in_part(NodeId v) const { return position_[v]; }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  Weight weight_bound() const { return weight_bound_; }
  bool has_w2() const;

  // Index of the hyperedge with this sorted node set.
  std::optional<std::size_t> find(const std::vector<NodeId>& sorted_nodes) const;
  const Hyperedge* lookup(const std::vector<NodeId>& sorted_nodes) const;

  friend bool operator==(const UniformHypergraph& a, const UniformHypergraph& b) {
    return a.node_count_ == b.node_count_ && a.arity_ == b.arity_ && a.part_count_ == b.part_count_ &&
           a.part_of_ == b.part_of_ && a.edges_ == b.edges_;
  }

 private:
  void index();

  int node_count_ = 0;
  int arity_ = 2;
  int part_count_ = 0;
  std::vector<int> part_of_;
  std::vector<std::vector<NodeId>> members_;
  std::vector<int> position_;
  std::vector<Hyperedge> edges_;
  Weight weight_bound_ = kDefaultWeightBound;
  std::unordered_map<std::vector<NodeId>, std::size_t, NodeSetHash> lookup_;
};

// Weighted k-partite clique instance as a 2-uniform hypergraph: node i of part p
// gets id p * part_size + i when all parts have the same size.
UniformHypergraph make_clique_instance(int node_count, std::vector<int> part_of, int part_count,
                                       std::span<const Edge> undirected_edges,
                                       Weight weight_bound = kDefaultWeightBound);

}  // namespace fgr
