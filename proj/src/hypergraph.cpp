#include "fgr/hypergraph.hpp"

#include <algorithm>
#include <unordered_set>

namespace fgr {

std::size_t NodeSetHash::operator()(const std::vector<NodeId>& v) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (NodeId x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::optional<std::string> validate_hypergraph(int node_count, int arity, const std::vector<int>* part_of,
                                               int part_count, std::span<const Hyperedge> edges,
                                               Weight weight_bound) {
  if (node_count < 0) return "negative node count";
  if (arity < 2) return "arity below 2";
  if (part_of) {
    if (static_cast<int>(part_of->size()) != node_count) return "part map size differs from node count";
    for (int p : *part_of)
      if (p < 0 || p >= part_count) return "part index out of range";
  }
  std::unordered_set<std::vector<NodeId>, NodeSetHash> seen;
  for (const Hyperedge& e : edges) {
    if (static_cast<int>(e.nodes.size()) != arity) return "hyperedge size differs from arity";
    std::vector<NodeId> s = e.nodes;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0 || s[i] >= node_count) return "node id out of range in hyperedge";
      if (i > 0 && s[i] == s[i - 1]) return "repeated node in hyperedge";
    }
    if (part_of) {
      std::vector<int> ps;
      for (NodeId v : s) ps.push_back((*part_of)[v]);
      std::sort(ps.begin(), ps.end());
      if (std::adjacent_find(ps.begin(), ps.end()) != ps.end()) return "hyperedge has two nodes of one part";
    }
    if (!seen.insert(s).second) return "duplicate hyperedge";
    if (e.w1 > weight_bound || e.w1 < -weight_bound || e.w2 > weight_bound || e.w2 < -weight_bound)
      return "weight outside bound " + std::to_string(weight_bound);
  }
  return std::nullopt;
}

UniformHypergraph::UniformHypergraph(int node_count, int arity, std::vector<Hyperedge> edges, Weight weight_bound)
    : node_count_(node_count), arity_(arity), edges_(std::move(edges)), weight_bound_(weight_bound) {
  if (auto v = validate_hypergraph(node_count_, arity_, nullptr, 0, edges_, weight_bound_)) throw InvalidInstance(*v);
  index();
}

UniformHypergraph::UniformHypergraph(int node_count, int arity, std::vector<int> part_of, int part_count,
                                     std::vector<Hyperedge> edges, Weight weight_bound)
    : node_count_(node_count),
      arity_(arity),
      part_count_(part_count),
      part_of_(std::move(part_of)),
      edges_(std::move(edges)),
      weight_bound_(weight_bound) {
  if (part_count_ < 1) throw InvalidInstance("partitioned hypergraph needs at least one part");
  if (auto v = validate_hypergraph(node_count_, arity_, &part_of_, part_count_, edges_, weight_bound_))
    throw InvalidInstance(*v);
  index();
}

void UniformHypergraph::index() {
  for (Hyperedge& e : edges_) std::sort(e.nodes.begin(), e.nodes.end());
  lookup_.reserve(edges_.size() * 2);
  for (std::size_t i = 0; i < edges_.size(); ++i) lookup_.emplace(edges_[i].nodes, i);
  if (part_count_ > 0) {
    members_.assign(part_count_, {});
    position_.assign(node_count_, 0);
    for (int v = 0; v < node_count_; ++v) {
      position_[v] = static_cast<int>(members_[part_of_[v]].size());
      members_[part_of_[v]].push_back(v);
    }
  }
}

bool UniformHypergraph::has_w2() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Hyperedge& e) { return e.w2 != 0; });
}

std::optional<std::size_t> UniformHypergraph::find(const std::vector<NodeId>& sorted_nodes) const {
  auto it = lookup_.find(sorted_nodes);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

const Hyperedge* UniformHypergraph::lookup(const std::vector<NodeId>& sorted_nodes) const {
  auto it = lookup_.find(sorted_nodes);
  return it == lookup_.end() ? nullptr : &edges_[it->second];
}

UniformHypergraph make_clique_instance(int node_count, std::vector<int> part_of, int part_count,
                                       std::span<const Edge> undirected_edges, Weight weight_bound) {
  std::vector<Hyperedge> edges;
  edges.reserve(undirected_edges.size());
  for (const Edge& e : undirected_edges) edges.push_back({{e.source, e.target}, e.weight, 0});
  return UniformHypergraph(node_count, 2, std::move(part_of), part_count, std::move(edges), weight_bound);
}

}  // namespace fgr
