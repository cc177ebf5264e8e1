#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fgr/graph.hpp"
#include "fgr/oracles.hpp"

namespace fgr {

enum class GadgetRole {
  LayerNode,      // copy of a node of layer `layer`
  PrimeNode,      // V'_1 copy of layer-0 node `index`
  Hub,            // u_{layer+1}
  PrimeHub,       // u'_1
  Selector,       // V_1-side selector for bit `layer`, value `index`
  PrimeSelector,  // V'_1-side selector (unweighted gadgets)
  SelectorPath,   // internal node of a selector path
  X,
  Y,
  Pendant,        // p_{index+1}
};

struct NodeRole {
  GadgetRole role;
  int layer = -1;
  int index = -1;
  NodeId source = -1;  // node of the layered input, for copies
};

// Undirected gadget stored as a symmetric digraph.
struct RadiusGadget {
  WeightedDigraph graph;
  Weight threshold = 0;  // weighted: radius < threshold; unweighted: radius <= threshold
  bool weighted = true;
  int k = 0;
  Weight R = 0;
  Weight F = 0;
  std::vector<NodeRole> provenance;
};

// F = 20kR. Requires odd k >= 3, non-empty layers and R >= max(1, max |w|).
RadiusGadget build_radius_gadget_weighted(const CircleLayeredGraph& g, Weight R);
RadiusGadget build_radius_gadget_unweighted(const CircleLayeredGraph& g);

// Recomputes every gadget edge weight from (k, R) and the roles of its ends;
// returns the first discrepancy.
std::optional<std::string> audit_radius_gadget(const RadiusGadget& gadget, const CircleLayeredGraph& g);

using DistanceSolver = std::function<Weight(const WeightedDigraph&)>;

// True iff g has a negative k-cycle; one radius call.
bool decide_negcycle_via_radius(const CircleLayeredGraph& g, Weight R, const DistanceSolver& radius_solver);
// True iff g has a k-cycle (weights ignored); one radius call.
bool detect_kcycle_via_radius(const CircleLayeredGraph& g, const DistanceSolver& radius_solver);

// Node universe of G' with the three subgraph selections of the construction:
// core = hatted layers 2..k, left = hatted V_1 plus core, right = core plus
// hatted V'_1.
struct WienerGadget {
  WeightedDigraph graph;
  bool weighted = true;
  int k = 0;
  Weight R = 0;
  Weight F = 0;
  int v1_size = 0;
  Weight threshold = 0;
  std::vector<NodeId> core, left, right;
  std::vector<NodeId> selectors;  // every selector-block node, including path nodes
  std::vector<NodeId> v1, v1_prime;
  NodeId u1 = -1;
  NodeId u1_prime = -1;
  std::vector<NodeRole> provenance;
};

WienerGadget build_wiener_gadget_weighted(const CircleLayeredGraph& g, Weight R);
WienerGadget build_wiener_gadget_unweighted(const CircleLayeredGraph& g);

struct WienerEvaluation {
  Weight w_gprime = 0, w_left = 0, w_right = 0, w_core = 0;
  Weight w_b = 0;  // distance sum over unordered pairs touching a selector node
  Weight w_u = 0;  // distances u_1 -> hatted V'_1 plus u'_1 -> V_1
  // (W(G') - W(left) - W(right) + W(core) - 2 w_B - 2 w_u) / 2, which equals
  // the sum of d(u, v) over u in V_1, v in V'_1.
  Weight value = 0;
  int solver_calls = 0;
};

WienerEvaluation evaluate_wiener(const WienerGadget& gadget, const DistanceSolver& wiener_solver);
bool decide_negcycle_via_wiener(const CircleLayeredGraph& g, Weight R, const DistanceSolver& wiener_solver);
bool detect_kcycle_via_wiener(const CircleLayeredGraph& g, const DistanceSolver& wiener_solver);

// Minimum over rows of the row maximum; throws on a missing entry.
Weight radius_via_apsp(const DistanceMatrix& d);

}  // namespace fgr
