#include "fgr/reduce_distance.hpp"

#include <algorithm>
#include <sstream>

#include "fgr/errors.hpp"

namespace fgr {

namespace {

int selector_bits(int n1) {
  int t = 0;
  while ((1 << t) < n1) ++t;
  return t + 1;
}

bool bit_of(int position, int t) { return (position >> t) & 1; }

void check_layered_input(const CircleLayeredGraph& g) {
  const int k = g.k();
  if (k < 3 || k % 2 == 0) throw PreconditionError("gadgets need an odd k >= 3, got " + std::to_string(k));
  for (int i = 0; i < k; ++i)
    if (g.layer(i).empty()) throw PreconditionError("layer " + std::to_string(i) + " is empty");
}

bool has_empty_layer(const CircleLayeredGraph& g) {
  for (int i = 0; i < g.k(); ++i)
    if (g.layer(i).empty()) return true;
  return false;
}

// Shared node numbering: original nodes keep their ids, then V'_1, hubs
// u_1..u_k, u'_1, then gadget-specific extras appended with add().
struct Layout {
  const CircleLayeredGraph& g;
  int n;
  int n1;
  int k;
  std::vector<NodeRole> roles;
  std::vector<int> pos_in_v1;  // original id -> position within layer 0
  std::vector<Edge> edges;

  explicit Layout(const CircleLayeredGraph& graph)
      : g(graph), n(graph.node_count()), n1(static_cast<int>(graph.layer(0).size())), k(graph.k()) {
    pos_in_v1.assign(n, -1);
    for (int p = 0; p < n1; ++p) pos_in_v1[g.layer(0)[p]] = p;
    for (NodeId v = 0; v < n; ++v) roles.push_back({GadgetRole::LayerNode, g.layer_of(v), -1, v});
    for (int p = 0; p < n1; ++p) roles.push_back({GadgetRole::PrimeNode, 0, p, g.layer(0)[p]});
    for (int i = 0; i < k; ++i) roles.push_back({GadgetRole::Hub, i, -1, -1});
    roles.push_back({GadgetRole::PrimeHub, 0, -1, -1});
  }

  NodeId prime(int p) const { return n + p; }
  NodeId hub(int i) const { return n + n1 + i; }
  NodeId prime_hub() const { return n + n1 + k; }
  NodeId add(NodeRole r) {
    roles.push_back(r);
    return static_cast<NodeId>(roles.size()) - 1;
  }
  void join(NodeId a, NodeId b, Weight w) { edges.push_back({a, b, w}); }

  // Layer edges shifted by `shift`; edges into layer 0 land on V'_1.
  void layer_edges(Weight shift) {
    for (const Edge& e : g.graph().edges()) {
      NodeId to = g.layer_of(e.source) == k - 1 ? prime(pos_in_v1[e.target]) : e.target;
      join(e.source, to, checked_add(e.weight, shift));
    }
  }
  void hubs(Weight w, bool prime_side) {
    for (int i = 0; i < k; ++i)
      for (NodeId v : g.layer(i)) join(hub(i), v, w);
    if (prime_side)
      for (int p = 0; p < n1; ++p) join(prime_hub(), prime(p), w);
  }
  void hub_chain(Weight w) {
    for (int i = 0; i + 1 < k; ++i) join(hub(i), hub(i + 1), w);
    join(hub(k - 1), prime_hub(), w);
  }
};

Weight compute_f(int k, Weight R) { return checked_mul(checked_mul(20, k), R); }

Weight gadget_bound(int k, Weight F) { return std::max(kDefaultWeightBound, checked_mul(2 * k, F)); }

// Unweighted selector blocks: b_{t,b} on the V_1 side, b'_{t,b} on the V'_1
// side, joined by a path with k-3 internal nodes.
std::vector<NodeId> unweighted_selectors(Layout& L, std::vector<NodeId>& v1_side) {
  std::vector<NodeId> all;
  const int T = selector_bits(L.n1);
  for (int t = 0; t < T; ++t) {
    for (int beta = 0; beta < 2; ++beta) {
      NodeId b = L.add({GadgetRole::Selector, t, beta, -1});
      NodeId bp = L.add({GadgetRole::PrimeSelector, t, beta, -1});
      all.push_back(b);
      all.push_back(bp);
      v1_side.push_back(b);
      for (int p = 0; p < L.n1; ++p) {
        if (bit_of(p, t) == static_cast<bool>(beta)) L.join(b, L.g.layer(0)[p], 1);
        if (bit_of(p, t) != static_cast<bool>(beta)) L.join(bp, L.prime(p), 1);
      }
      NodeId prev = b;
      for (int s = 0; s < L.k - 3; ++s) {
        NodeId mid = L.add({GadgetRole::SelectorPath, t, beta * (L.k - 3) + s, -1});
        all.push_back(mid);
        L.join(prev, mid, 1);
        prev = mid;
      }
      L.join(prev, bp, 1);
    }
  }
  return all;
}

void unweighted_core(Layout& L) {
  L.layer_edges(0);
  for (Edge& e : L.edges) e.weight = 1;
  L.hubs(1, true);
  L.hub_chain(1);
  for (NodeId v : L.g.layer(0)) L.join(L.hub(1), v, 1);
}

}  // namespace

RadiusGadget build_radius_gadget_weighted(const CircleLayeredGraph& g, Weight R) {
  check_layered_input(g);
  if (R < 1) throw PreconditionError("R must be at least 1");
  if (g.graph().max_abs_weight() > R) throw PreconditionError("weight bound violation: some |w| > R");
  Layout L(g);
  const int k = L.k;
  const Weight F = compute_f(k, R);
  const Weight kF = checked_mul(k, F);
  const Weight kR = checked_mul(k, R);
  L.layer_edges(F);
  L.hubs(3 * F / 4, false);
  L.hub_chain(kF);
  const int T = selector_bits(L.n1);
  for (int t = 0; t < T; ++t) {
    for (int beta = 0; beta < 2; ++beta) {
      NodeId b = L.add({GadgetRole::Selector, t, beta, -1});
      L.join(L.prime_hub(), b, F / 4);
      for (int p = 0; p < L.n1; ++p) {
        if (bit_of(p, t) == static_cast<bool>(beta))
          L.join(b, g.layer(0)[p], kF / 2);
        else
          L.join(b, L.prime(p), kF / 2 - kR);
      }
    }
  }
  NodeId x = L.add({GadgetRole::X, -1, -1, -1});
  NodeId y = L.add({GadgetRole::Y, -1, -1, -1});
  for (NodeId v : g.layer(0)) {
    L.join(x, v, kF - 1);
    L.join(y, v, kF / 2);
  }
  for (NodeId v : g.layer(k - 1)) L.join(y, v, kF / 2 - F / 2);

  RadiusGadget out;
  out.graph = make_undirected(static_cast<int>(L.roles.size()), L.edges, gadget_bound(k, F));
  out.threshold = kF;
  out.weighted = true;
  out.k = k;
  out.R = R;
  out.F = F;
  out.provenance = std::move(L.roles);
  return out;
}

RadiusGadget build_radius_gadget_unweighted(const CircleLayeredGraph& g) {
  check_layered_input(g);
  Layout L(g);
  const int k = L.k;
  unweighted_core(L);
  std::vector<NodeId> v1_side;
  unweighted_selectors(L, v1_side);
  for (NodeId b : v1_side) L.join(L.hub(0), b, 1);
  NodeId x = L.add({GadgetRole::X, -1, -1, -1});
  for (NodeId v : g.layer(0)) L.join(x, v, 1);
  NodeId prev = x;
  for (int i = 0; i < k - 1; ++i) {
    NodeId p = L.add({GadgetRole::Pendant, -1, i, -1});
    L.join(prev, p, 1);
    prev = p;
  }

  RadiusGadget out;
  out.graph = make_undirected(static_cast<int>(L.roles.size()), L.edges);
  out.threshold = k;
  out.weighted = false;
  out.k = k;
  out.R = 1;
  out.F = 1;
  out.provenance = std::move(L.roles);
  return out;
}

std::optional<std::string> audit_radius_gadget(const RadiusGadget& gadget, const CircleLayeredGraph& g) {
  const int k = gadget.k;
  if (k != g.k()) return "k mismatch";
  const Weight R = gadget.R;
  const Weight F = gadget.weighted ? compute_f(k, R) : 1;
  if (F != gadget.F) return "F differs from 20kR";
  const Weight kF = k * F;
  const Weight kR = k * R;
  if (gadget.threshold != (gadget.weighted ? kF : k)) return "threshold differs from its closed form";
  const auto& roles = gadget.provenance;
  if (static_cast<int>(roles.size()) != gadget.graph.node_count()) return "provenance size mismatch";

  auto fail = [&](const Edge& e, const std::string& why) {
    std::ostringstream os;
    os << "edge " << e.source << "-" << e.target << " weight " << e.weight << ": " << why;
    return os.str();
  };
  auto position = [&](NodeId src) {
    const auto& l0 = g.layer(0);
    return static_cast<int>(std::lower_bound(l0.begin(), l0.end(), src) - l0.begin());
  };

  for (const Edge& e : gadget.graph.edges()) {
    if (e.source > e.target) continue;
    NodeRole a = roles[e.source], b = roles[e.target];
    if (static_cast<int>(a.role) > static_cast<int>(b.role)) std::swap(a, b);
    std::optional<Weight> expect;
    using GR = GadgetRole;
    if (a.role == GR::LayerNode && b.role == GR::LayerNode) {
      auto w = g.graph().weight(a.source, b.source);
      if (!w) w = g.graph().weight(b.source, a.source);
      if (w) expect = gadget.weighted ? *w + F : 1;
    } else if (a.role == GR::LayerNode && b.role == GR::PrimeNode) {
      auto w = g.graph().weight(a.source, b.source);
      if (w && a.layer == k - 1) expect = gadget.weighted ? *w + F : 1;
    } else if (a.role == GR::LayerNode && b.role == GR::Hub) {
      if (a.layer == b.layer) expect = gadget.weighted ? 3 * F / 4 : 1;
      if (!gadget.weighted && a.layer == 0 && b.layer == 1) expect = 1;
    } else if (a.role == GR::PrimeNode && b.role == GR::PrimeHub) {
      if (!gadget.weighted) expect = 1;
    } else if (a.role == GR::Hub && b.role == GR::Hub) {
      if (std::abs(a.layer - b.layer) == 1) expect = gadget.weighted ? kF : 1;
    } else if (a.role == GR::Hub && b.role == GR::PrimeHub) {
      if (a.layer == k - 1) expect = gadget.weighted ? kF : 1;
    } else if (a.role == GR::PrimeHub && b.role == GR::Selector) {
      if (gadget.weighted) expect = F / 4;
    } else if (a.role == GR::LayerNode && b.role == GR::Selector) {
      if (a.layer == 0 && bit_of(position(a.source), b.layer) == static_cast<bool>(b.index))
        expect = gadget.weighted ? kF / 2 : 1;
    } else if (a.role == GR::PrimeNode && b.role == GR::Selector) {
      if (gadget.weighted && bit_of(a.index, b.layer) != static_cast<bool>(b.index)) expect = kF / 2 - kR;
    } else if (a.role == GR::PrimeNode && b.role == GR::PrimeSelector) {
      if (!gadget.weighted && bit_of(a.index, b.layer) != static_cast<bool>(b.index)) expect = 1;
    } else if (a.role == GR::Hub && b.role == GR::Selector) {
      if (!gadget.weighted && a.layer == 0) expect = 1;
    } else if ((a.role == GR::Selector || a.role == GR::PrimeSelector || a.role == GR::SelectorPath) &&
               (b.role == GR::PrimeSelector || b.role == GR::SelectorPath)) {
      if (!gadget.weighted) expect = 1;
    } else if (a.role == GR::LayerNode && b.role == GR::X) {
      if (a.layer == 0) expect = gadget.weighted ? kF - 1 : 1;
    } else if (a.role == GR::LayerNode && b.role == GR::Y) {
      if (gadget.weighted && a.layer == 0) expect = kF / 2;
      if (gadget.weighted && a.layer == k - 1) expect = kF / 2 - F / 2;
    } else if ((a.role == GR::X || a.role == GR::Pendant) && b.role == GR::Pendant) {
      if (!gadget.weighted) expect = 1;
    }
    if (!expect) return fail(e, "no edge expected between these roles");
    if (*expect != e.weight) return fail(e, "expected " + std::to_string(*expect));
  }
  return std::nullopt;
}

bool decide_negcycle_via_radius(const CircleLayeredGraph& g, Weight R, const DistanceSolver& radius_solver) {
  if (has_empty_layer(g)) return false;
  RadiusGadget gadget = build_radius_gadget_weighted(g, R);
  return radius_solver(gadget.graph) < gadget.threshold;
}

bool detect_kcycle_via_radius(const CircleLayeredGraph& g, const DistanceSolver& radius_solver) {
  if (has_empty_layer(g)) return false;
  RadiusGadget gadget = build_radius_gadget_unweighted(g);
  return radius_solver(gadget.graph) <= gadget.threshold;
}

namespace {

void fill_wiener_sets(WienerGadget& w, const Layout& L) {
  for (int i = 1; i < L.k; ++i) {
    for (NodeId v : L.g.layer(i)) w.core.push_back(v);
    w.core.push_back(L.hub(i));
  }
  w.left = w.core;
  for (NodeId v : L.g.layer(0)) w.left.push_back(v);
  w.left.push_back(L.hub(0));
  w.right = w.core;
  for (int p = 0; p < L.n1; ++p) w.right.push_back(L.prime(p));
  w.right.push_back(L.prime_hub());
  std::sort(w.core.begin(), w.core.end());
  std::sort(w.left.begin(), w.left.end());
  std::sort(w.right.begin(), w.right.end());
  w.v1 = L.g.layer(0);
  for (int p = 0; p < L.n1; ++p) w.v1_prime.push_back(L.prime(p));
  w.u1 = L.hub(0);
  w.u1_prime = L.prime_hub();
  w.v1_size = L.n1;
  w.k = L.k;
}

}  // namespace

WienerGadget build_wiener_gadget_weighted(const CircleLayeredGraph& g, Weight R) {
  check_layered_input(g);
  if (R < 1) throw PreconditionError("R must be at least 1");
  if (g.graph().max_abs_weight() > R) throw PreconditionError("weight bound violation: some |w| > R");
  Layout L(g);
  const int k = L.k;
  const Weight F = compute_f(k, R);
  const Weight kF = checked_mul(k, F);
  const Weight kR = checked_mul(k, R);
  L.layer_edges(F);
  L.hubs(3 * F / 4, true);
  L.hub_chain(F);
  WienerGadget w;
  const int T = selector_bits(L.n1);
  for (int t = 0; t < T; ++t) {
    for (int beta = 0; beta < 2; ++beta) {
      NodeId b = L.add({GadgetRole::Selector, t, beta, -1});
      w.selectors.push_back(b);
      for (int p = 0; p < L.n1; ++p) {
        if (bit_of(p, t) == static_cast<bool>(beta))
          L.join(b, g.layer(0)[p], kF / 2);
        else
          L.join(b, L.prime(p), kF / 2 - kR);
      }
    }
  }
  for (int p = 0; p < L.n1; ++p) L.join(g.layer(0)[p], L.prime(p), kF);

  fill_wiener_sets(w, L);
  w.graph = make_undirected(static_cast<int>(L.roles.size()), L.edges, gadget_bound(k, F));
  w.weighted = true;
  w.R = R;
  w.F = F;
  const Weight n1 = L.n1;
  w.threshold = checked_add(checked_mul(kF - kR, n1 * n1), checked_mul(n1, kR));
  w.provenance = std::move(L.roles);
  return w;
}

WienerGadget build_wiener_gadget_unweighted(const CircleLayeredGraph& g) {
  check_layered_input(g);
  Layout L(g);
  unweighted_core(L);
  std::vector<NodeId> v1_side;
  WienerGadget w;
  w.selectors = unweighted_selectors(L, v1_side);
  fill_wiener_sets(w, L);
  w.graph = make_undirected(static_cast<int>(L.roles.size()), L.edges);
  w.weighted = false;
  w.R = 1;
  w.F = 1;
  const Weight n1 = L.n1;
  w.threshold = n1 * n1 * L.k + n1;
  w.provenance = std::move(L.roles);
  return w;
}

WienerEvaluation evaluate_wiener(const WienerGadget& gadget, const DistanceSolver& wiener_solver) {
  WienerEvaluation ev;
  ev.w_gprime = wiener_solver(gadget.graph);
  ev.w_left = wiener_solver(induced_subgraph(gadget.graph, gadget.left));
  ev.w_right = wiener_solver(induced_subgraph(gadget.graph, gadget.right));
  ev.w_core = wiener_solver(induced_subgraph(gadget.graph, gadget.core));
  ev.solver_calls = 4;

  auto dist = [](const Distances& d, NodeId v) {
    if (!d[v]) throw Error("wiener gadget is disconnected");
    return *d[v];
  };
  std::vector<bool> is_selector(gadget.graph.node_count(), false);
  for (NodeId s : gadget.selectors) is_selector[s] = true;
  Weight touching = 0;  // ordered pairs (s, v) with s a selector node
  Weight inside = 0;    // ordered pairs with both ends selector nodes
  for (NodeId s : gadget.selectors) {
    Distances d = single_source_distances(gadget.graph, s);
    for (NodeId v = 0; v < gadget.graph.node_count(); ++v) {
      Weight x = dist(d, v);
      touching = checked_add(touching, x);
      if (is_selector[v]) inside = checked_add(inside, x);
    }
  }
  ev.w_b = checked_sub(touching, inside / 2);

  Distances from_u1 = single_source_distances(gadget.graph, gadget.u1);
  Distances from_u1p = single_source_distances(gadget.graph, gadget.u1_prime);
  Weight wu = dist(from_u1, gadget.u1_prime);
  for (NodeId v : gadget.v1_prime) wu = checked_add(wu, dist(from_u1, v));
  for (NodeId v : gadget.v1) wu = checked_add(wu, dist(from_u1p, v));
  ev.w_u = wu;

  Weight comb = checked_add(checked_sub(checked_sub(ev.w_gprime, ev.w_left), ev.w_right), ev.w_core);
  comb = checked_sub(comb, checked_mul(2, checked_add(ev.w_b, ev.w_u)));
  if (comb % 2 != 0) throw Error("wiener combination is odd; solver is not counting ordered pairs");
  ev.value = comb / 2;
  if (ev.value > gadget.threshold) throw Error("wiener combination exceeds its no-cycle value");
  return ev;
}

bool decide_negcycle_via_wiener(const CircleLayeredGraph& g, Weight R, const DistanceSolver& wiener_solver) {
  if (has_empty_layer(g)) return false;
  WienerGadget gadget = build_wiener_gadget_weighted(g, R);
  return evaluate_wiener(gadget, wiener_solver).value < gadget.threshold;
}

bool detect_kcycle_via_wiener(const CircleLayeredGraph& g, const DistanceSolver& wiener_solver) {
  if (has_empty_layer(g)) return false;
  WienerGadget gadget = build_wiener_gadget_unweighted(g);
  return evaluate_wiener(gadget, wiener_solver).value < gadget.threshold;
}

Weight radius_via_apsp(const DistanceMatrix& d) {
  if (d.empty()) throw PreconditionError("empty distance matrix");
  Weight best = 0;
  bool first = true;
  for (const Distances& row : d) {
    Weight ecc = 0;
    for (const auto& x : row) {
      if (!x) throw PreconditionError("distance matrix has an unreachable pair");
      ecc = std::max(ecc, *x);
    }
    if (first || ecc < best) best = ecc;
    first = false;
  }
  return best;
}

}  // namespace fgr
