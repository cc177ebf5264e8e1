#pragma once

#include <string>
#include <string_view>

#include "fgr/graph.hpp"
#include "fgr/hypergraph.hpp"
#include "fgr/polynomial.hpp"
#include "fgr/witness.hpp"

namespace fgr {

// Affine relation between optima: target = scale * source + shift.
struct WeightMap {
  Weight scale = 1;
  Weight shift = 0;
  Weight to_target(Weight source) const { return checked_add(checked_mul(scale, source), shift); }
  // Exact inverse; throws if the target value is not in the image.
  Weight to_source(Weight target) const;
  friend bool operator==(const WeightMap&, const WeightMap&) = default;
};

std::string emit_digraph(const WeightedDigraph& g);
WeightedDigraph parse_digraph(std::string_view text);

std::string emit_layered(const CircleLayeredGraph& g);
CircleLayeredGraph parse_layered(std::string_view text);

std::string emit_hypergraph(const UniformHypergraph& h);
UniformHypergraph parse_hypergraph(std::string_view text);

std::string emit_dimacs(const Cnf& f);
Cnf parse_dimacs(std::string_view text);

std::string emit_csp(const CspInstance& f);
CspInstance parse_csp(std::string_view text);

std::string emit_witness(const Witness& w);
Witness parse_witness(std::string_view text);

std::string emit_weight_map(const WeightMap& m);
WeightMap parse_weight_map(std::string_view text);

// Returns the first non-comment token of the text ("digraph", "p", ...).
std::string detect_format(std::string_view text);

}  // namespace fgr
