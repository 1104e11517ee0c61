#pragma once

#include <cstdint>
#include <map>

#include "bp/cluster.hpp"
#include "bp/representation.hpp"

namespace bp {

/// Vectors decorating the ideal points: W for the point above the diagram,
/// V_j for the regions (lifts of the point below), H_i for the arcs. All
/// H_i satisfy rho(g_i) H_i = -H_i; the V's satisfy the region rule across
/// every arc.
struct Decoration {
  Vec2 W;
  std::map<int, Vec2> V;  // region id -> vector
  std::map<int, Vec2> H;  // arc id -> vector
  cx alpha{0}, beta{0}, gamma{0};  // set when built from parameters
  bool has_params = false;
};

/// Propagate H around the knot via H_out = rho(g_over)^sign H_in at each
/// under-crossing. h_seed defaults to the -1-eigenvector of rho(g_1).
/// Throws ObstructionMismatch when the closure fails, which happens exactly
/// when obstruction_class(rep) != (-1)^n.
std::map<int, Vec2> arc_colorings(const Diagram& d, const WirtingerRep& rep,
                                  const Vec2* h_seed = nullptr);

/// Propagate V across strands: V_right = rho(g_arc)^{-1} V_left with respect
/// to the downward strand picture. v_seed is assigned to region 1. Throws
/// InconsistentColoring if the redundant edges disagree.
std::map<int, Vec2> region_colorings(const Diagram& d, const WirtingerRep& rep,
                                     const Vec2& v_seed);

/// The determinant construction: Region(j) -> det(V_j, W),
/// Under(arc, j) -> det(V_j, H_arc), Over(arc) -> det(H_arc, W), per level.
std::vector<ClusterTuple> assemble_solution(const Diagram& d, const Decoration& dec);

Decoration decoration_from_params(const Diagram& d, const WirtingerRep& rep,
                                  cx alpha, cx beta, cx gamma);

/// Seeded random decoration, retried (up to 100 draws) until the assembled
/// solution and all added-edge values are non-degenerate.
Decoration generic_decoration(const Diagram& d, const WirtingerRep& rep,
                              std::uint64_t seed);

}  // namespace bp
