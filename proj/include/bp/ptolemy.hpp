#pragma once

#include <array>
#include <optional>

#include "bp/cluster.hpp"
#include "bp/decoration.hpp"

namespace bp {

/// The five ideal tetrahedra subdividing the octahedron at a crossing,
/// as vertex subsets of {0..5}. Vertices 0,1 sit on the knot (over/under
/// strand), 2,3 are lifts of the point below the diagram, 4,5 of the point
/// above.
inline constexpr std::array<std::array<int, 4>, 5> kTets = {{
    {0, 3, 4, 5},
    {1, 2, 3, 5},
    {2, 3, 4, 5},
    {0, 2, 4, 5},
    {1, 2, 3, 4},
}};

/// Orientation of each tetrahedron's sorted vertex order relative to the
/// manifold, per crossing sign. Fixed at build time; validated by the volume
/// and gluing oracles.
inline constexpr std::array<int, 5> kTetParityPos = {-1, -1, 1, 1, 1};
inline constexpr std::array<int, 5> kTetParityNeg = {1, 1, -1, -1, -1};

inline int tet_parity(int crossing_sign, int tet_index) {
  return crossing_sign > 0 ? kTetParityPos[tet_index] : kTetParityNeg[tet_index];
}

/// Octahedron data at one crossing: the 7 slot values above and below, the
/// two added-edge values, and (when built through a decoration) the six
/// developing vectors of the ideal vertices.
struct CrossingOctahedron {
  Crossing crossing;
  Window above, below;
  cx y1, y2;
  bool has_vectors = false;
  std::array<Vec2, 6> vertex;

  /// Oriented edge value c(l_{ij}) for local vertices i != j, expressed in
  /// slot values with the orientation convention fixed by the developing
  /// vectors (c(l_{ij}) = det(vertex_i, vertex_j) when vectors are present).
  cx edge_value(int i, int j) const;
};

/// c-values on all edges of the five-tetrahedron decomposition, plus global
/// edge-class bookkeeping (union-find over slot instances).
struct PtolemyAssignment {
  Diagram diagram;
  std::vector<CrossingOctahedron> octs;
  int obstruction_tag = 1;  // (-1)^n

  int num_long_classes = 0;
  std::vector<cx> long_class_value;
  double class_residual = 0.0;  // max disagreement among identified slot instances

  /// Global class of the long edge at (line 1..n+1, slot 0..3m).
  int long_class(int line, int slot) const;
  /// Global edge id of a tetrahedron edge: long classes first, then the two
  /// added edges of each crossing.
  int global_edge(int crossing_index, int i, int j) const;
  int num_edges() const { return num_long_classes + 2 * diagram.num_arcs(); }

  std::vector<int> uf_class;  // internal: [   (line-1)*(3m+1)+slot ]
};

/// Reads the crossing windows from a solution, computes the added-edge
/// values, and assembles the global edge map. Throws DegenerateInput if the
/// tuples are not a solution or a y-denominator vanishes.
PtolemyAssignment extend_assignment(const Diagram& d,
                                    const std::vector<ClusterTuple>& levels);

/// Developing vectors of the six octahedron vertices at a crossing.
std::array<Vec2, 6> octahedron_vertices(const Crossing& c, const WirtingerRep& rep,
                                        const Decoration& dec);

/// Fill in the developing vectors from a decoration (enables holonomy in the
/// global frame and shape computation).
void attach_decoration(PtolemyAssignment& a, const WirtingerRep& rep,
                       const Decoration& dec);

struct CrossingRelationReport {
  struct Row {
    int line;
    std::array<double, 5> residuals;  // relative
  };
  std::vector<Row> rows;
  double max_residual = 0.0;
  bool pass = false;
};

/// The five signed Ptolemy relations per crossing, checked on slot values.
CrossingRelationReport verify_crossing_relations(const PtolemyAssignment& a,
                                                 double tol = Tol::identity);

/// Independent route: solve the five relations sequentially for
/// (below-window, y) given the above-window. Used as the oracle against
/// apply_R.
std::pair<Window, std::pair<cx, cx>> solve_relations_for_below(int sign,
                                                               const Window& x);

/// SL(2,C) representatives of the PSL cocycle: long edges map to
/// [[0, -1/c],[c, 0]], short edges to unipotent matrices.
struct Cocycle {
  const PtolemyAssignment* assignment;
  Mat2 long_edge(int crossing_index, int i, int j) const;
  cx short_entry(int crossing_index, int tet_index, int k, int i, int j) const;
  Mat2 short_edge(int crossing_index, int tet_index, int k, int i, int j) const;
};

Cocycle cocycle_matrices(const PtolemyAssignment& a);

struct TriangleReport {
  double max_residual = 0.0;  // distance of each small-face product from +-Id
  int faces_checked = 0;
  bool pass = false;
};

/// Product of the three short-edge matrices around every vertex-truncation
/// triangle of every tetrahedron.
TriangleReport verify_triangle_faces(const PtolemyAssignment& a,
                                     double tol = Tol::identity);

/// Boundary behaviour of the lifted cocycle.
struct LiftReport {
  int eps_meridian = 0;      // diagonal of the meridian composite: expect -1
  int eps_blackboard = 0;    // diagonal of the lambda_bf composite: expect +1
  int eps_canonical = 0;     // lambda composite: expect the obstruction class
  double max_trace_error = 0.0;
  std::vector<std::pair<int, cx>> meridian_traces;  // (arc, trace) for over-arcs
  bool pass = false;
};

/// Evaluates the lift on boundary loops: every meridian composite has
/// diagonal -1 (trace -2), the blackboard longitude composite diagonal +1.
/// Requires attached decoration for the longitude composites.
LiftReport lift_cocycle(const PtolemyAssignment& a);

/// Holonomy of the meridian of an arc, expressed in the decoration's global
/// frame; equals the input rho(g_arc) when the assignment comes from that
/// representation. Throws PathNotRecorded if the arc never passes over a
/// crossing, and DegenerateInput if no decoration is attached.
Mat2 meridian_holonomy(const PtolemyAssignment& a, const Diagram& d, int arc);

/// (-1)^n: the obstruction class carried by a length-n braid.
inline int braid_obstruction(int n) { return n % 2 == 0 ? 1 : -1; }

}  // namespace bp
