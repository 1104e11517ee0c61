#pragma once

#include "bp/ptolemy.hpp"

namespace bp {

/// Shape parameter of one ideal tetrahedron of the decomposition.
struct TetShape {
  int line;                    // crossing the tetrahedron belongs to
  int tet_index;               // 0..4, indexing kTets
  std::array<int, 4> verts;    // local vertex labels
  std::array<Vec2, 4> vectors; // decoration vectors of the vertices
  cx z;                        // cross-ratio in sorted vertex order
  int parity;                  // orientation of that order in the manifold
};

/// Cross-ratio of four decorated ideal points:
/// (det(v0,v2) det(v1,v3)) / (det(v0,v3) det(v1,v2)).
/// Throws DegenerateTetrahedron if two of the projectivized points collide.
cx tet_shape(const Vec2& v0, const Vec2& v1, const Vec2& v2, const Vec2& v3);

/// Five shapes per crossing from the developing vectors fixed by the
/// determinant construction.
std::vector<TetShape> all_shapes(const Diagram& d, const WirtingerRep& rep,
                                 const Decoration& dec);

/// Signed Bloch-Wigner sum over the decomposition.
double volume(const std::vector<TetShape>& shapes);

struct GluingReport {
  struct EdgeClass {
    int edge_id;
    int incidences;
    cx product;        // of dihedral shape parameters around the edge
    double residual;   // |product - 1|
    bool all_nonflat;
    double angle_sum;  // sum of arguments; meaningful when all_nonflat
  };
  std::vector<EdgeClass> edges;
  double max_residual = 0.0;
  bool pass = false;
};

/// Thurston gluing products around every edge class of the decomposition.
/// Needs the assignment for the global edge bookkeeping; shapes must come
/// from the same diagram.
GluingReport gluing_residual(const PtolemyAssignment& a,
                             const std::vector<TetShape>& shapes,
                             double tol = 1e-8);

/// Dihedral shape parameter of a tetrahedron at one of its edges (u, v are
/// local vertex labels of the tet; the orientation parity is applied).
cx shape_at_edge(const TetShape& t, int u, int v);

}  // namespace bp
