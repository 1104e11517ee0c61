#include "bp/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace bp {

cx tet_shape(const Vec2& v0, const Vec2& v1, const Vec2& v2, const Vec2& v3) {
  const Vec2* v[4] = {&v0, &v1, &v2, &v3};
  double scale = 1.0;
  for (const Vec2* p : v) scale = std::max(scale, p->cwiseAbs().maxCoeff());
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (std::abs(det2(*v[i], *v[j])) <= Tol::denom * scale * scale)
        throw DegenerateTetrahedron("two ideal vertices coincide");
  return (det2(v0, v2) * det2(v1, v3)) / (det2(v0, v3) * det2(v1, v2));
}

std::vector<TetShape> all_shapes(const Diagram& d, const WirtingerRep& rep,
                                 const Decoration& dec) {
  std::vector<TetShape> shapes;
  shapes.reserve(5 * d.num_arcs());
  for (const auto& c : d.crossings) {
    std::array<Vec2, 6> vx = octahedron_vertices(c, rep, dec);
    for (int ti = 0; ti < 5; ++ti) {
      TetShape t;
      t.line = c.line;
      t.tet_index = ti;
      t.verts = kTets[ti];
      for (int i = 0; i < 4; ++i) t.vectors[i] = vx[t.verts[i]];
      try {
        t.z = tet_shape(t.vectors[0], t.vectors[1], t.vectors[2], t.vectors[3]);
      } catch (const DegenerateTetrahedron& e) {
        throw DegenerateTetrahedron(std::string(e.what()) + " (crossing " +
                                    std::to_string(c.line) + ", tetrahedron " +
                                    std::to_string(ti) + ")");
      }
      t.parity = tet_parity(c.sign, ti);
      shapes.push_back(std::move(t));
    }
  }
  return shapes;
}

double volume(const std::vector<TetShape>& shapes) {
  double v = 0;
  for (const auto& t : shapes) v += t.parity * bloch_wigner(t.z);
  return v;
}

namespace {

int perm_parity(std::array<int, 4> p) {
  int s = 1;
  for (int i = 0; i < 4; ++i)
    while (p[i] != i) {
      std::swap(p[i], p[p[i]]);
      s = -s;
    }
  return s;
}

cx cross_ratio(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  return (det2(a, c) * det2(b, d)) / (det2(a, d) * det2(b, c));
}

}  // namespace

cx shape_at_edge(const TetShape& t, int u, int v) {
  int iu = -1, iv = -1;
  for (int i = 0; i < 4; ++i) {
    if (t.verts[i] == u) iu = i;
    if (t.verts[i] == v) iv = i;
  }
  if (iu < 0 || iv < 0 || iu == iv)
    throw IndexError("shape_at_edge: vertices not in tetrahedron");
  std::array<int, 2> rest{};
  int at = 0;
  for (int i = 0; i < 4; ++i)
    if (i != iu && i != iv) rest[at++] = i;
  std::array<int, 4> perm = {iu, iv, rest[0], rest[1]};
  if (perm_parity(perm) < 0) std::swap(rest[0], rest[1]);
  cx z = cross_ratio(t.vectors[iu], t.vectors[iv], t.vectors[rest[0]], t.vectors[rest[1]]);
  return t.parity > 0 ? z : 1.0 / z;
}

GluingReport gluing_residual(const PtolemyAssignment& a,
                             const std::vector<TetShape>& shapes, double tol) {
  GluingReport rep;
  struct Acc {
    cx product{1, 0};
    int count = 0;
    bool all_nonflat = true;
    double angle = 0;
  };
  std::vector<Acc> acc(a.num_edges());
  // shapes are in crossing-major, tet-minor order
  for (std::size_t idx = 0; idx < shapes.size(); ++idx) {
    const TetShape& t = shapes[idx];
    int ci = static_cast<int>(idx / 5);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        int u = t.verts[i], v = t.verts[j];
        int gid = a.global_edge(ci, u, v);
        cx z = shape_at_edge(t, u, v);
        Acc& e = acc[gid];
        e.product *= z;
        e.count += 1;
        if (std::abs(z.imag()) <= 1e-9 * (1.0 + std::abs(z))) e.all_nonflat = false;
        e.angle += std::arg(z);
      }
  }
  for (int gid = 0; gid < a.num_edges(); ++gid) {
    if (acc[gid].count == 0) continue;
    GluingReport::EdgeClass e;
    e.edge_id = gid;
    e.incidences = acc[gid].count;
    e.product = acc[gid].product;
    e.residual = std::abs(acc[gid].product - cx(1, 0));
    e.all_nonflat = acc[gid].all_nonflat;
    e.angle_sum = acc[gid].angle;
    rep.max_residual = std::max(rep.max_residual, e.residual);
    rep.edges.push_back(e);
  }
  rep.pass = rep.max_residual <= tol;
  return rep;
}

}  // namespace bp
