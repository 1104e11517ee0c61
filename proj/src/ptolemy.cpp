#include "bp/ptolemy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bp {

namespace {

// Slot references for the oriented edge values of the octahedron at a
// crossing. Values are read off the window above (X1..X7), the window below
// (T2..T6) and the two added edges (Y1, Y2).
enum SlotRef { X1, X2, X3, X4, X5, X6, X7, T2, T3, T4, T5, T6, Y1, Y2 };

struct OrientedSlot {
  int sign;
  SlotRef ref;
};

// c(l_{ij}) for i<j in terms of slot values; the orientation convention is
// the one induced by the developing vectors (det of endpoint vectors).
struct EdgeTable {
  OrientedSlot e[6][6];
  constexpr void set(int i, int j, int sign, SlotRef ref) {
    e[i][j] = {sign, ref};
  }
};

constexpr EdgeTable make_table_pos() {
  EdgeTable t{};
  t.set(0, 2, -1, T5);
  t.set(0, 3, -1, X2);
  t.set(0, 4, -1, X3);
  t.set(0, 5, +1, X3);
  t.set(1, 2, -1, X5);
  t.set(1, 3, +1, X5);
  t.set(1, 4, +1, T3);
  t.set(1, 5, +1, X6);
  t.set(2, 3, +1, Y2);
  t.set(2, 4, +1, T4);
  t.set(2, 5, +1, X7);
  t.set(3, 4, +1, X1);
  t.set(3, 5, +1, X4);
  t.set(4, 5, +1, Y1);
  return t;
}

constexpr EdgeTable make_table_neg() {
  EdgeTable t{};
  t.set(0, 2, -1, X5);
  t.set(0, 3, -1, T2);
  t.set(0, 4, -1, X6);
  t.set(0, 5, +1, X6);
  t.set(1, 2, -1, X2);
  t.set(1, 3, +1, X2);
  t.set(1, 4, +1, X3);
  t.set(1, 5, +1, T6);
  t.set(2, 3, +1, Y2);
  t.set(2, 4, +1, X4);
  t.set(2, 5, +1, X7);
  t.set(3, 4, +1, X1);
  t.set(3, 5, +1, T4);
  t.set(4, 5, +1, Y1);
  return t;
}

constexpr EdgeTable kTablePos = make_table_pos();
constexpr EdgeTable kTableNeg = make_table_neg();

cx slot_value(const CrossingOctahedron& o, SlotRef ref) {
  switch (ref) {
    case X1: return o.above[0];
    case X2: return o.above[1];
    case X3: return o.above[2];
    case X4: return o.above[3];
    case X5: return o.above[4];
    case X6: return o.above[5];
    case X7: return o.above[6];
    case T2: return o.below[1];
    case T3: return o.below[2];
    case T4: return o.below[3];
    case T5: return o.below[4];
    case T6: return o.below[5];
    case Y1: return o.y1;
    case Y2: return o.y2;
  }
  return 0;
}

// (line, 0-based slot) instance of each long-edge slot reference.
std::pair<int, int> slot_instance(const Crossing& c, SlotRef ref) {
  int base = 3 * c.k - 3;
  switch (ref) {
    case X1: return {c.line, base + 0};
    case X2: return {c.line, base + 1};
    case X3: return {c.line, base + 2};
    case X4: return {c.line, base + 3};
    case X5: return {c.line, base + 4};
    case X6: return {c.line, base + 5};
    case X7: return {c.line, base + 6};
    case T2: return {c.line + 1, base + 1};
    case T3: return {c.line + 1, base + 2};
    case T4: return {c.line + 1, base + 3};
    case T5: return {c.line + 1, base + 4};
    case T6: return {c.line + 1, base + 5};
    default: throw IndexError("added edges have no slot instance");
  }
}

struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

double window_mag(const Window& w) {
  double s = 1.0;
  for (const cx& v : w) s = std::max(s, std::abs(v));
  return s;
}

}  // namespace

cx CrossingOctahedron::edge_value(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i > 5 || j > 5)
    throw IndexError("octahedron edge indices out of range");
  if (i > j) return -edge_value(j, i);
  if (i == 0 && j == 1)
    throw IndexError("the two knot vertices are not joined by an edge");
  const EdgeTable& t = crossing.sign > 0 ? kTablePos : kTableNeg;
  const OrientedSlot& s = t.e[i][j];
  return double(s.sign) * slot_value(*this, s.ref);
}

int PtolemyAssignment::long_class(int line, int slot) const {
  int n = diagram.num_arcs(), m = diagram.braid.width;
  if (line == n + 1) line = 1;
  return uf_class[(line - 1) * (3 * m + 1) + slot];
}

int PtolemyAssignment::global_edge(int crossing_index, int i, int j) const {
  if (i > j) std::swap(i, j);
  const CrossingOctahedron& o = octs[crossing_index];
  const EdgeTable& t = o.crossing.sign > 0 ? kTablePos : kTableNeg;
  SlotRef ref = t.e[i][j].ref;
  if (ref == Y1) return num_long_classes + 2 * crossing_index;
  if (ref == Y2) return num_long_classes + 2 * crossing_index + 1;
  auto [line, slot] = slot_instance(o.crossing, ref);
  return long_class(line, slot);
}

PtolemyAssignment extend_assignment(const Diagram& d,
                                    const std::vector<ClusterTuple>& levels) {
  const int n = d.num_arcs(), m = d.braid.width;
  if (static_cast<int>(levels.size()) != n + 1)
    throw DegenerateInput("extend_assignment: expected n+1 levels");
  if (!is_solution(levels))
    throw DegenerateInput("extend_assignment: tuples are not a solution");

  for (const auto& lv : levels)
    if (lv.size() != 3 * m + 1)
      throw DegenerateInput("extend_assignment: level tuple has wrong length");

  PtolemyAssignment a;
  a.diagram = d;
  a.obstruction_tag = braid_obstruction(n);
  for (const auto& c : d.crossings) {
    CrossingOctahedron o;
    o.crossing = c;
    std::copy_n(levels[c.line - 1].entries.begin() + (3 * c.k - 3), 7, o.above.begin());
    std::copy_n(levels[c.line].entries.begin() + (3 * c.k - 3), 7, o.below.begin());
    std::tie(o.y1, o.y2) = y_values(c.sign, o.above);
    double scale = std::max(window_mag(o.above), window_mag(o.below));
    if (std::abs(o.y1) <= Tol::denom * scale || std::abs(o.y2) <= Tol::denom * scale)
      throw DegenerateInput("extend_assignment: added-edge value vanishes at crossing " +
                            std::to_string(c.line));
    a.octs.push_back(std::move(o));
  }

  // Long-edge classes: vertical continuation away from the crossing window,
  // pass-through identifications across it, closure line n+1 == line 1.
  const int slots = 3 * m + 1;
  UF uf((n + 1) * slots);
  auto id = [slots](int line, int slot) { return (line - 1) * slots + slot; };
  for (const auto& c : d.crossings) {
    int i = c.line, base = 3 * c.k - 3;
    for (int s = 0; s < slots; ++s)
      if (s < base || s > base + 6) uf.unite(id(i, s), id(i + 1, s));
    uf.unite(id(i + 1, base + 0), id(i, base + 0));
    uf.unite(id(i + 1, base + 6), id(i, base + 6));
    if (c.sign > 0) {
      uf.unite(id(i + 1, base + 1), id(i, base + 4));  // below-under = x5
      uf.unite(id(i + 1, base + 5), id(i, base + 2));  // below-over = x3
    } else {
      uf.unite(id(i + 1, base + 2), id(i, base + 5));  // below-over = x6
      uf.unite(id(i + 1, base + 4), id(i, base + 1));  // below-under = x2
    }
  }
  for (int s = 0; s < slots; ++s) uf.unite(id(n + 1, s), id(1, s));

  a.uf_class.assign((n + 1) * slots, -1);
  std::vector<int> root_to_class;
  std::vector<cx> values;
  std::vector<double> scales;
  double residual = 0;
  for (int line = 1; line <= n + 1; ++line) {
    for (int s = 0; s < slots; ++s) {
      int r = uf.find(id(line, s));
      int cls = -1;
      for (std::size_t t = 0; t < root_to_class.size(); ++t)
        if (root_to_class[t] == r) cls = static_cast<int>(t);
      if (cls < 0) {
        cls = static_cast<int>(root_to_class.size());
        root_to_class.push_back(r);
        values.push_back(levels[line - 1].entries[s]);
        scales.push_back(1.0);
      }
      a.uf_class[id(line, s)] = cls;
      cx v = levels[line - 1].entries[s];
      scales[cls] = std::max({scales[cls], std::abs(v), std::abs(values[cls])});
      residual = std::max(residual, std::abs(v - values[cls]) / scales[cls]);
    }
  }
  a.num_long_classes = static_cast<int>(root_to_class.size());
  a.long_class_value = std::move(values);
  a.class_residual = residual;
  if (residual > Tol::identity)
    throw DegenerateInput("extend_assignment: identified edges disagree (residual " +
                          std::to_string(residual) + ")");
  return a;
}

std::array<Vec2, 6> octahedron_vertices(const Crossing& c, const WirtingerRep& rep,
                                        const Decoration& dec) {
  std::array<Vec2, 6> v;
  v[0] = dec.H.at(c.over);
  v[1] = c.sign > 0 ? dec.H.at(c.under_in) : dec.H.at(c.under_out);
  v[2] = dec.V.at(c.region_right);
  v[3] = c.sign > 0 ? dec.V.at(c.region_above) : dec.V.at(c.region_below);
  v[4] = mat_inv(rep.gen(c.over)) * dec.W;
  v[5] = dec.W;
  return v;
}

void attach_decoration(PtolemyAssignment& a, const WirtingerRep& rep,
                       const Decoration& dec) {
  for (auto& o : a.octs) {
    o.vertex = octahedron_vertices(o.crossing, rep, dec);
    o.has_vectors = true;
  }
}

CrossingRelationReport verify_crossing_relations(const PtolemyAssignment& a,
                                                 double tol) {
  CrossingRelationReport rep;
  for (const auto& o : a.octs) {
    const cx x1 = o.above[0], x2 = o.above[1], x3 = o.above[2], x4 = o.above[3],
             x5 = o.above[4], x6 = o.above[5], x7 = o.above[6];
    const cx t2 = o.below[1], t3 = o.below[2], t4 = o.below[3], t5 = o.below[4],
             t6 = o.below[5];
    const cx y1 = o.y1, y2 = o.y2;
    std::array<cx, 5> lhs, rhs;
    if (o.crossing.sign > 0) {
      lhs = {x2 * y1, x6 * y2, x4 * t4, t5 * y1, t3 * y2};
      rhs = {x3 * x4 + x1 * x3, x5 * x7 + x4 * x5, x1 * x7 + y1 * y2,
             x3 * t4 + x3 * x7, x5 * t4 + x1 * x5};
    } else {
      lhs = {y1 * x5, x3 * y2, x4 * t4, t2 * y1, t6 * y2};
      rhs = {x4 * x6 + x6 * x7, x1 * x2 + x2 * x4, y1 * y2 + x1 * x7,
             x6 * t4 + x1 * x6, x2 * x7 + x2 * t4};
    }
    CrossingRelationReport::Row row;
    row.line = o.crossing.line;
    for (int i = 0; i < 5; ++i) {
      double scale = std::max({1.0, std::abs(lhs[i]), std::abs(rhs[i])});
      row.residuals[i] = std::abs(lhs[i] - rhs[i]) / scale;
      rep.max_residual = std::max(rep.max_residual, row.residuals[i]);
    }
    rep.rows.push_back(row);
  }
  rep.pass = rep.max_residual <= tol;
  return rep;
}

std::pair<Window, std::pair<cx, cx>> solve_relations_for_below(int sign,
                                                               const Window& x) {
  const cx x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3], x5 = x[4], x6 = x[5], x7 = x[6];
  auto [y1, y2] = y_values(sign, x);
  double cutoff = Tol::denom * window_mag(x);
  if (std::abs(x4) <= cutoff || std::abs(y1) <= cutoff || std::abs(y2) <= cutoff)
    throw DegenerateInput("solve_relations_for_below: denominator vanishes");
  Window t;
  if (sign > 0) {
    cx t4 = (x1 * x7 + y1 * y2) / x4;
    cx t5 = (x3 * t4 + x3 * x7) / y1;
    cx t3 = (x5 * t4 + x1 * x5) / y2;
    t = {x1, x5, t3, t4, t5, x3, x7};
  } else {
    cx t4 = (y1 * y2 + x1 * x7) / x4;
    cx t2 = (x6 * t4 + x1 * x6) / y1;
    cx t6 = (x2 * x7 + x2 * t4) / y2;
    t = {x1, t2, x6, t4, x2, t6, x7};
  }
  return {t, {y1, y2}};
}

Cocycle cocycle_matrices(const PtolemyAssignment& a) { return Cocycle{&a}; }

Mat2 Cocycle::long_edge(int ci, int i, int j) const {
  cx c = assignment->octs[ci].edge_value(i, j);
  if (std::abs(c) < Tol::denom)
    throw DegenerateInput("cocycle long edge has vanishing value");
  return mat2(0, -1.0 / c, c, 0);
}

cx Cocycle::short_entry(int ci, int /*tet_index*/, int k, int i, int j) const {
  const CrossingOctahedron& o = assignment->octs[ci];
  return -o.edge_value(j, i) / (o.edge_value(i, k) * o.edge_value(k, j));
}

Mat2 Cocycle::short_edge(int ci, int ti, int k, int i, int j) const {
  return mat2(1, short_entry(ci, ti, k, i, j), 0, 1);
}

TriangleReport verify_triangle_faces(const PtolemyAssignment& a, double tol) {
  TriangleReport rep;
  Cocycle phi = cocycle_matrices(a);
  for (std::size_t ci = 0; ci < a.octs.size(); ++ci) {
    for (int ti = 0; ti < 5; ++ti) {
      const auto& tet = kTets[ti];
      for (int kk = 0; kk < 4; ++kk) {
        int k = tet[kk];
        std::array<int, 3> other{};
        int at = 0;
        for (int t = 0; t < 4; ++t)
          if (t != kk) other[at++] = tet[t];
        // cyclic boundary of the truncation triangle at k
        Mat2 prod = phi.short_edge(static_cast<int>(ci), ti, k, other[0], other[1]) *
                    phi.short_edge(static_cast<int>(ci), ti, k, other[1], other[2]) *
                    phi.short_edge(static_cast<int>(ci), ti, k, other[2], other[0]);
        double scale = std::max(1.0, prod.cwiseAbs().maxCoeff());
        double res = std::min(mat_dist(prod, Mat2::Identity()),
                              mat_dist(prod, -Mat2::Identity())) /
                     scale;
        rep.max_residual = std::max(rep.max_residual, res);
        ++rep.faces_checked;
      }
    }
  }
  rep.pass = rep.max_residual <= tol;
  return rep;
}

namespace {

// The meridian loop around the over-strand of crossing `ci`, closed through
// the pinch identification of the two over-edge slots: down one copy of the
// over-edge, across the knot-vertex diagonal, up the other copy. The
// composite is parabolic with eigenvalue -1.
Mat2 meridian_composite(const Cocycle& phi, int ci) {
  Mat2 l05 = phi.long_edge(ci, 0, 5);
  Mat2 l04 = phi.long_edge(ci, 0, 4);
  Mat2 s045 = phi.short_edge(ci, 0, 0, 4, 5);
  return mat_inv(l05) * mat_inv(s045) * l04;
}

// Frame [vec_v | vec_w / det(vec_v, vec_w)] at the corner of the edge (v,w)
// near v; conjugating a based loop composite by it lands in the global frame
// of the decoration.
Mat2 corner_frame(const CrossingOctahedron& o, int v, int w) {
  cx c = det2(o.vertex[v], o.vertex[w]);
  if (std::abs(c) < Tol::denom) throw DegenerateInput("degenerate corner frame");
  Mat2 b;
  b << o.vertex[v](0), o.vertex[w](0) / c, o.vertex[v](1), o.vertex[w](1) / c;
  return b;
}

}  // namespace

Mat2 meridian_holonomy(const PtolemyAssignment& a, const Diagram& d, int arc) {
  Cocycle phi = cocycle_matrices(a);
  for (std::size_t ci = 0; ci < a.octs.size(); ++ci) {
    if (a.octs[ci].crossing.over != arc) continue;
    if (!a.octs[ci].has_vectors)
      throw DegenerateInput("meridian_holonomy requires an attached decoration");
    Mat2 p = meridian_composite(phi, static_cast<int>(ci));
    Mat2 b = corner_frame(a.octs[ci], 5, 0);
    // loop orientation gives the inverse meridian
    return mat_inv(b * p * mat_inv(b));
  }
  (void)d;
  throw PathNotRecorded("arc " + std::to_string(arc) +
                        " never passes over a crossing; no meridian path recorded");
}

LiftReport lift_cocycle(const PtolemyAssignment& a) {
  LiftReport rep;
  Cocycle phi = cocycle_matrices(a);
  double terr = 0;
  // meridian composites are slot-intrinsic
  std::vector<int> seen(a.diagram.num_arcs() + 1, 0);
  for (std::size_t ci = 0; ci < a.octs.size(); ++ci) {
    int arc = a.octs[ci].crossing.over;
    if (seen[arc]++) continue;
    cx t = meridian_composite(phi, static_cast<int>(ci)).trace();
    rep.meridian_traces.push_back({arc, t});
    terr = std::max(terr, std::abs(t + cx(2, 0)));
  }
  rep.eps_meridian = -1;
  if (terr > Tol::identity) rep.eps_meridian = 0;  // not parabolic with eigenvalue -1

  // longitude composites need the global frame and a meridian for every arc
  bool have_vectors = !a.octs.empty() && a.octs.front().has_vectors;
  bool longitudes_checked = false;
  if (have_vectors) {
    bool all_over = true;
    std::vector<Mat2> mer(a.diagram.num_arcs() + 1, Mat2::Identity());
    for (int arc = 1; arc <= a.diagram.num_arcs(); ++arc) {
      try {
        mer[arc] = meridian_holonomy(a, a.diagram, arc);
      } catch (const PathNotRecorded&) {
        all_over = false;
      }
    }
    if (all_over) {
      LongitudeWords lw = longitude_word(a.diagram);
      Mat2 bb = Mat2::Identity(), can = Mat2::Identity();
      for (const auto& [g, e] : lw.blackboard) bb = bb * mat_pow(mer[g], e);
      for (const auto& [g, e] : lw.canonical) can = can * mat_pow(mer[g], e);
      auto diag_of = [&terr](const Mat2& m) {
        cx t = m.trace();
        if (std::abs(t - cx(2, 0)) < Tol::parabolic) return 1;
        if (std::abs(t + cx(2, 0)) < Tol::parabolic) return -1;
        terr = std::max(terr, 1.0);
        return 0;
      };
      rep.eps_blackboard = diag_of(bb);
      rep.eps_canonical = diag_of(can);
      longitudes_checked = true;
    }
  }
  rep.max_trace_error = terr;
  rep.pass = rep.eps_meridian == -1 &&
             (!longitudes_checked || (rep.eps_blackboard == 1 &&
                                      rep.eps_canonical == a.obstruction_tag));
  return rep;
}

}  // namespace bp
