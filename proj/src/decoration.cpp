#include "bp/decoration.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace bp {

std::map<int, Vec2> arc_colorings(const Diagram& d, const WirtingerRep& rep,
                                  const Vec2* h_seed) {
  Vec2 h1 = h_seed ? *h_seed : parabolic_fixed_vector(rep.gen(1));
  std::vector<const Crossing*> death(d.num_arcs() + 1, nullptr);
  for (const auto& c : d.crossings) death[c.under_in] = &c;

  std::map<int, Vec2> H;
  H[1] = h1;
  int a = 1;
  for (int step = 0; step < d.num_arcs(); ++step) {
    const Crossing* c = death[a];
    Vec2 next = mat_pow(rep.gen(c->over), c->sign) * H[a];
    int b = c->under_out;
    if (b == 1) {
      double scale = std::max(1.0, h1.cwiseAbs().maxCoeff());
      double err = (next - h1).cwiseAbs().maxCoeff();
      if (err > Tol::identity * scale) {
        std::ostringstream os;
        os << "arc coloring does not close up (residual " << err << ")";
        try {
          int obs = obstruction_class(rep);
          os << ": obstruction class " << (obs > 0 ? "+1" : "-1")
             << " does not match braid parity "
             << (d.num_arcs() % 2 == 0 ? "+1" : "-1");
        } catch (const Error&) {
        }
        throw ObstructionMismatch(os.str());
      }
      return H;
    }
    H[b] = next;
    a = b;
  }
  throw ObstructionMismatch("arc traversal did not return to arc 1");
}

std::map<int, Vec2> region_colorings(const Diagram& d, const WirtingerRep& rep,
                                     const Vec2& v_seed) {
  if (v_seed.cwiseAbs().maxCoeff() < Tol::denom)
    throw DegenerateInput("region seed vector is zero");
  struct Edge {
    int left, right, arc;
  };
  std::vector<Edge> edges;
  for (int i = 1; i <= d.num_arcs(); ++i)
    for (int s = 1; s <= d.braid.width; ++s)
      edges.push_back({d.region(i, s), d.region(i, s + 1), d.arc(i, s)});

  std::map<int, Vec2> V;
  V[1] = v_seed;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& e : edges) {
      if (V.count(e.left) && !V.count(e.right)) {
        V[e.right] = mat_inv(rep.gen(e.arc)) * V[e.left];
        changed = true;
      } else if (V.count(e.right) && !V.count(e.left)) {
        V[e.left] = rep.gen(e.arc) * V[e.right];
        changed = true;
      }
    }
  }
  if (static_cast<int>(V.size()) != d.num_regions())
    throw InconsistentColoring("region adjacency graph is not connected");
  double scale = 1.0;
  for (const auto& [j, v] : V) scale = std::max(scale, v.cwiseAbs().maxCoeff());
  for (const auto& e : edges) {
    Vec2 w = mat_inv(rep.gen(e.arc)) * V[e.left];
    if ((w - V[e.right]).cwiseAbs().maxCoeff() > 1e-8 * scale)
      throw InconsistentColoring("region coloring disagrees across arc " +
                                 std::to_string(e.arc));
  }
  return V;
}

std::vector<ClusterTuple> assemble_solution(const Diagram& d, const Decoration& dec) {
  std::vector<ClusterTuple> levels;
  levels.reserve(d.num_arcs() + 1);
  for (int i = 1; i <= d.num_arcs() + 1; ++i) {
    ClusterTuple t;
    t.width = d.braid.width;
    t.entries.reserve(d.num_slots());
    for (const Slot& s : d.level_slots(i)) {
      switch (s.kind) {
        case Slot::Region:
          t.entries.push_back(det2(dec.V.at(s.region), dec.W));
          break;
        case Slot::Under:
          t.entries.push_back(det2(dec.V.at(s.region), dec.H.at(s.arc)));
          break;
        case Slot::Over:
          t.entries.push_back(det2(dec.H.at(s.arc), dec.W));
          break;
      }
    }
    levels.push_back(std::move(t));
  }
  return levels;
}

Decoration decoration_from_params(const Diagram& d, const WirtingerRep& rep,
                                  cx alpha, cx beta, cx gamma) {
  Decoration dec;
  dec.H = arc_colorings(d, rep);
  dec.V = region_colorings(d, rep, Vec2(alpha, beta));
  dec.W = Vec2(gamma, 1);
  dec.alpha = alpha;
  dec.beta = beta;
  dec.gamma = gamma;
  dec.has_params = true;
  return dec;
}

namespace {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  double uniform() { return (eng() >> 11) * (1.0 / 9007199254740992.0); }
  // unit square offset away from the origin
  cx box() { return cx(0.5 + uniform(), 0.5 + uniform()); }
};

}  // namespace

Decoration generic_decoration(const Diagram& d, const WirtingerRep& rep,
                              std::uint64_t seed) {
  Rng rng(seed * 0x9e3779b97f4a7c15ULL + 0x51ed2701);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Decoration dec = decoration_from_params(d, rep, rng.box(), rng.box(), rng.box());
    cx hscale = rng.box();
    for (auto& [i, h] : dec.H) h *= hscale;
    auto levels = assemble_solution(d, dec);
    if (!check_nondegenerate(levels).pass()) continue;
    // added-edge values must be nonzero as well
    bool ok = true;
    for (const auto& c : d.crossings) {
      Window w;
      std::copy_n(levels[c.line - 1].entries.begin() + (3 * c.k - 3), 7, w.begin());
      try {
        auto [y1, y2] = y_values(c.sign, w);
        double scale = 1.0;
        for (const cx& v : w) scale = std::max(scale, std::abs(v));
        if (std::abs(y1) <= Tol::denom * scale || std::abs(y2) <= Tol::denom * scale)
          ok = false;
      } catch (const DegenerateInput&) {
        ok = false;
      }
      if (!ok) break;
    }
    if (ok) return dec;
  }
  throw GenericityExhausted("no non-degenerate decoration found in 100 draws");
}

}  // namespace bp
