#include "bp/fixture.hpp"

#include <cmath>

namespace bp {
namespace fixture {

cx lambda_root() { return cx(0.5, 0.5 * std::sqrt(3.0)); }

Diagram knot41_kink_diagram() {
  Diagram d = closure_diagram(parse_braid_word("[-3,2,-3,2,-1]", 4));
  // Pin the region numbering of the reference figure (sweep order -> figure).
  d.renumber_regions({1, 2, 3, 6, 7, 5, 4});
  return d;
}

WirtingerRep knot41_kink_rep() {
  const cx l = lambda_root();
  WirtingerRep rep;
  rep.diagram = knot41_kink_diagram();
  rep.generators = {
      mat2(-1, -1, 0, -1),
      mat2(-1, -1, 0, -1),
      mat2(-1, 0, -l, -1),
      mat2(-1.0 - l, l, -l, -1.0 + l),
      mat2(-2, l, -1.0 + l, 0),
  };
  return rep;
}

std::map<int, Vec2> expected_arc_vectors() {
  const cx l = lambda_root();
  return {
      {1, Vec2(1, 0)},
      {2, Vec2(-1, 0)},
      {3, Vec2(0, -1.0 + l)},
      {4, Vec2(1.0 - l, 1.0 - l)},
      {5, Vec2(-1.0 + l, l)},
  };
}

std::map<int, Vec2> expected_region_vectors(cx a, cx b) {
  const cx l = lambda_root();
  return {
      {1, Vec2(a, b)},
      {2, Vec2(-a + b, -b)},
      {3, Vec2(a - 2.0 * b, b)},
      {4, Vec2(a * (1.0 - l) + b * (-1.0 + 2.0 * l), -a * l + b * (1.0 + 2.0 * l))},
      {5, Vec2(-a + 2.0 * b, a * l - b * (1.0 + 2.0 * l))},
      {6, Vec2(a * (-1.0 + l) + b * (2.0 - 3.0 * l), a * l - b * (1.0 + 3.0 * l))},
      {7, Vec2(a * (1.0 - l) + b * (-2.0 + 3.0 * l), -a * (1.0 + l) + 2.0 * b * (2.0 + l))},
  };
}

std::vector<std::vector<cx>> expected_levels(cx a, cx b, cx g) {
  const cx l = lambda_root();
  // entries shared by every level
  const cx e1 = a - b * g;
  const cx e2 = b;
  const cx e4 = -a + b * g + b;
  const cx e13 = a * ((g - 1.0) * l + g + 1.0) - b * (2.0 * g * (l + 2.0) - 3.0 * l + 2.0);
  const cx q7 = a - b * (g + 2.0);
  const cx h4w = (g - 1.0) * (l - 1.0);
  const cx v6h4 = (l - 1.0) * (a - 3.0 * b);
  const cx v6w = a * (-g * l + l - 1.0) + b * (3.0 * (g - 1.0) * l + g + 2.0);
  const cx v7h3 = a * l - b * (2.0 * l + 1.0);
  const cx h3w = g - g * l;
  const cx v5w = b * (2.0 * g * l + g + 2.0) - a * (g * l + 1.0);
  const cx h5w = -g * l + l - 1.0;
  const cx v4h4 = (l - 1.0) * (-(a - 2.0 * b));
  const cx v4w = (g - 1.0) * l * (a - 2.0 * b) + a - b * (g + 1.0);

  std::vector<std::vector<cx>> x(5);
  x[0] = {e1, e2, 1, e4, b, -1, q7, v6h4, h4w, v6w, v7h3, h3w, e13};
  x[1] = {e1, e2, 1, e4, b, -1, q7, l * l * (-(a - 2.0 * b)), h3w, v5w, v6h4, h5w, e13};
  x[2] = {e1, e2, 1, e4, v4h4, h4w, v4w, v7h3, -1, v5w, v6h4, h5w, e13};
  x[3] = {e1, e2, 1, e4, v4h4, h4w, v4w, -b, h5w, v6w, v7h3, h3w, e13};
  x[4] = {e1, e2, 1, e4, -b, 1, q7, v6h4, h4w, v6w, v7h3, h3w, e13};
  return x;
}

}  // namespace fixture
}  // namespace bp
