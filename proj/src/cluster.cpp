#include "bp/cluster.hpp"

#include <algorithm>
#include <cmath>

namespace bp {

namespace {

double window_scale(const Window& x) {
  double s = 0;
  for (const cx& v : x) s = std::max(s, std::abs(v));
  return std::max(1.0, s);
}

void require_nonzero(const Window& x, std::initializer_list<int> idx, int sign) {
  double cutoff = Tol::denom * window_scale(x);
  for (int i : idx) {
    if (std::abs(x[i - 1]) <= cutoff)
      throw DegenerateInput("apply_R(" + std::string(sign > 0 ? "+1" : "-1") +
                            "): window entry x" + std::to_string(i) + " vanishes");
  }
}

Window require_finite(Window w) {
  for (const cx& v : w)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw DegenerateInput("apply_R overflowed to a non-finite value");
  return w;
}

}  // namespace

Window apply_R(int sign, const Window& x) {
  const cx x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3], x5 = x[4], x6 = x[5], x7 = x[6];
  if (sign > 0) {
    require_nonzero(x, {2, 4, 6}, sign);
    return require_finite({x1,
            x5,
            (x1 * x3 * x5 + x3 * x4 * x5 + x1 * x2 * x6) / (x2 * x4),
            (x1 * x3 * x4 * x5 + x3 * x4 * x4 * x5 + x1 * x3 * x5 * x7 +
             x3 * x4 * x5 * x7 + x1 * x2 * x6 * x7) /
                (x2 * x4 * x6),
            (x3 * x4 * x5 + x3 * x5 * x7 + x2 * x6 * x7) / (x4 * x6),
            x3,
            x7});
  }
  require_nonzero(x, {3, 4, 5}, sign);
  return require_finite({x1,
          (x1 * x3 * x5 + x1 * x2 * x6 + x2 * x4 * x6) / (x3 * x4),
          x6,
          (x1 * x2 * x4 * x6 + x2 * x4 * x4 * x6 + x1 * x3 * x5 * x7 +
           x1 * x2 * x6 * x7 + x2 * x4 * x6 * x7) /
              (x3 * x4 * x5),
          x2,
          (x3 * x5 * x7 + x2 * x4 * x6 + x2 * x6 * x7) / (x4 * x5),
          x7});
}

ClusterTuple apply_R_k(int k, int sign, const ClusterTuple& x) {
  if (k < 1 || k > x.width - 1)
    throw IndexError("apply_R_k: strand index " + std::to_string(k) + " out of range");
  if (x.size() != 3 * x.width + 1)
    throw IndexError("apply_R_k: tuple has wrong length");
  Window w;
  std::copy_n(x.entries.begin() + (3 * k - 3), 7, w.begin());
  Window nw;
  try {
    nw = apply_R(sign, w);
  } catch (const DegenerateInput& e) {
    throw DegenerateInput(std::string(e.what()) + " (window at strand " +
                          std::to_string(k) + ")");
  }
  ClusterTuple out = x;
  std::copy(nw.begin(), nw.end(), out.entries.begin() + (3 * k - 3));
  return out;
}

std::vector<ClusterTuple> evolve(const BraidWord& b, const ClusterTuple& x1) {
  if (x1.width != b.width) throw IndexError("evolve: tuple width does not match braid");
  std::vector<ClusterTuple> levels{x1};
  levels.reserve(b.length() + 1);
  for (int i = 0; i < b.length(); ++i) {
    int l = b.letters[i];
    try {
      levels.push_back(apply_R_k(std::abs(l), l > 0 ? 1 : -1, levels.back()));
    } catch (const DegenerateInput& e) {
      throw DegenerateInput(std::string(e.what()) + " at level " + std::to_string(i + 1));
    }
  }
  return levels;
}

bool is_solution(const std::vector<ClusterTuple>& levels, double tol) {
  if (levels.empty()) return false;
  const auto& a = levels.front().entries;
  const auto& b = levels.back().entries;
  if (a.size() != b.size()) return false;
  double scale = 1.0, diff = 0.0;
  for (const cx& v : a) scale = std::max(scale, std::abs(v));
  for (const cx& v : b) scale = std::max(scale, std::abs(v));
  for (std::size_t j = 0; j < a.size(); ++j) diff = std::max(diff, std::abs(a[j] - b[j]));
  return diff <= tol * scale;
}

std::pair<cx, cx> y_values(int sign, const Window& x) {
  const cx x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3], x5 = x[4], x6 = x[5], x7 = x[6];
  double cutoff = Tol::denom * window_scale(x);
  if (sign > 0) {
    if (std::abs(x2) <= cutoff || std::abs(x6) <= cutoff)
      throw DegenerateInput("y_values(+1): denominator vanishes");
    return {x3 * (x1 + x4) / x2, x5 * (x4 + x7) / x6};
  }
  if (std::abs(x5) <= cutoff || std::abs(x3) <= cutoff)
    throw DegenerateInput("y_values(-1): denominator vanishes");
  return {x6 * (x4 + x7) / x5, x2 * (x1 + x4) / x3};
}

NondegeneracyReport check_nondegenerate(const std::vector<ClusterTuple>& levels,
                                        double tol) {
  NondegeneracyReport rep;
  for (std::size_t li = 0; li < levels.size(); ++li) {
    const auto& xs = levels[li].entries;
    double scale = 1.0;
    for (const cx& v : xs) scale = std::max(scale, std::abs(v));
    double cutoff = tol * scale;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (std::abs(xs[j]) <= cutoff)
        rep.violations.push_back({static_cast<int>(li + 1), static_cast<int>(j + 1), "zero"});
    }
    for (int j = 1; j <= levels[li].width; ++j) {
      if (std::abs(xs[3 * j - 3] + xs[3 * j]) <= cutoff)
        rep.violations.push_back({static_cast<int>(li + 1), 3 * j - 2, "pair"});
    }
  }
  return rep;
}

}  // namespace bp
