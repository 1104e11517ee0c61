#pragma once

#include <array>
#include <string>
#include <vector>

#include "bp/braid.hpp"
#include "bp/linalg.hpp"

namespace bp {

/// One level of cluster variables: 3m+1 complex entries whose slot semantics
/// follow Diagram::level_slots (Region, Under, Over alternation).
struct ClusterTuple {
  int width = 0;
  std::vector<cx> entries;

  int size() const { return static_cast<int>(entries.size()); }
  static ClusterTuple ones(int width) {
    return {width, std::vector<cx>(3 * width + 1, cx(1, 0))};
  }
};

using Window = std::array<cx, 7>;

/// The crossing operator on a 7-entry window. sign=+1 applies R, sign=-1
/// applies R^{-1}. Throws DegenerateInput when a forbidden denominator
/// vanishes (relative tolerance Tol::denom).
Window apply_R(int sign, const Window& x);

/// R^{sign}_k on a full level tuple: entries outside slots 3k-2..3k+4 are
/// untouched.
ClusterTuple apply_R_k(int k, int sign, const ClusterTuple& x);

/// All n+1 levels x^1..x^{n+1} with x^{i+1} = R^{eps_i}_{k_i}(x^i).
std::vector<ClusterTuple> evolve(const BraidWord& b, const ClusterTuple& x1);

/// x^1 = x^{n+1} within tol scaled by the largest entry magnitude.
bool is_solution(const std::vector<ClusterTuple>& levels, double tol = Tol::identity);

/// The two added-edge values at a crossing window.
std::pair<cx, cx> y_values(int sign, const Window& x);

struct NondegeneracyReport {
  struct Violation {
    int level;        // 1-based
    int slot;         // 1-based; for kind=="pair" the lower slot 3j-2
    std::string kind; // "zero" or "pair"
  };
  std::vector<Violation> violations;
  bool pass() const { return violations.empty(); }
};

/// Per-level check: every entry nonzero and x_{3j-2} != -x_{3j+1} for
/// 1 <= j <= m, with tolerance scaled by the level magnitude.
NondegeneracyReport check_nondegenerate(const std::vector<ClusterTuple>& levels,
                                        double tol = Tol::denom);

}  // namespace bp
