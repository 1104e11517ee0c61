#pragma once

#include <cstdint>
#include <vector>

#include "bp/braid.hpp"
#include "bp/linalg.hpp"

namespace bp {

/// A boundary-parabolic representation given on Wirtinger generators, stored
/// as the SL(2,C) lift with tr = -2 on every generator.
struct WirtingerRep {
  Diagram diagram;
  std::vector<Mat2> generators;  // [arc-1]
  double residual = 0.0;         // max relation residual when produced by the solver
  std::uint64_t seed = 0;        // solver provenance

  const Mat2& gen(int arc) const { return generators[arc - 1]; }

  /// Basic well-formedness: det 1 and trace -2 on every generator, none -Id.
  void validate(double tol = Tol::identity) const;
};

/// Ordered product of generator powers.
Mat2 evaluate_word(const WirtingerRep& rep, const Word& w);

struct RelationReport {
  std::vector<double> residuals;  // per crossing, ||lhs - sign*Id|| form
  std::vector<int> signs;         // the +-1 each relation closes with
  double max_residual = 0.0;
  bool pass = false;
};

/// Residual of every Wirtinger relation word against +-Id.
RelationReport verify_relations(const WirtingerRep& rep, double tol = Tol::identity);

/// tr(rho(lambda))/2 rounded to +-1. Throws NotParabolicOnBoundary when the
/// trace is not within Tol::parabolic of +-2.
int obstruction_class(const WirtingerRep& rep);

/// Lift of -rho: every generator negated. Leaves the longitude image fixed.
WirtingerRep other_lift(const WirtingerRep& rep);

struct SolveOptions {
  std::uint64_t seed = 1;
  int attempts = 60;
  int max_newton_iters = 100;
  double residual_tol = Tol::solver;
};

/// Newton search for boundary-parabolic representations over the
/// parametrization g_i = [[-1 - a b, a^2], [-b^2, -1 + a b]], gauge-fixed by
/// g_1 = [[-1, 1], [0, -1]]. Returns distinct non-trivial solutions up to
/// conjugation (trace-invariant dedup). Throws NoSolutionFound if none.
std::vector<WirtingerRep> solve_parabolic(const Diagram& d, const SolveOptions& opt = {});

/// Conjugation-equivalence heuristic via pair and anchored-triple traces.
bool same_rep_up_to_conjugation(const WirtingerRep& a, const WirtingerRep& b,
                                double tol = 1e-8);

}  // namespace bp
