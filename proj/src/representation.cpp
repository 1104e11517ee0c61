#include "bp/representation.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace bp {

void WirtingerRep::validate(double tol) const {
  if (static_cast<int>(generators.size()) != diagram.num_arcs())
    throw IndexError("representation has wrong number of generators");
  for (const Mat2& g : generators) {
    double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
    if (std::abs(mat_det(g) - cx(1, 0)) > tol * scale)
      throw NotParabolicOnBoundary("generator determinant is not 1");
    if (std::abs(g.trace() + cx(2, 0)) > tol * scale)
      throw NotParabolicOnBoundary("generator trace is not -2");
    if (mat_dist(g, -Mat2::Identity()) < tol)
      throw NotParabolicOnBoundary("generator equals -Id (trivial on boundary)");
  }
}

Mat2 evaluate_word(const WirtingerRep& rep, const Word& w) {
  Mat2 out = Mat2::Identity();
  for (const auto& [gen, exp] : w) out = out * mat_pow(rep.gen(gen), exp);
  return out;
}

RelationReport verify_relations(const WirtingerRep& rep, double tol) {
  RelationReport r;
  Presentation p = wirtinger_presentation(rep.diagram);
  for (const auto& rel : p.relations) {
    Mat2 m = evaluate_word(rep, Presentation::relation_word(rel));
    double dplus = mat_dist(m, Mat2::Identity());
    double dminus = mat_dist(m, -Mat2::Identity());
    r.signs.push_back(dplus <= dminus ? 1 : -1);
    r.residuals.push_back(std::min(dplus, dminus));
  }
  r.max_residual = r.residuals.empty()
                       ? 0.0
                       : *std::max_element(r.residuals.begin(), r.residuals.end());
  r.pass = r.max_residual <= tol;
  return r;
}

int obstruction_class(const WirtingerRep& rep) {
  Word lambda = longitude_word(rep.diagram).canonical;
  cx t = evaluate_word(rep, lambda).trace();
  if (std::abs(t - cx(2, 0)) < Tol::parabolic) return 1;
  if (std::abs(t + cx(2, 0)) < Tol::parabolic) return -1;
  throw NotParabolicOnBoundary("longitude trace is not within tolerance of +-2");
}

WirtingerRep other_lift(const WirtingerRep& rep) {
  WirtingerRep out = rep;
  for (Mat2& g : out.generators) g = -g;
  return out;
}

namespace {

// Deterministic RNG: mt19937_64 outputs mapped to doubles by hand so the
// stream does not depend on library distribution internals.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  double uniform() { return (eng() >> 11) * (1.0 / 9007199254740992.0); }
  double gauss() {
    double u1 = std::max(uniform(), 1e-300), u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }
  cx cgauss() { return cx(gauss(), gauss()); }
};

Mat2 parabolic_gen(cx a, cx b) {
  return mat2(-1.0 - a * b, a * a, -b * b, -1.0 + a * b);
}

using CVec = Eigen::VectorXcd;
using CMatX = Eigen::MatrixXcd;

struct NewtonProblem {
  const Presentation pres;
  int n;  // generators; unknowns are (a_i, b_i) for i = 2..n

  std::vector<Mat2> mats(const CVec& z) const {
    std::vector<Mat2> g(n);
    g[0] = parabolic_gen(1, 0);
    for (int i = 2; i <= n; ++i) g[i - 1] = parabolic_gen(z(2 * (i - 2)), z(2 * (i - 2) + 1));
    return g;
  }

  CVec residual(const CVec& z) const {
    auto g = mats(z);
    CVec f(4 * static_cast<int>(pres.relations.size()));
    int at = 0;
    for (const auto& rel : pres.relations) {
      Mat2 over = rel.sign > 0 ? g[rel.over - 1] : mat_inv(g[rel.over - 1]);
      Mat2 r = g[rel.out - 1] * over - over * g[rel.in - 1];
      f(at++) = r(0, 0);
      f(at++) = r(0, 1);
      f(at++) = r(1, 0);
      f(at++) = r(1, 1);
    }
    return f;
  }
};

double vmax(const CVec& v) {
  double m = 0;
  for (int i = 0; i < v.size(); ++i) m = std::max(m, std::abs(v(i)));
  return m;
}

}  // namespace

bool same_rep_up_to_conjugation(const WirtingerRep& a, const WirtingerRep& b,
                                double tol) {
  int n = a.diagram.num_arcs();
  if (n != b.diagram.num_arcs()) return false;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (std::abs((a.gen(i) * a.gen(j)).trace() - (b.gen(i) * b.gen(j)).trace()) > tol)
        return false;
  for (int i = 2; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (std::abs((a.gen(1) * a.gen(i) * a.gen(j)).trace() -
                   (b.gen(1) * b.gen(i) * b.gen(j)).trace()) > tol)
        return false;
  return true;
}

std::vector<WirtingerRep> solve_parabolic(const Diagram& d, const SolveOptions& opt) {
  const int n = d.num_arcs();
  NewtonProblem prob{wirtinger_presentation(d), n};
  std::vector<WirtingerRep> found;
  if (n < 2) throw NoSolutionFound("no non-trivial parabolic representation found");

  for (int att = 0; att < opt.attempts; ++att) {
    Rng rng(opt.seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(att) + 1);
    CVec z(2 * (n - 1));
    for (int i = 0; i < z.size(); ++i) z(i) = rng.cgauss();

    bool converged = false;
    for (int it = 0; it < opt.max_newton_iters; ++it) {
      CVec f = prob.residual(z);
      if (vmax(f) < 1e-13) {
        converged = true;
        break;
      }
      CMatX jac(f.size(), z.size());
      const double h = 1e-7;
      for (int j = 0; j < z.size(); ++j) {
        CVec z2 = z;
        z2(j) += h;
        jac.col(j) = (prob.residual(z2) - f) / h;
      }
      CVec dz = jac.completeOrthogonalDecomposition().solve(-f);
      if (!dz.allFinite()) break;
      z += dz;
      if (vmax(dz) > 1e8) break;  // diverged
    }
    if (!converged) continue;

    auto mats = prob.mats(z);
    bool trivial = true;
    for (int i = 1; i < n && trivial; ++i)
      if (mat_dist(mats[i], mats[0]) > 1e-8) trivial = false;
    if (trivial) continue;
    bool degenerate = false;
    for (const Mat2& g : mats)
      if (mat_dist(g, -Mat2::Identity()) < 1e-8) degenerate = true;
    if (degenerate) continue;

    WirtingerRep rep;
    rep.diagram = d;
    rep.generators = std::move(mats);
    rep.seed = opt.seed;
    rep.residual = verify_relations(rep).max_residual;
    if (rep.residual > opt.residual_tol) continue;
    bool dup = false;
    for (const auto& other : found)
      if (same_rep_up_to_conjugation(rep, other)) dup = true;
    if (!dup) found.push_back(std::move(rep));
  }
  if (found.empty())
    throw NoSolutionFound("no non-trivial parabolic representation found after " +
                          std::to_string(opt.attempts) + " attempts");
  return found;
}

}  // namespace bp
