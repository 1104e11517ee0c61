#pragma once

#include "bp/decoration.hpp"

namespace bp {
namespace fixture {

/// The stored figure-eight-with-kink fixture: braid [-3,2,-3,2,-1] on four
/// strands (length 5, writhe -1), with the arc/region numbering pinned to
/// the reference tables via an explicit region renumbering.
Diagram knot41_kink_diagram();

/// lambda = (1 + i sqrt 3)/2, a root of x^2 - x + 1.
cx lambda_root();

/// The geometric representation's SL(2,C) lift on the five arc generators,
/// with tr = -2 throughout.
WirtingerRep knot41_kink_rep();

/// H-vectors for seed H_1 = (1,0), as closed forms in lambda.
std::map<int, Vec2> expected_arc_vectors();

/// V-vectors for seed V_1 = (alpha, beta).
std::map<int, Vec2> expected_region_vectors(cx alpha, cx beta);

/// The five reference level tuples (13 entries each) as closed forms in
/// (alpha, beta, gamma); level 6 equals level 1.
std::vector<std::vector<cx>> expected_levels(cx alpha, cx beta, cx gamma);

/// Reference volume of the figure-eight complement.
inline constexpr double knot41_volume = 2.029883212819307;

}  // namespace fixture
}  // namespace bp
