#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bp/errors.hpp"

namespace bp {

/// A braid word: letters are signed generator indices, letter i means
/// sigma_{|i|}^{sign(i)} on `width` strands.
struct BraidWord {
  int width = 0;
  std::vector<int> letters;

  int length() const { return static_cast<int>(letters.size()); }
  int writhe() const {
    int w = 0;
    for (int l : letters) w += l > 0 ? 1 : -1;
    return w;
  }
  std::string text() const;
};

/// Parse either a bracketed signed-integer list "[1,-2,1,-2]" or
/// whitespace-separated tokens "s1 s2^-1". Width defaults to max|k|+1.
/// Rejects closures that are links rather than knots unless `require_knot`
/// is cleared (the cluster dynamics is defined for any word).
BraidWord parse_braid_word(const std::string& text, int width = 0,
                           bool require_knot = true);

struct Crossing {
  int line;   // the crossing sits between horizontal lines `line` and `line+1`
  int k;      // strand slot (1..m-1)
  int sign;   // +1 or -1
  int over;   // arc passing over
  int under_in;
  int under_out;
  int region_left, region_above, region_below, region_right;
};

/// Slot layout of one horizontal line: Region, Under, Over, Region, ...
struct Slot {
  enum Kind { Region, Under, Over } kind;
  int arc = 0;     // for Under/Over
  int region = 0;  // for Region (the region itself) and Under (strand-left region)
};

/// Combinatorics of the braid closure: arcs, planar regions, per-line slot
/// layout and per-crossing incidence. Lines are 1..n+1 with line n+1
/// identified with line 1; arcs are numbered in traversal order from the
/// top-left strand; regions by a first-encounter sweep (outer-left = 1).
struct Diagram {
  BraidWord braid;
  int writhe = 0;
  std::vector<Crossing> crossings;
  std::vector<std::vector<int>> arc_at;     // [line-1][pos-1], lines 1..n+1
  std::vector<std::vector<int>> region_at;  // [line-1][gap-1], gaps 1..m+1

  int num_arcs() const { return braid.length(); }
  int num_regions() const { return braid.length() + 2; }
  int num_slots() const { return 3 * braid.width + 1; }

  int arc(int line, int pos) const { return arc_at[line - 1][pos - 1]; }
  int region(int line, int gap) const { return region_at[line - 1][gap - 1]; }

  std::vector<Slot> level_slots(int line) const;

  /// Renumber regions; `perm[old-1] = new`. Used by fixtures that pin an
  /// externally given numbering.
  void renumber_regions(const std::vector<int>& perm);
};

Diagram closure_diagram(const BraidWord& b);

/// Wirtinger presentation: one generator per arc, one conjugation relation
/// per crossing: g_out = g_over^sign g_in g_over^{-sign}.
struct Presentation {
  struct Relation {
    int out, over, sign, in;
  };
  int num_generators = 0;
  std::vector<Relation> relations;

  /// The relation as a length-4 word evaluating to the identity:
  /// over^sign in over^{-sign} out^{-1}.
  static std::vector<std::pair<int, int>> relation_word(const Relation& r) {
    return {{r.over, r.sign}, {r.in, 1}, {r.over, -r.sign}, {r.out, -1}};
  }
};

Presentation wirtinger_presentation(const Diagram& d);

/// A word in the Wirtinger generators: ordered (generator, exponent) pairs.
using Word = std::vector<std::pair<int, int>>;

struct LongitudeWords {
  Word blackboard;  // product of over-arc generators along one traversal
  Word canonical;   // blackboard * g_1^{-writhe}
};

LongitudeWords longitude_word(const Diagram& d);

}  // namespace bp
