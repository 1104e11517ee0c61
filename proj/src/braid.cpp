#include "bp/braid.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace bp {

std::string BraidWord::text() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) os << ',';
    os << letters[i];
  }
  os << ']';
  return os.str();
}

namespace {

std::vector<int> parse_letters(const std::string& text) {
  std::vector<int> letters;
  std::string t = text;
  // bracketed list form
  if (t.find('[') != std::string::npos) {
    for (char& c : t)
      if (c == '[' || c == ']' || c == ',') c = ' ';
    std::istringstream is(t);
    std::string tok;
    while (is >> tok) {
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        letters.push_back(v);
      } catch (const std::exception&) {
        throw SyntaxError("bad braid letter '" + tok + "'");
      }
    }
    return letters;
  }
  // token form: sK or sK^-1
  std::istringstream is(t);
  std::string tok;
  while (is >> tok) {
    if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S'))
      throw SyntaxError("bad braid token '" + tok + "'");
    std::string body = tok.substr(1);
    int exp = 1;
    auto caret = body.find('^');
    if (caret != std::string::npos) {
      std::string e = body.substr(caret + 1);
      if (e == "-1")
        exp = -1;
      else if (e == "1")
        exp = 1;
      else
        throw SyntaxError("bad exponent in '" + tok + "'");
      body = body.substr(0, caret);
    }
    try {
      std::size_t used = 0;
      int k = std::stoi(body, &used);
      if (used != body.size() || k <= 0) throw std::invalid_argument(body);
      letters.push_back(exp * k);
    } catch (const std::exception&) {
      throw SyntaxError("bad braid token '" + tok + "'");
    }
  }
  return letters;
}

bool is_single_cycle(const std::vector<int>& perm) {
  int m = static_cast<int>(perm.size());
  int seen = 0, at = 0;
  do {
    at = perm[at];
    ++seen;
  } while (at != 0 && seen <= m);
  return seen == m;
}

}  // namespace

BraidWord parse_braid_word(const std::string& text, int width, bool require_knot) {
  BraidWord b;
  b.letters = parse_letters(text);
  if (b.letters.empty()) throw SyntaxError("empty braid word");
  int maxk = 0;
  for (int l : b.letters) {
    if (l == 0) throw SyntaxError("braid letter 0 is not a generator");
    maxk = std::max(maxk, std::abs(l));
  }
  b.width = width > 0 ? width : maxk + 1;
  if (b.width < 2) throw IndexError("braid width must be at least 2");
  if (maxk > b.width - 1)
    throw IndexError("generator index " + std::to_string(maxk) +
                     " exceeds width-1 = " + std::to_string(b.width - 1));
  if (!require_knot) return b;
  // closure must be a knot: the induced permutation is a single m-cycle
  std::vector<int> perm(b.width);
  std::iota(perm.begin(), perm.end(), 0);
  for (int l : b.letters) {
    int k = std::abs(l) - 1;
    std::swap(perm[k], perm[k + 1]);
  }
  // perm[p] = strand ending at bottom position p; follow closure cycles
  std::vector<int> where(b.width);
  for (int p = 0; p < b.width; ++p) where[perm[p]] = p;
  if (!is_single_cycle(where))
    throw NotAKnot("closure of " + b.text() + " is a link, not a knot");
  return b;
}

std::vector<Slot> Diagram::level_slots(int line) const {
  std::vector<Slot> slots;
  int m = braid.width;
  slots.reserve(3 * m + 1);
  for (int s = 1; s <= m; ++s) {
    slots.push_back({Slot::Region, 0, region(line, s)});
    slots.push_back({Slot::Under, arc(line, s), region(line, s + 1)});
    slots.push_back({Slot::Over, arc(line, s), 0});
  }
  slots.push_back({Slot::Region, 0, region(line, m + 1)});
  return slots;
}

void Diagram::renumber_regions(const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != num_regions())
    throw IndexError("region renumbering has wrong size");
  std::vector<int> seen(perm.size(), 0);
  for (int v : perm) {
    if (v < 1 || v > num_regions() || seen[v - 1]++)
      throw IndexError("region renumbering is not a permutation");
  }
  for (auto& row : region_at)
    for (int& r : row) r = perm[r - 1];
  for (auto& c : crossings) {
    c.region_left = perm[c.region_left - 1];
    c.region_above = perm[c.region_above - 1];
    c.region_below = perm[c.region_below - 1];
    c.region_right = perm[c.region_right - 1];
  }
}

namespace {

// Union-find over small dense int ids.
struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

Diagram closure_diagram(const BraidWord& b) {
  const int n = b.length(), m = b.width;
  Diagram d;
  d.braid = b;
  d.writhe = b.writhe();

  // Strand segments: ids 0..m-1 for the top line, m+i-1 for the segment born
  // under crossing i. seg[(line-1)*m + pos-1] = segment id.
  auto sid = [m](int line, int pos) { return (line - 1) * m + (pos - 1); };
  std::vector<int> seg((n + 1) * m, -1);
  for (int p = 1; p <= m; ++p) seg[sid(1, p)] = p - 1;
  struct RawCross {
    int over_seg, under_in_seg, under_out_seg;
  };
  std::vector<RawCross> raw(n);
  for (int i = 1; i <= n; ++i) {
    int l = b.letters[i - 1];
    int k = std::abs(l), sign = l > 0 ? 1 : -1;
    for (int p = 1; p <= m; ++p)
      if (p != k && p != k + 1) seg[sid(i + 1, p)] = seg[sid(i, p)];
    int over_in = sign > 0 ? k : k + 1;
    int under_in = sign > 0 ? k + 1 : k;
    int over_out = sign > 0 ? k + 1 : k;
    int under_out = sign > 0 ? k : k + 1;
    seg[sid(i + 1, over_out)] = seg[sid(i, over_in)];
    int born = m + i - 1;
    seg[sid(i + 1, under_out)] = born;
    raw[i - 1] = {seg[sid(i, over_in)], seg[sid(i, under_in)], born};
  }
  UF segs(m + n);
  for (int p = 1; p <= m; ++p) segs.unite(seg[sid(n + 1, p)], seg[sid(1, p)]);

  // Arc numbering by traversal from (line 1, pos 1), strands downward.
  std::vector<int> arc_of(m + n, 0);
  {
    int line = 1, pos = 1, cur = 1;
    int start = segs.find(seg[sid(1, 1)]);
    arc_of[start] = 1;
    long guard = 0;
    while (true) {
      if (++guard > 100L * (n + 2) * m) throw NotAKnot("traversal did not close");
      int l = b.letters[line - 1];
      int k = std::abs(l), sign = l > 0 ? 1 : -1;
      int nline = line + 1, npos = pos;
      if (pos == k || pos == k + 1) {
        int over_in = sign > 0 ? k : k + 1;
        int over_out = sign > 0 ? k + 1 : k;
        int under_out = sign > 0 ? k : k + 1;
        if (pos == over_in) {
          npos = over_out;
        } else {
          npos = under_out;
          int ns = segs.find(seg[sid(nline, npos)]);
          if (ns == start) break;
          arc_of[ns] = ++cur;
        }
      }
      line = nline == n + 1 ? 1 : nline;
      pos = npos;
    }
    if (cur != n) throw NotAKnot("closure is not a single knot component");
  }
  d.arc_at.assign(n + 1, std::vector<int>(m, 0));
  for (int i = 1; i <= n + 1; ++i)
    for (int p = 1; p <= m; ++p) d.arc_at[i - 1][p - 1] = arc_of[segs.find(seg[sid(i, p)])];

  // Regions: labels per (line, gap); a crossing at k pinches gap k+1.
  auto gid = [m](int line, int gap) { return (line - 1) * (m + 1) + (gap - 1); };
  std::vector<int> lab((n + 1) * (m + 1), -1);
  int next = 0;
  for (int g = 1; g <= m + 1; ++g) lab[gid(1, g)] = next++;
  for (int i = 1; i <= n; ++i) {
    int k = std::abs(b.letters[i - 1]);
    for (int g = 1; g <= m + 1; ++g)
      lab[gid(i + 1, g)] = (g == k + 1) ? next++ : lab[gid(i, g)];
  }
  UF regs(next);
  for (int g = 1; g <= m + 1; ++g) regs.unite(lab[gid(n + 1, g)], lab[gid(1, g)]);
  // first-encounter numbering over lines 1..n, gaps left to right
  std::map<int, int> rid;
  for (int i = 1; i <= n; ++i)
    for (int g = 1; g <= m + 1; ++g) {
      int r = regs.find(lab[gid(i, g)]);
      if (!rid.count(r)) rid[r] = static_cast<int>(rid.size()) + 1;
    }
  if (static_cast<int>(rid.size()) != n + 2)
    throw NotAKnot("unexpected region count");  // cannot happen for knot closures
  d.region_at.assign(n + 1, std::vector<int>(m + 1, 0));
  for (int i = 1; i <= n + 1; ++i)
    for (int g = 1; g <= m + 1; ++g)
      d.region_at[i - 1][g - 1] = rid.at(regs.find(lab[gid(i, g)]));

  d.crossings.reserve(n);
  for (int i = 1; i <= n; ++i) {
    int l = b.letters[i - 1];
    int k = std::abs(l), sign = l > 0 ? 1 : -1;
    Crossing c;
    c.line = i;
    c.k = k;
    c.sign = sign;
    c.over = arc_of[segs.find(raw[i - 1].over_seg)];
    c.under_in = arc_of[segs.find(raw[i - 1].under_in_seg)];
    c.under_out = arc_of[segs.find(raw[i - 1].under_out_seg)];
    c.region_left = d.region(i, k);
    c.region_above = d.region(i, k + 1);
    c.region_below = d.region(i + 1, k + 1);
    c.region_right = d.region(i, k + 2);
    d.crossings.push_back(c);
  }
  return d;
}

Presentation wirtinger_presentation(const Diagram& d) {
  Presentation p;
  p.num_generators = d.num_arcs();
  for (const auto& c : d.crossings)
    p.relations.push_back({c.under_out, c.over, c.sign, c.under_in});
  return p;
}

LongitudeWords longitude_word(const Diagram& d) {
  // Deaths in traversal order: arc a dies where it is the under-in arc.
  std::vector<const Crossing*> death(d.num_arcs() + 1, nullptr);
  for (const auto& c : d.crossings) death[c.under_in] = &c;
  Word w;
  int a = 1;
  for (int step = 0; step < d.num_arcs(); ++step) {
    const Crossing* c = death[a];
    w.push_back({c->over, c->sign});
    a = c->under_out;
  }
  // Matrix composition order is the reverse of traversal order.
  std::reverse(w.begin(), w.end());
  LongitudeWords out;
  out.blackboard = w;
  out.canonical = w;
  if (d.writhe != 0) out.canonical.push_back({1, -d.writhe});
  return out;
}

}  // namespace bp
