#pragma once

#include <fstream>

#include <json.hpp>

#include "bp/cluster.hpp"
#include "bp/decoration.hpp"
#include "bp/representation.hpp"

namespace bp {

using Json = nlohmann::json;

inline Json to_json(const cx& z) { return Json::array({z.real(), z.imag()}); }

inline cx cx_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw SyntaxError("expected a complex number as [re, im]");
  return cx(j[0].get<double>(), j[1].get<double>());
}

inline Json to_json(const Vec2& v) { return Json::array({to_json(v(0)), to_json(v(1))}); }

inline Json to_json(const Mat2& m) {
  return Json::array({Json::array({to_json(m(0, 0)), to_json(m(0, 1))}),
                      Json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
}

inline Mat2 mat2_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2)
    throw SyntaxError("expected a 2x2 matrix");
  return mat2(cx_from_json(j[0][0]), cx_from_json(j[0][1]), cx_from_json(j[1][0]),
              cx_from_json(j[1][1]));
}

inline Json to_json(const BraidWord& b) {
  return Json{{"width", b.width}, {"letters", b.letters}};
}

inline Json to_json(const Diagram& d) {
  Json j;
  j["braid"] = to_json(d.braid);
  j["writhe"] = d.writhe;
  j["arcs"] = d.num_arcs();
  j["regions"] = d.num_regions();
  Json cs = Json::array();
  for (const auto& c : d.crossings) {
    cs.push_back(Json{{"line", c.line},
                      {"k", c.k},
                      {"sign", c.sign},
                      {"over", c.over},
                      {"under_in", c.under_in},
                      {"under_out", c.under_out},
                      {"regions",
                       Json{{"left", c.region_left},
                            {"above", c.region_above},
                            {"below", c.region_below},
                            {"right", c.region_right}}}});
  }
  j["crossings"] = cs;
  Json levels = Json::array();
  for (int i = 1; i <= d.num_arcs() + 1; ++i) {
    Json slots = Json::array();
    for (const Slot& s : d.level_slots(i)) {
      switch (s.kind) {
        case Slot::Region:
          slots.push_back(Json{{"kind", "region"}, {"region", s.region}});
          break;
        case Slot::Under:
          slots.push_back(Json{{"kind", "under"}, {"arc", s.arc}, {"region", s.region}});
          break;
        case Slot::Over:
          slots.push_back(Json{{"kind", "over"}, {"arc", s.arc}});
          break;
      }
    }
    levels.push_back(Json{{"line", i}, {"slots", slots}});
  }
  j["levels"] = levels;
  return j;
}

inline Json to_json(const std::vector<ClusterTuple>& levels) {
  Json j = Json::array();
  for (std::size_t i = 0; i < levels.size(); ++i) {
    Json row = Json::array();
    for (const cx& v : levels[i].entries) row.push_back(to_json(v));
    j.push_back(Json{{"level", i + 1}, {"entries", row}});
  }
  return j;
}

inline std::vector<ClusterTuple> levels_from_json(const Json& j, int width) {
  std::vector<ClusterTuple> out;
  for (const auto& row : j) {
    ClusterTuple t;
    t.width = width;
    for (const auto& e : row.at("entries")) t.entries.push_back(cx_from_json(e));
    if (t.size() != 3 * width + 1)
      throw SyntaxError("level tuple has " + std::to_string(t.size()) +
                        " entries, expected " + std::to_string(3 * width + 1));
    out.push_back(std::move(t));
  }
  return out;
}

inline Json to_json(const WirtingerRep& rep) {
  Json mats;
  for (int i = 1; i <= rep.diagram.num_arcs(); ++i)
    mats[std::to_string(i)] = to_json(rep.gen(i));
  return Json{{"braid", to_json(rep.diagram.braid)},
              {"matrices", mats},
              {"provenance", Json{{"seed", rep.seed}, {"residual", rep.residual}}}};
}

inline WirtingerRep rep_from_json(const Json& j) {
  BraidWord b;
  b.width = j.at("braid").at("width").get<int>();
  b.letters = j.at("braid").at("letters").get<std::vector<int>>();
  WirtingerRep rep;
  rep.diagram = closure_diagram(b);
  rep.generators.resize(rep.diagram.num_arcs());
  for (int i = 1; i <= rep.diagram.num_arcs(); ++i)
    rep.generators[i - 1] = mat2_from_json(j.at("matrices").at(std::to_string(i)));
  if (j.contains("provenance")) {
    rep.seed = j["provenance"].value("seed", 0);
    rep.residual = j["provenance"].value("residual", 0.0);
  }
  rep.validate();
  return rep;
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SyntaxError("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

inline Json to_json(const Decoration& dec) {
  Json jv, jh;
  for (const auto& [r, v] : dec.V) jv[std::to_string(r)] = to_json(v);
  for (const auto& [a, h] : dec.H) jh[std::to_string(a)] = to_json(h);
  Json j{{"W", to_json(dec.W)}, {"V", jv}, {"H", jh}};
  if (dec.has_params)
    j["params"] = Json{{"alpha", to_json(dec.alpha)},
                       {"beta", to_json(dec.beta)},
                       {"gamma", to_json(dec.gamma)}};
  return j;
}

}  // namespace bp
