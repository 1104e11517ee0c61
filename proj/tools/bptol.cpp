// Command-line surface for the braid cluster / Ptolemy pipeline.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "bp/fixture.hpp"
#include "bp/geometry.hpp"
#include "bp/json_io.hpp"
#include "bp/ptolemy.hpp"

namespace {

using namespace bp;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitObstruction = 2;
constexpr int kExitVerification = 3;
constexpr int kExitDegenerate = 4;

struct Options {
  std::string braid;
  int width = 0;
  std::string rep_file;
  std::string levels_file;
  std::string tuple_file;
  bool ones = false;
  std::uint64_t seed = 1;
  int attempts = 60;
  std::string params;  // "a,b,c" with complex entries "re" or "re+imj"
  double tol = Tol::identity;
  std::string out;
};

cx parse_cx(const std::string& s) {
  // accepts "1.5", "1.5+0.5j", "1.5-0.5j", "2e-3+1e-4j"
  std::string t = s;
  if (!t.empty() && (t.back() == 'j' || t.back() == 'i')) {
    t.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t p = t.size(); p-- > 1;) {
      if ((t[p] == '+' || t[p] == '-') && t[p - 1] != 'e' && t[p - 1] != 'E') {
        split = p;
        break;
      }
    }
    if (split == std::string::npos)
      return cx(0, std::stod(t.empty() ? "1" : t));
    return cx(std::stod(t.substr(0, split)), std::stod(t.substr(split)));
  }
  return cx(std::stod(t), 0);
}

std::array<cx, 3> parse_params(const std::string& s) {
  std::array<cx, 3> out;
  std::istringstream is(s);
  std::string tok;
  int at = 0;
  while (std::getline(is, tok, ',')) {
    if (at >= 3) throw SyntaxError("expected three parameters a,b,c");
    out[at++] = parse_cx(tok);
  }
  if (at != 3) throw SyntaxError("expected three parameters a,b,c");
  return out;
}

void emit(const Json& report, const Options& opt) {
  std::string text = report.dump(2);
  if (!opt.out.empty()) {
    std::ofstream of(opt.out);
    of << text << "\n";
  } else {
    std::cout << text << "\n";
  }
}

Diagram diagram_from_options(const Options& opt) {
  if (opt.braid.empty()) throw SyntaxError("--braid is required");
  return closure_diagram(parse_braid_word(opt.braid, opt.width));
}

WirtingerRep rep_from_options(const Options& opt, const Diagram& d) {
  if (opt.rep_file.empty()) throw SyntaxError("--rep FILE is required");
  WirtingerRep rep = rep_from_json(load_json_file(opt.rep_file));
  if (rep.diagram.braid.letters != d.braid.letters ||
      rep.diagram.braid.width != d.braid.width)
    throw SyntaxError("representation file was built for a different braid");
  return rep;
}

Decoration decoration_from_options(const Options& opt, const Diagram& d,
                                   const WirtingerRep& rep) {
  if (!opt.params.empty()) {
    auto [a, b, g] = parse_params(opt.params);
    return decoration_from_params(d, rep, a, b, g);
  }
  return generic_decoration(d, rep, opt.seed);
}

Json config_echo(const std::string& cmd, const Options& opt) {
  Json j{{"command", cmd}, {"seed", opt.seed}, {"tol", opt.tol}};
  if (!opt.braid.empty()) j["braid"] = opt.braid;
  if (!opt.params.empty()) j["params"] = opt.params;
  if (!opt.rep_file.empty()) j["rep"] = opt.rep_file;
  return j;
}

int cmd_parse(const Options& opt) {
  Diagram d = diagram_from_options(opt);
  Json j = to_json(d);
  j["config"] = config_echo("parse", opt);
  emit(j, opt);
  return kExitOk;
}

int cmd_solve(const Options& opt) {
  Diagram d = diagram_from_options(opt);
  SolveOptions so;
  so.seed = opt.seed;
  so.attempts = opt.attempts;
  auto reps = solve_parabolic(d, so);
  Json arr = Json::array();
  for (const auto& r : reps) arr.push_back(to_json(r));
  Json j{{"config", config_echo("solve", opt)},
         {"count", reps.size()},
         {"representations", arr}};
  emit(j, opt);
  return kExitOk;
}

int cmd_build(const Options& opt) {
  Diagram d = diagram_from_options(opt);
  WirtingerRep rep = rep_from_options(opt, d);
  Json j{{"config", config_echo("build", opt)}};
  try {
    Decoration dec = decoration_from_options(opt, d, rep);
    auto levels = assemble_solution(d, dec);
    auto nd = check_nondegenerate(levels);
    j["decoration"] = to_json(dec);
    j["levels"] = to_json(levels);
    j["solution"] = is_solution(levels, opt.tol);
    j["nondegenerate"] = nd.pass();
    if (!nd.pass()) {
      Json v = Json::array();
      for (const auto& viol : nd.violations)
        v.push_back(Json{{"level", viol.level}, {"slot", viol.slot}, {"kind", viol.kind}});
      j["violations"] = v;
    }
    emit(j, opt);
    return kExitOk;
  } catch (const ObstructionMismatch& e) {
    int obs = obstruction_class(rep);
    int parity = braid_obstruction(d.num_arcs());
    j["error"] = Json{{"name", e.name()}, {"message", e.what()}};
    j["rep_obstruction"] = obs;
    j["braid_parity"] = parity;
    j["hint"] =
        "the construction needs matching parities; append one letter (add a "
        "kink) to flip the braid parity";
    emit(j, opt);
    return kExitObstruction;
  }
}

int cmd_obstruction(const Options& opt) {
  Diagram d = diagram_from_options(opt);
  WirtingerRep rep = rep_from_options(opt, d);
  int obs = obstruction_class(rep);
  int parity = braid_obstruction(d.num_arcs());
  Json j{{"config", config_echo("obstruction", opt)},
         {"obstruction", obs},
         {"braid_parity", parity},
         {"match", obs == parity}};
  emit(j, opt);
  return kExitOk;
}

Json verification_report(const Diagram& d, const std::vector<ClusterTuple>& levels,
                         const WirtingerRep* rep, const Decoration* dec, double tol) {
  PtolemyAssignment a = extend_assignment(d, levels);
  if (rep && dec) attach_decoration(a, *rep, *dec);
  auto rel = verify_crossing_relations(a, tol);
  auto tri = verify_triangle_faces(a, tol);
  auto lift = lift_cocycle(a);
  auto nd = check_nondegenerate(levels);

  Json rows = Json::array();
  for (const auto& r : rel.rows)
    rows.push_back(Json{{"line", r.line},
                        {"residuals", std::vector<double>(r.residuals.begin(),
                                                          r.residuals.end())}});
  Json mer = Json::array();
  for (const auto& [arc, t] : lift.meridian_traces)
    mer.push_back(Json{{"arc", arc}, {"trace", to_json(t)}});

  Json j;
  j["solution"] = is_solution(levels, tol);
  j["nondegenerate"] = nd.pass();
  j["crossing_relations"] =
      Json{{"rows", rows}, {"max_residual", rel.max_residual}, {"pass", rel.pass}};
  j["triangle_faces"] = Json{{"faces", tri.faces_checked},
                             {"max_residual", tri.max_residual},
                             {"pass", tri.pass}};
  j["lift"] = Json{{"eps_meridian", lift.eps_meridian},
                   {"eps_blackboard", lift.eps_blackboard},
                   {"eps_canonical", lift.eps_canonical},
                   {"meridian_traces", mer},
                   {"pass", lift.pass}};
  j["edge_classes"] = a.num_long_classes;
  j["class_residual"] = a.class_residual;
  bool pass = j["solution"].get<bool>() && nd.pass() && rel.pass && tri.pass && lift.pass;
  if (rep && dec) {
    int obs = obstruction_class(*rep);
    int parity = braid_obstruction(d.num_arcs());
    j["parity_gate"] = Json{{"rep_obstruction", obs},
                            {"braid_parity", parity},
                            {"match", obs == parity}};
    double herr = 0;
    for (int arc = 1; arc <= d.num_arcs(); ++arc) {
      try {
        Mat2 g = meridian_holonomy(a, d, arc);
        herr = std::max(herr, mat_dist(g, rep->gen(arc)));
      } catch (const PathNotRecorded&) {
      }
    }
    j["holonomy_max_error"] = herr;
    pass = pass && herr <= 1e-8 && obs == parity;
  }
  j["pass"] = pass;
  return j;
}

int cmd_verify(const Options& opt) {
  Diagram d = diagram_from_options(opt);
  Json j{{"config", config_echo("verify", opt)}};
  std::vector<ClusterTuple> levels;
  WirtingerRep rep;
  Decoration dec;
  bool have_rep = false;
  if (!opt.levels_file.empty()) {
    levels = levels_from_json(load_json_file(opt.levels_file), d.braid.width);
  } else {
    rep = rep_from_options(opt, d);
    dec = decoration_from_options(opt, d, rep);
    levels = assemble_solution(d, dec);
    have_rep = true;
  }
  j["verification"] = verification_report(d, levels, have_rep ? &rep : nullptr,
                                          have_rep ? &dec : nullptr, opt.tol);
  emit(j, opt);
  return j["verification"]["pass"].get<bool>() ? kExitOk : kExitVerification;
}

int cmd_volume(const Options& opt) {
  Diagram d = diagram_from_options(opt);
  WirtingerRep rep = rep_from_options(opt, d);
  Decoration dec = decoration_from_options(opt, d, rep);
  auto levels = assemble_solution(d, dec);
  PtolemyAssignment a = extend_assignment(d, levels);
  auto shapes = all_shapes(d, rep, dec);
  double vol = volume(shapes);
  auto glue = gluing_residual(a, shapes);
  Json shj = Json::array();
  for (const auto& s : shapes)
    shj.push_back(Json{{"crossing", s.line},
                       {"tet", s.tet_index},
                       {"z", to_json(s.z)},
                       {"parity", s.parity}});
  std::ostringstream volstr;
  volstr.setf(std::ios::fixed);
  volstr.precision(12);
  volstr << vol;
  Json j{{"config", config_echo("volume", opt)},
         {"volume", vol},
         {"volume_12digits", volstr.str()},
         {"shapes", shj},
         {"gluing", Json{{"max_residual", glue.max_residual}, {"pass", glue.pass}}}};
  emit(j, opt);
  return glue.pass ? kExitOk : kExitVerification;
}

int cmd_evolve(const Options& opt) {
  // the dynamics is defined for any braid word, knot closure or not
  if (opt.braid.empty()) throw SyntaxError("--braid is required");
  BraidWord b = parse_braid_word(opt.braid, opt.width, /*require_knot=*/false);
  ClusterTuple x1;
  if (opt.ones) {
    x1 = ClusterTuple::ones(b.width);
  } else if (!opt.tuple_file.empty()) {
    Json j = load_json_file(opt.tuple_file);
    x1.width = b.width;
    for (const auto& e : j) x1.entries.push_back(cx_from_json(e));
  } else {
    throw SyntaxError("evolve needs --tuple FILE or --ones");
  }
  auto levels = evolve(b, x1);
  Json j{{"config", config_echo("evolve", opt)},
         {"levels", to_json(levels)},
         {"solution", is_solution(levels, opt.tol)}};
  emit(j, opt);
  return kExitOk;
}

int cmd_example41(const Options& opt) {
  Diagram d = fixture::knot41_kink_diagram();
  WirtingerRep rep = fixture::knot41_kink_rep();
  Json j{{"config", config_echo("example-41", opt)}};

  // golden tables at pinned parameters
  cx a(2, 0), b(1, 0), g(3, 0);
  if (!opt.params.empty()) {
    auto p = parse_params(opt.params);
    a = p[0];
    b = p[1];
    g = p[2];
  }
  Decoration pinned = decoration_from_params(d, rep, a, b, g);
  auto pinned_levels = assemble_solution(d, pinned);
  auto expect = fixture::expected_levels(a, b, g);
  auto expect_h = fixture::expected_arc_vectors();
  auto expect_v = fixture::expected_region_vectors(a, b);
  double table_err = 0, scale = 1;
  for (int li = 0; li < 5; ++li)
    for (int s = 0; s < d.num_slots(); ++s) {
      table_err = std::max(table_err,
                           std::abs(pinned_levels[li].entries[s] - expect[li][s]));
      scale = std::max(scale, std::abs(expect[li][s]));
    }
  for (const auto& [arc, h] : expect_h)
    table_err = std::max(table_err, (pinned.H.at(arc) - h).cwiseAbs().maxCoeff());
  for (const auto& [reg, v] : expect_v)
    table_err = std::max(table_err, (pinned.V.at(reg) - v).cwiseAbs().maxCoeff());
  j["golden"] = Json{{"params", Json{{"alpha", to_json(a)},
                                     {"beta", to_json(b)},
                                     {"gamma", to_json(g)}}},
                     {"max_relative_error", table_err / scale},
                     {"pass", table_err / scale <= 1e-10}};

  // full pipeline at a generic seeded decoration
  Decoration dec = generic_decoration(d, rep, opt.seed);
  auto levels = assemble_solution(d, dec);
  Json ver = verification_report(d, levels, &rep, &dec, opt.tol);
  j["verification"] = ver;
  int obs = obstruction_class(rep);
  j["obstruction"] = obs;
  j["braid_parity"] = braid_obstruction(d.num_arcs());
  PtolemyAssignment asg = extend_assignment(d, levels);
  auto shapes = all_shapes(d, rep, dec);
  double vol = volume(shapes);
  auto glue = gluing_residual(asg, shapes);
  j["volume"] = vol;
  j["volume_error"] = std::abs(vol - fixture::knot41_volume);
  j["gluing_max_residual"] = glue.max_residual;
  bool pass = j["golden"]["pass"].get<bool>() && ver["pass"].get<bool>() &&
              obs == -1 && std::abs(vol - fixture::knot41_volume) < 1e-6 && glue.pass;
  j["pass"] = pass;
  emit(j, opt);
  return pass ? kExitOk : kExitVerification;
}

int dispatch(const std::string& cmd, const Options& opt) {
  if (cmd == "parse") return cmd_parse(opt);
  if (cmd == "solve") return cmd_solve(opt);
  if (cmd == "build") return cmd_build(opt);
  if (cmd == "verify") return cmd_verify(opt);
  if (cmd == "obstruction") return cmd_obstruction(opt);
  if (cmd == "volume") return cmd_volume(opt);
  if (cmd == "evolve") return cmd_evolve(opt);
  if (cmd == "example-41") return cmd_example41(opt);
  throw SyntaxError("unknown command " + cmd);
}

int error_exit_code(const Error& e) {
  const std::string& n = e.name();
  if (n == "SyntaxError" || n == "IndexError" || n == "NotAKnot") return kExitUsage;
  if (n == "ObstructionMismatch") return kExitObstruction;
  if (n == "InconsistentColoring" || n == "NotParabolicOnBoundary")
    return kExitVerification;
  return kExitDegenerate;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cluster-variable dynamics on braid closures: parabolic "
               "representations, Ptolemy verification, and hyperbolic volume"};
  app.require_subcommand(1);
  Options opt;

  std::vector<CLI::App*> subs;
  for (const char* name : {"parse", "solve", "build", "verify", "obstruction",
                           "volume", "evolve", "example-41"}) {
    CLI::App* s = app.add_subcommand(name);
    s->add_option("--braid", opt.braid, "braid word, e.g. \"[1,-2,1,-2]\" or \"s1 s2^-1\"");
    s->add_option("--width", opt.width, "number of strands (default max|k|+1)");
    s->add_option("--rep", opt.rep_file, "representation JSON file");
    s->add_option("--levels", opt.levels_file, "solution levels JSON file");
    s->add_option("--tuple", opt.tuple_file, "initial tuple JSON file");
    s->add_flag("--ones", opt.ones, "use the all-ones initial tuple");
    s->add_option("--seed", opt.seed, "random seed (default 1)");
    s->add_option("--attempts", opt.attempts, "solver attempts (default 60)");
    s->add_option("--params", opt.params, "decoration parameters a,b,c");
    s->add_option("--tol", opt.tol, "identity tolerance (default 1e-9)");
    s->add_option("--out", opt.out, "write the JSON report to this file");
    subs.push_back(s);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitUsage : kExitOk;
  }

  std::string cmd;
  for (CLI::App* s : subs)
    if (s->parsed()) cmd = s->get_name();

  try {
    return dispatch(cmd, opt);
  } catch (const bp::Error& e) {
    bp::Json j{{"error", bp::Json{{"name", e.name()}, {"message", e.what()}}}};
    std::cout << j.dump(2) << "\n";
    return error_exit_code(e);
  } catch (const std::exception& e) {
    bp::Json j{{"error", bp::Json{{"name", "InternalError"}, {"message", e.what()}}}};
    std::cout << j.dump(2) << "\n";
    return kExitDegenerate;
  }
}
