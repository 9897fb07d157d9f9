// Command line front end: equal-sum factorization search, parametric
// family generators, curve reports, torsion enumeration, verification.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "isoadd/curve.hpp"
#include "isoadd/families.hpp"
#include "isoadd/json_io.hpp"
#include "isoadd/solver.hpp"

using nlohmann::json;
using namespace isoadd;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;  // a checked mathematical bound failed
constexpr int kExitUsage = 2;      // bad arguments / violated preconditions

Rat arg_rat(const std::string& text) { return Rat::parse(text); }

void emit(const std::string& body, const std::string& out_path) {
  std::cout << body;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw Error(ErrorKind::ParseError, "cannot open " + out_path);
    out << body;
  }
}

struct OrbitClass {
  Rat abs_z;
  std::vector<Solution> solutions;
  bool degenerate = false;
};

std::vector<OrbitClass> group_by_orbit(const PairMN& pair,
                                       const std::vector<Solution>& sols) {
  std::map<Rat, OrbitClass> classes;  // keyed by z^2
  for (const Solution& sol : sols) {
    Rat z = sol.x + pair.m / sol.x;
    OrbitClass& cls = classes[z.squared()];
    cls.abs_z = z.abs();
    cls.solutions.push_back(sol);
    cls.degenerate = cls.degenerate || sol.x == pair.m / sol.x ||
                     sol.y == pair.n / sol.y;
  }
  std::vector<OrbitClass> out;
  out.reserve(classes.size());
  for (auto& [z2, cls] : classes) out.push_back(std::move(cls));
  return out;
}

std::vector<IsoRep> reps_of(const PairMN& pair, const std::vector<Solution>& sols) {
  std::vector<IsoRep> reps;
  reps.reserve(sols.size());
  for (const Solution& sol : sols) reps.push_back(induced_rep(pair, sol));
  return essentially_different(reps);
}

// ---------------------------------------------------------------- find-ir

struct FindIrReport {
  PairMN pair{Rat(1), Rat(2)};
  long long height = 0;
  int rho = 0;
  bool bound_violated = false;
  std::vector<Solution> solutions;
  std::vector<OrbitClass> orbits;
  std::vector<IsoRep> reps;
};

FindIrReport run_find_ir(const PairMN& pair, long long height) {
  FindIrReport rep;
  rep.pair = pair;
  rep.height = height;
  rep.solutions = search_solutions(pair, SearchConfig(height));
  rep.orbits = group_by_orbit(pair, rep.solutions);
  rep.reps = reps_of(pair, rep.solutions);
  rep.rho = count_rep_classes(pair, rep.solutions);
  rep.bound_violated = rep.rho > 4;
  return rep;
}

json find_ir_json(const FindIrReport& rep) {
  json orbits = json::array();
  for (const OrbitClass& cls : rep.orbits) {
    json sols = json::array();
    for (const Solution& s : cls.solutions) sols.push_back(to_json(s));
    orbits.push_back(json{{"abs_z", to_json(cls.abs_z)},
                          {"degenerate", cls.degenerate},
                          {"solutions", sols}});
  }
  json reps = json::array();
  for (const IsoRep& r : rep.reps) reps.push_back(to_json(r));
  json sols = json::array();
  for (const Solution& s : rep.solutions) sols.push_back(to_json(s));
  return json{{"pair", to_json(rep.pair)},
              {"height", rep.height},
              {"rho", rep.rho},
              {"bound_violated", rep.bound_violated},
              {"orbits", orbits},
              {"reps", reps},
              {"solutions", sols}};
}

std::string find_ir_text(const FindIrReport& rep) {
  std::ostringstream os;
  os << "pair (m, n) = (" << rep.pair.m << ", " << rep.pair.n << "), height bound "
     << rep.height << "\n";
  if (rep.solutions.empty()) {
    os << "no representation found up to height " << rep.height
       << " (this bounds rho from below only)\n";
    return os.str();
  }
  os << "rho >= " << rep.rho << " (" << rep.orbits.size()
     << " solution orbit(s) found)\n";
  for (const OrbitClass& cls : rep.orbits) {
    os << "orbit with |z| = " << cls.abs_z
       << (cls.degenerate ? " (degenerate)" : "") << ":";
    for (const Solution& s : cls.solutions) {
      os << "  (" << s.x << ", " << s.y << ")";
    }
    os << "\n";
  }
  os << "essentially different representations:\n";
  for (const IsoRep& r : rep.reps) {
    os << "  " << r.m() << " = " << r.m1 << " x " << r.m2 << ",  " << r.n()
       << " = " << r.n1 << " x " << r.n2 << ",  sum " << r.z << "\n";
  }
  if (rep.bound_violated) {
    os << "WARNING: more than four essentially different representations below"
          " this height; the four-representation bound fails for this pair\n";
  }
  return os.str();
}

// ------------------------------------------------------------------ curve

json line_json(const std::optional<Line>& line) {
  if (!line) return nullptr;
  return to_json(*line);
}

json curve_report_json(const Curve& curve, const Solution& sol) {
  json out;
  out["curve"] = json{{"m", to_json(curve.m)}, {"n", to_json(curve.n)}};
  out["solution"] = to_json(sol);

  auto pts = labelled_points(curve, sol);
  out["points"] = json{{"P1", to_json(pts[0])},
                       {"P2", to_json(pts[1])},
                       {"P3", to_json(pts[2])},
                       {"P4", to_json(pts[3])}};
  json orbit = json::array();
  for (const CurvePoint& p : orbit_points(curve, sol)) orbit.push_back(to_json(p));
  out["orbit_points"] = orbit;

  json identities = json::array();
  for (const IdentityResult& r : check_addition_identities(curve, sol)) {
    identities.push_back(json{{"id", r.id},
                              {"holds", r.holds},
                              {"expected_line", line_json(r.expected_line)},
                              {"computed_line", line_json(r.computed_line)},
                              {"sum", to_json(r.computed)}});
  }
  out["addition_identities"] = identities;

  json doubling = json::array();
  for (int j = 1; j <= 4; ++j) {
    CurvePoint closed = double_from_solution(curve, sol, j);
    CurvePoint tangent = double_point(curve, pts[static_cast<std::size_t>(j - 1)]);
    doubling.push_back(json{{"j", j},
                            {"closed_form", to_json(closed)},
                            {"tangent", to_json(tangent)},
                            {"equal", closed == tangent}});
  }
  out["doubling"] = doubling;

  DerivedChecksReport derived = check_derived_identities(curve, sol);
  json failures = json::array();
  for (const auto* group :
       {&derived.translations, &derived.multiples, &derived.double_shifts}) {
    for (const IdentityResult& r : *group) {
      if (!r.holds) failures.push_back(r.id);
    }
  }
  out["derived_identities"] =
      json{{"all_hold", derived.all_hold},
           {"checked", derived.translations.size() + derived.multiples.size() +
                           derived.double_shifts.size()},
           {"failures", failures}};

  Classification cls = classify_group_closure(curve, sol);
  json cj;
  switch (cls.closure) {
    case Closure::DoublesToT: cj["case"] = "T"; break;
    case Closure::DoublesToM: cj["case"] = "M"; break;
    case Closure::DoublesToN: cj["case"] = "N"; break;
    case Closure::NotClosed: cj["case"] = "not-closed"; break;
  }
  cj["double_p1"] = to_json(cls.double_p1);
  if (cls.closure != Closure::NotClosed) {
    cj["labels"] = cls.labels;
    json table = json::array();
    for (const auto& row : cls.table) table.push_back(row);
    cj["table"] = table;
    json orders = json::array();
    for (const TorsionReport& cert : cls.order_certificates) {
      orders.push_back(json{{"point", to_json(cert.point)}, {"order", *cert.order}});
    }
    cj["order_certificates"] = orders;
  } else {
    cj["double_in_orbit"] = cls.double_in_orbit;
  }
  out["classification"] = cj;

  json torsion = json::array();
  for (const CurvePoint& p : orbit_points(curve, sol)) {
    TorsionReport report = torsion_order(curve, p);
    torsion.push_back(json{{"point", to_json(p)},
                           {"order", report.order ? json(*report.order)
                                                  : json("infinite")}});
  }
  out["torsion_orders"] = torsion;

  if (curve.m.is_integer() && curve.n.is_integer()) {
    json nl = json::array();
    for (const CurvePoint& p : nagell_lutz_torsion(curve)) nl.push_back(to_json(p));
    out["nagell_lutz"] = nl;
  }

  json notes = json::array();
  if (curve.m == Rat(1) && curve.n == Rat(-3)) {
    notes.push_back(
        "the eight torsion points are the only rational points here, so no "
        "four distinct rational squares form an arithmetic sequence");
  }
  out["notes"] = notes;
  return out;
}

std::string curve_report_text(const json& r) {
  std::ostringstream os;
  os << "curve: w^2 = u(u - " << r["curve"]["m"].get<std::string>() << ")(u - "
     << r["curve"]["n"].get<std::string>() << ")\n";
  os << "base solution: (" << r["solution"]["x"].get<std::string>() << ", "
     << r["solution"]["y"].get<std::string>() << ")\n";
  auto pt = [](const json& p) {
    if (p.is_string()) return std::string("infinity");
    return "(" + p["u"].get<std::string>() + ", " + p["w"].get<std::string>() + ")";
  };
  os << "labelled points:";
  for (const char* name : {"P1", "P2", "P3", "P4"}) {
    os << "  " << name << " = " << pt(r["points"][name]);
  }
  os << "\norbit point set:";
  for (const auto& p : r["orbit_points"]) os << "  " << pt(p);
  os << "\naddition identities:\n";
  for (const auto& id : r["addition_identities"]) {
    os << "  " << id["id"].get<std::string>() << "  "
       << (id["holds"].get<bool>() ? "holds" : "FAILS");
    if (!id["computed_line"].is_null()) {
      os << "  (lambda = " << id["computed_line"]["lambda"].get<std::string>()
         << ", nu = " << id["computed_line"]["nu"].get<std::string>() << ")";
    }
    os << "\n";
  }
  os << "closed-form doubling vs tangent doubling:";
  for (const auto& d : r["doubling"]) {
    os << "  [2]P" << d["j"].get<int>() << " = " << pt(d["closed_form"])
       << (d["equal"].get<bool>() ? "" : " MISMATCH");
  }
  os << "\nderived identities: "
     << (r["derived_identities"]["all_hold"].get<bool>() ? "all hold" : "FAILURES")
     << " (" << r["derived_identities"]["checked"].get<std::size_t>()
     << " checked)\n";
  const auto& cls = r["classification"];
  os << "closure: ";
  if (cls["case"] == "not-closed") {
    os << "[2]P1 = " << pt(cls["double_p1"])
       << " is not a two-torsion point; the orbit points do not close into "
          "the order-8 group";
    if (cls["double_in_orbit"].get<bool>()) {
      os << " ([2]P1 lies in the orbit point set; closure undetermined by the "
            "handled cases)";
    }
    os << "\n";
  } else {
    os << "[2]P1 = " << pt(cls["double_p1"]) << " ("
       << cls["case"].get<std::string>()
       << " case); group of order 8, orbit points have order 4\n";
    os << "group table rows (" ;
    bool first = true;
    for (const auto& l : cls["labels"]) {
      os << (first ? "" : " ") << l.get<std::string>();
      first = false;
    }
    os << "):\n";
    for (const auto& row : cls["table"]) {
      os << "   ";
      for (const auto& cell : row) os << " " << cell.get<std::string>();
      os << "\n";
    }
  }
  os << "torsion orders:";
  for (const auto& t : r["torsion_orders"]) {
    os << "  " << pt(t["point"]) << ": "
       << (t["order"].is_string() ? t["order"].get<std::string>()
                                  : std::to_string(t["order"].get<int>()));
  }
  os << "\n";
  if (r.contains("nagell_lutz")) {
    os << "torsion subgroup (divisor scan): ";
    for (const auto& p : r["nagell_lutz"]) os << " " << pt(p);
    os << "\n";
  }
  for (const auto& note : r["notes"]) {
    os << "note: " << note.get<std::string>() << "\n";
  }
  return os.str();
}

// ----------------------------------------------------------------- family

json family_json(const FamilyInstance& inst, bool alias_c2) {
  json j = to_json(inst);
  if (alias_c2) j["alias_of"] = "c2";
  return j;
}

std::string family_text(const FamilyInstance& inst, bool alias_c2) {
  std::ostringstream os;
  os << "case " << case_name(inst.case_id);
  if (alias_c2) os << " (requested as c2, which generates the same solutions)";
  os << " with";
  for (const auto& [key, value] : inst.params) os << " " << key << " = " << value;
  os << "\n(m, n) = (" << inst.pair.m << ", " << inst.pair.n << ")\n";
  for (std::size_t i = 0; i < inst.solutions.size(); ++i) {
    const Solution& s = inst.solutions[i];
    os << "solution (" << s.x << ", " << s.y << ")  factors: " << inst.pair.m
       << " = " << s.x << " x " << inst.pair.m / s.x << ", " << inst.pair.n
       << " = " << s.y << " x " << inst.pair.n / s.y << ", sum " << inst.sums[i]
       << "\n";
  }
  os << "rho among generated solutions: " << inst.rho
     << (inst.collapsed ? " (the two solution classes collapsed into one orbit)"
                        : "")
     << "\n";
  return os.str();
}

// --------------------------------------------------------------- examples

struct ExampleCheck {
  std::string name;
  bool pass;
  std::string detail;
};

bool has_rep(const std::vector<IsoRep>& reps, const IsoRep& want) {
  IsoRep canon = canonical_rep(want);
  for (const IsoRep& r : reps) {
    if (r == canon) return true;
  }
  return false;
}

std::vector<ExampleCheck> run_examples() {
  std::vector<ExampleCheck> checks;

  {  // the (30, 42) factorizations with sums +-13 and +-17
    PairMN pair{Rat(30), Rat(42)};
    auto report = run_find_ir(pair, 100);
    bool ok = has_rep(report.reps, make_iso_rep(3, 10, 6, 7)) &&
              has_rep(report.reps, make_iso_rep(-3, -10, -6, -7)) &&
              has_rep(report.reps, make_iso_rep(2, 15, 3, 14)) &&
              has_rep(report.reps, make_iso_rep(-2, -15, -3, -14));
    checks.push_back({"(30,42) has 3x10/6x7 and 2x15/3x14 with sums +-13, +-17",
                      ok, "rho within height 100: " + std::to_string(report.rho)});
  }
  {  // degenerate orbit of (3, 4)
    PairMN pair{Rat(3), Rat(4)};
    Orbit orb = orbit(Solution{Rat(1), Rat(2)}, pair);
    bool ok = orb.degenerate && orb.elements.size() == 4;
    checks.push_back({"(3,4): orbit of (1,2) is degenerate with 4 elements", ok,
                      std::to_string(orb.elements.size()) + " elements"});
  }
  {  // the curve w^2 = u(u-1)(u+3)
    Curve curve{Rat(1), Rat(-3)};
    Solution base{Rat(1), Rat(3)};
    auto torsion = nagell_lutz_torsion(curve);
    Classification cls = classify_group_closure(curve, base);
    bool ok = torsion.size() == 8 && cls.closure == Closure::DoublesToM &&
              cls.double_p1 == CurvePoint(Rat(1), Rat(0));
    for (const CurvePoint& p : orbit_points(curve, base)) {
      auto report = torsion_order(curve, p);
      ok = ok && report.order && *report.order == 4;
    }
    checks.push_back({"curve (1,-3): 8 torsion points, orbit points of order 4",
                      ok, std::to_string(torsion.size()) + " torsion points"});
  }
  {  // taxicab: 729000 = 729 x 1000 and 1728 = 1 x 1728, sums 1729
    PairMN pair{Rat(729000), Rat(1728)};
    auto report = run_find_ir(pair, 2000);
    bool ok = has_rep(report.reps, make_iso_rep(729, 1000, 1, 1728));
    checks.push_back(
        {"(729000,1728) has 729x1000 / 1x1728 with sum 1729", ok,
         std::to_string(report.reps.size()) + " representations found"});
  }
  {  // Pythagorean 3,4,5 (p = 2, q = 1): factor sums all equal 10
    bool ok = true;
    std::string detail;
    struct Item { long long m, n, m1, m2, n1, n2; };
    // a^2 = 16 = (2p^2)(2q^2), b^2 = 9 = (p+q)^2 (p-q)^2, c^2 = 25 = 5 x 5
    for (const Item& it : {Item{16, 9, 8, 2, 9, 1}, Item{16, 25, 8, 2, 5, 5},
                           Item{9, 25, 9, 1, 5, 5}}) {
      PairMN pair{Rat(it.m), Rat(it.n)};
      auto report = run_find_ir(pair, 100);
      IsoRep want = make_iso_rep(it.m1, it.m2, it.n1, it.n2);
      ok = ok && want.z == Rat(10) && has_rep(report.reps, want);
    }
    checks.push_back({"(16,9), (16,25), (9,25): factor sums all 10", ok, ""});
  }
  return checks;
}

// ------------------------------------------------------------------- main

int dispatch(CLI::App& app, int argc, char** argv) {
  bool as_json = false;
  std::string out_path;

  auto* find_ir = app.add_subcommand("find-ir",
                                     "search equal-sum factorizations of a pair");
  std::string fi_m, fi_n;
  long long fi_height = 100;
  find_ir->add_option("m", fi_m, "first number (integer or p/q)")->required();
  find_ir->add_option("n", fi_n, "second number")->required();
  find_ir->add_option("--height", fi_height, "height bound for x candidates");
  find_ir->add_flag("--json", as_json, "machine readable output");
  find_ir->add_option("--out", out_path, "also write the report to a file");

  auto* family = app.add_subcommand("family", "generate a parametric family instance");
  std::string fa_case;
  std::string fa_a, fa_b, fa_l, fa_l1, fa_l2, fa_n;
  long long fa_count = 0;
  unsigned long long fa_seed = 0;
  family->add_option("case", fa_case, "c1, c2, c311, c312, c32 or c33")->required();
  family->add_option("--a", fa_a, "integer parameter a");
  family->add_option("--b", fa_b, "integer parameter b");
  family->add_option("--l", fa_l, "rational parameter l");
  family->add_option("--l1", fa_l1, "rational parameter l1");
  family->add_option("--l2", fa_l2, "rational parameter l2");
  family->add_option("--n", fa_n, "rational parameter n");
  family->add_option("--count", fa_count, "emit this many random valid instances");
  family->add_option("--seed", fa_seed, "seed for --count");
  family->add_flag("--json", as_json, "machine readable output");
  family->add_option("--out", out_path, "also write the report to a file");

  auto* curve_cmd = app.add_subcommand("curve", "full curve report for a solution");
  std::string cu_m, cu_n;
  std::vector<std::string> cu_sol;
  curve_cmd->add_option("m", cu_m, "first root")->required();
  curve_cmd->add_option("n", cu_n, "second root")->required();
  curve_cmd->add_option("--sol", cu_sol, "solution x y")->expected(2)->required();
  curve_cmd->add_flag("--json", as_json, "machine readable output");
  curve_cmd->add_option("--out", out_path, "also write the report to a file");

  auto* torsion_cmd = app.add_subcommand("torsion", "torsion points / point order");
  std::string to_m, to_n;
  std::vector<std::string> to_point;
  torsion_cmd->add_option("m", to_m, "first root")->required();
  torsion_cmd->add_option("n", to_n, "second root")->required();
  torsion_cmd->add_option("--point", to_point, "probe one point u w")->expected(2);
  torsion_cmd->add_flag("--json", as_json, "machine readable output");
  torsion_cmd->add_option("--out", out_path, "also write the report to a file");

  auto* verify_cmd = app.add_subcommand("verify", "verify a representation or solution");
  std::vector<std::string> ve_rep;
  std::vector<std::string> ve_pair;
  std::vector<std::string> ve_sol;
  verify_cmd->add_option("--rep", ve_rep, "four factors m1 m2 n1 n2")->expected(4);
  verify_cmd->add_option("--pair", ve_pair, "pair m n")->expected(2);
  verify_cmd->add_option("--sol", ve_sol, "solution x y")->expected(2);
  verify_cmd->add_flag("--json", as_json, "machine readable output");

  auto* examples_cmd =
      app.add_subcommand("examples", "run the worked-example catalog (smoke test)");
  examples_cmd->add_flag("--json", as_json, "machine readable output");
  examples_cmd->add_option("--out", out_path, "also write the report to a file");

  app.require_subcommand(1);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  if (find_ir->parsed()) {
    PairMN pair{arg_rat(fi_m), arg_rat(fi_n)};
    if (fi_height < 1) throw Error(ErrorKind::Unsupported, "height must be >= 1");
    FindIrReport report = run_find_ir(pair, fi_height);
    emit(as_json ? find_ir_json(report).dump(2) + "\n" : find_ir_text(report),
         out_path);
    return report.bound_violated ? kExitInvariant : kExitOk;
  }

  if (family->parsed()) {
    bool alias_c2 = false;
    CaseId id = parse_case_id(fa_case, &alias_c2);
    if (fa_count > 0) {
      std::mt19937_64 rng(fa_seed);
      std::ostringstream text;
      json arr = json::array();
      for (long long i = 0; i < fa_count; ++i) {
        FamilyInstance inst = draw_random_instance(id, rng);
        if (as_json) {
          arr.push_back(family_json(inst, alias_c2));
        } else {
          text << family_text(inst, alias_c2);
        }
      }
      emit(as_json ? arr.dump(2) + "\n" : text.str(), out_path);
      return kExitOk;
    }
    auto need = [](const std::string& v, const char* name) {
      if (v.empty()) {
        throw Error(ErrorKind::ParseError,
                    std::string("missing required parameter --") + name);
      }
      return Rat::parse(v);
    };
    auto need_int = [&need](const std::string& v, const char* name) {
      Rat r = need(v, name);
      if (!r.is_integer()) {
        throw Error(ErrorKind::ParseError, std::string(name) + " must be an integer");
      }
      return static_cast<long long>(r.num());
    };
    FamilyInstance inst;
    switch (id) {
      case CaseId::C1:
        inst = case1(need(fa_l, "l"), need(fa_n, "n"));
        break;
      case CaseId::C311:
        inst = case311(need_int(fa_a, "a"), need_int(fa_b, "b"),
                       need(fa_l1, "l1"), need(fa_l2, "l2"));
        break;
      case CaseId::C312:
        inst = case312(need_int(fa_a, "a"), need_int(fa_b, "b"), need(fa_l, "l"));
        break;
      case CaseId::C32:
        inst = case32(need_int(fa_a, "a"), need_int(fa_b, "b"), need(fa_l, "l"),
                      need(fa_n, "n"));
        break;
      case CaseId::C33:
        inst = case33(need_int(fa_a, "a"), need_int(fa_b, "b"), need(fa_l, "l"),
                      need(fa_n, "n"));
        break;
    }
    emit(as_json ? family_json(inst, alias_c2).dump(2) + "\n"
                 : family_text(inst, alias_c2),
         out_path);
    return kExitOk;
  }

  if (curve_cmd->parsed()) {
    Curve curve{arg_rat(cu_m), arg_rat(cu_n)};
    Solution sol{arg_rat(cu_sol[0]), arg_rat(cu_sol[1])};
    if (!is_solution(curve.pair(), sol)) {
      throw Error(ErrorKind::NotASolution,
                  "(" + sol.x.str() + ", " + sol.y.str() +
                      ") does not satisfy x + m/x = y + n/y for this curve");
    }
    json report = curve_report_json(curve, sol);
    emit(as_json ? report.dump(2) + "\n" : curve_report_text(report), out_path);
    return kExitOk;
  }

  if (torsion_cmd->parsed()) {
    Curve curve{arg_rat(to_m), arg_rat(to_n)};
    if (!to_point.empty()) {
      CurvePoint p(arg_rat(to_point[0]), arg_rat(to_point[1]));
      TorsionReport report = torsion_order(curve, p);
      json j{{"point", to_json(p)},
             {"order", report.order ? json(*report.order) : json("infinite")}};
      json chain = json::array();
      for (const CurvePoint& q : report.multiples) chain.push_back(to_json(q));
      j["multiples"] = chain;
      if (as_json) {
        emit(j.dump(2) + "\n", out_path);
      } else {
        std::ostringstream os;
        os << "point " << p.str() << " has order "
           << (report.order ? std::to_string(*report.order) : "infinite (beyond 12)")
           << "\nmultiples:";
        for (const CurvePoint& q : report.multiples) os << "  " << q.str();
        os << "\n";
        emit(os.str(), out_path);
      }
      return kExitOk;
    }
    auto torsion = nagell_lutz_torsion(curve);
    if (as_json) {
      json arr = json::array();
      for (const CurvePoint& p : torsion) {
        auto report = torsion_order(curve, p);
        arr.push_back(json{{"point", to_json(p)}, {"order", *report.order}});
      }
      emit(json{{"curve", json{{"m", to_json(curve.m)}, {"n", to_json(curve.n)}}},
                {"torsion", arr}}
               .dump(2) +
               "\n",
           out_path);
    } else {
      std::ostringstream os;
      os << "torsion subgroup of w^2 = u(u - " << curve.m << ")(u - " << curve.n
         << "): " << torsion.size() << " points\n";
      for (const CurvePoint& p : torsion) {
        os << "  " << p.str() << "  order " << *torsion_order(curve, p).order
           << "\n";
      }
      emit(os.str(), out_path);
    }
    return kExitOk;
  }

  if (verify_cmd->parsed()) {
    bool ok = false;
    json j;
    if (!ve_rep.empty()) {
      IsoRep rep;
      rep.m1 = arg_rat(ve_rep[0]);
      rep.m2 = arg_rat(ve_rep[1]);
      rep.n1 = arg_rat(ve_rep[2]);
      rep.n2 = arg_rat(ve_rep[3]);
      rep.z = rep.m1 + rep.m2;
      ok = verify_iso_rep(rep);
      j = json{{"kind", "rep"}, {"rep", to_json(rep)}, {"valid", ok}};
    } else if (!ve_pair.empty() && !ve_sol.empty()) {
      PairMN pair{arg_rat(ve_pair[0]), arg_rat(ve_pair[1])};
      Solution sol{arg_rat(ve_sol[0]), arg_rat(ve_sol[1])};
      ok = is_solution(pair, sol);
      j = json{{"kind", "solution"},
               {"pair", to_json(pair)},
               {"solution", to_json(sol)},
               {"valid", ok}};
    } else {
      throw Error(ErrorKind::ParseError,
                  "verify needs either --rep m1 m2 n1 n2 or --pair m n --sol x y");
    }
    if (as_json) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << (ok ? "valid" : "invalid") << "\n";
    }
    return ok ? kExitOk : kExitInvariant;
  }

  if (examples_cmd->parsed()) {
    auto checks = run_examples();
    bool all = true;
    if (as_json) {
      json arr = json::array();
      for (const ExampleCheck& c : checks) {
        arr.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        all = all && c.pass;
      }
      emit(arr.dump(2) + "\n", out_path);
    } else {
      std::ostringstream os;
      for (const ExampleCheck& c : checks) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << "\n";
        all = all && c.pass;
      }
      emit(os.str(), out_path);
    }
    return all ? kExitOk : kExitInvariant;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact search and elliptic-curve toolkit for equal-sum "
               "factorizations of rational pairs"};
  try {
    return dispatch(app, argc, argv);
  } catch (const Error& e) {
    std::cerr << "error [" << error_kind_name(e.kind()) << "]: " << e.what()
              << "\n";
    return e.internal() ? kExitInvariant : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
}
