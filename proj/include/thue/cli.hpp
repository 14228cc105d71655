#pragma once

// Command-line front end. Exit status: 0 success, 1 usage or validation
// error, 2 cross-check discrepancy.

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "thue/abssolver.hpp"
#include "thue/json_io.hpp"
#include "thue/oracle.hpp"
#include "thue/problem.hpp"
#include "thue/reducer.hpp"
#include "thue/rootbounds.hpp"
#include "thue/theorem.hpp"

namespace thue::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDiscrepancy = 2 };

namespace detail {

struct Overrides {
  std::string problem_path;
  std::string epsilon;
  std::int64_t ymax = -1;
  std::int64_t height = -1;
  bool json = false;
};

inline Problem load(const Overrides& o) {
  Problem p = load_problem(o.problem_path);
  if (!o.epsilon.empty()) {
    p.epsilon = parse_rational(o.epsilon);
    if (sgn(p.epsilon) <= 0 || p.epsilon >= 1) throw Error("--epsilon must lie in (0, 1)");
  }
  if (o.ymax >= 0) p.ymax = o.ymax;
  if (o.height >= 0) p.oracle_height = o.height;
  return p;
}

inline std::string quad(const RingElement& x, const RingElement& y) {
  return x.u1.get_str() + " " + x.u2.get_str() + " " + y.u1.get_str() + " " + y.u2.get_str();
}

inline void header(std::ostream& out, const Problem& p) {
  out << "# form: " << p.form.to_string() << "\n";
  out << "# m = " << p.field.m() << ", s = " << p.field.s() << ", K = " << p.K << ", epsilon = " << p.epsilon << "\n";
}

inline json problem_json(const Problem& p) {
  return {{"coeffs", p.form.coeffs()}, {"m", p.field.m()}, {"s", p.field.s()}, {"K", p.K}, {"epsilon", p.epsilon}};
}

inline const char* implication_word(const Implication& i) {
  if (!i.applicable) return "n/a";
  return i.holds ? "holds" : "FAILS";
}

inline std::string report_line(const TheoremReport& r) {
  auto pf = [](bool b) { return b ? "pass" : "FAIL"; };
  std::ostringstream os;
  os << "a_real=" << pf(r.ineq_a_real.pass) << "(" << r.ineq_a_real.value << ")"
     << " a_imag=" << pf(r.ineq_a_imag.pass) << "(" << r.ineq_a_imag.value << ")"
     << " aa=" << pf(r.ineq_aa) << " x12=" << implication_word(r.x12) << " I1=" << implication_word(r.I1)
     << " I2=" << implication_word(r.I2);
  return os.str();
}

inline std::vector<std::pair<RingElement, RingElement>> read_candidates(const std::string& path,
                                                                        const std::vector<std::string>& inline_list) {
  std::vector<std::string> lines = inline_list;
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open candidate file '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    }
  }
  std::vector<std::pair<RingElement, RingElement>> out;
  for (const auto& line : lines) {
    std::istringstream in(line);
    std::vector<Integer> v;
    std::string tok;
    while (in >> tok) v.push_back(parse_integer(tok));
    if (v.size() != 4) throw Error("candidate '" + line + "' must be four integers x1 x2 y1 y2");
    out.push_back({{v[0], v[1]}, {v[2], v[3]}});
  }
  return out;
}

inline int cmd_solve(const Overrides& o, bool families, bool no_fast_path, std::ostream& out, std::ostream& err) {
  Problem p = load(o);
  ReducerOptions opts;
  opts.integral_fast_path = !no_fast_path;
  RelativeSolutionSet res = solve_relative(p.field, p.form, p.K, p.epsilon, p.ymax, opts);
  const bool consistent = res.theorem_consistent();
  if (o.json) {
    json j = {{"problem", problem_json(p)}, {"result", res}, {"theorem_consistent", consistent}};
    if (!families) j["result"].erase("families");
    out << j.dump(2) << "\n";
  } else {
    header(out, p);
    out << "# ymax = " << p.ymax
        << (res.integral_fast_path ? " (x2 = y2 = 0 forced; |y1| <= ymax)" : " (|s*y1 + (s-1)*y2| <= ymax, |y2| <= ymax)")
        << "\n";
    for (const auto& note : res.notes) out << "# note: " << note << "\n";
    out << "# solutions: " << res.solutions.size() << "\n";
    out << "# x1 x2 y1 y2 norm\n";
    for (const auto& s : res.solutions) out << quad(s.x, s.y) << " " << s.norm_value << "\n";
    if (families) {
      out << "# zero families: (x, y) = base + t * step for all t in Z_M; members checked up to ymax\n";
      for (const auto& f : res.families)
        out << "family x = " << f.root << "*y base " << quad(f.base_x, f.base_y) << " step " << quad(f.step_x, f.step_y)
            << "\n";
    }
    out << "# theorem cross-check: " << (consistent ? "ok" : "FAILED") << "\n";
  }
  if (!consistent) {
    for (const auto& s : res.solutions)
      if (!s.report.consistent()) err << "theorem violation at " << quad(s.x, s.y) << ": " << report_line(s.report) << "\n";
    return kDiscrepancy;
  }
  return kOk;
}

inline int cmd_abs(const std::string& coeffs, const std::string& kprime, std::int64_t ymax, bool as_json,
                   std::ostream& out) {
  std::vector<Integer> cs;
  std::istringstream in(coeffs);
  std::string tok;
  while (in >> tok) cs.push_back(parse_integer(tok));
  if (cs.size() < 2) throw Error("--coeffs needs at least two coefficients");
  BinaryForm form(cs);
  require_admissible(form);
  Rational kp = parse_rational(kprime);
  AbsSolutionSet res = solve_abs(form, kp, ymax);
  if (as_json) {
    out << json{{"coeffs", form.coeffs()}, {"result", res}}.dump(2) << "\n";
    return kOk;
  }
  out << "# form: " << form.to_string() << "\n";
  out << "# |F(a,b)| <= " << kp << ", |b| <= " << ymax << "\n";
  out << "# solutions: " << res.solutions.size() << "\n";
  out << "# a b F(a,b)\n";
  for (const auto& s : res.solutions) out << s.pair.a << " " << s.pair.b << " " << s.value << "\n";
  return kOk;
}

inline int cmd_constants(const Overrides& o, unsigned bits, std::ostream& out) {
  Problem p = load(o);
  CertifiedConstants cc = certified_constants(p.form, p.field, p.K, p.epsilon, bits);
  if (o.json) {
    out << json{{"problem", problem_json(p)}, {"constants", constants_json(cc)}}.dump(2) << "\n";
    return kOk;
  }
  header(out, p);
  out << "# precision: 2^-" << cc.roots.bits << "\n";
  auto enc = [&out](const char* name, const Rational& lo, const Rational& hi) {
    out << name << " in [" << lo << ", " << hi << "] ~ [" << to_decimal(lo) << ", " << to_decimal(hi) << "]\n";
  };
  auto up = [&out](const char* name, const Rational& hi) {
    out << name << " <= " << hi << " ~ " << to_decimal(hi) << "\n";
  };
  for (std::size_t j = 0; j < cc.roots.intervals.size(); ++j) {
    std::string name = "alpha_" + std::to_string(j + 1);
    enc(name.c_str(), cc.roots.intervals[j].lo, cc.roots.intervals[j].hi);
  }
  enc("A", cc.roots.A_lower, cc.roots.A_upper);
  enc("B", cc.roots.B_lower, cc.roots.B_upper);
  enc("C", cc.constants.C_lower, cc.constants.C_upper);
  enc("G", cc.constants.G_lower, cc.constants.G_upper);
  up("T_x12", cc.thresholds.x12);
  up("T_I1", cc.thresholds.I1);
  up("T_I2", cc.thresholds.I2);
  return kOk;
}

inline int cmd_verify(const Overrides& o, const std::string& path, const std::vector<std::string>& inline_list,
                      std::ostream& out, std::ostream& err) {
  Problem p = load(o);
  auto candidates = read_candidates(path, inline_list);
  CertifiedConstants cc = certified_constants(p.form, p.field, p.K, p.epsilon);
  bool consistent = true;
  json arr = json::array();
  if (!o.json) header(out, p);
  for (const auto& [x, y] : candidates) {
    Integer nv;
    bool is_solution = satisfies_inequality(p.field, p.form, x, y, p.K, &nv);
    TheoremReport rep = theorem_report(p.field, p.form, cc.thresholds, x, y, p.K);
    if (is_solution && !rep.consistent()) {
      consistent = false;
      err << "theorem violation at " << quad(x, y) << "\n";
    }
    if (o.json)
      arr.push_back({{"x", x}, {"y", y}, {"solution", is_solution}, {"norm_value", nv}, {"report", rep}});
    else
      out << quad(x, y) << " solution=" << (is_solution ? "yes" : "no") << " norm=" << nv << " " << report_line(rep)
          << "\n";
  }
  if (o.json) out << json{{"problem", problem_json(p)}, {"candidates", arr}}.dump(2) << "\n";
  return consistent ? kOk : kDiscrepancy;
}

inline int cmd_oracle(const Overrides& o, std::ostream& out) {
  Problem p = load(o);
  OracleResult res = brute_force(p.field, p.form, p.K, p.oracle_height);
  if (o.json) {
    out << json{{"problem", problem_json(p)}, {"result", res}}.dump(2) << "\n";
    return kOk;
  }
  header(out, p);
  out << "# box: [-" << p.oracle_height << ", " << p.oracle_height << "]^4\n";
  out << "# solutions: " << res.solutions.size() << "\n";
  out << "# x1 x2 y1 y2 norm\n";
  for (const auto& s : res.solutions) out << quad(s.x, s.y) << " " << s.norm_value << "\n";
  return kOk;
}

struct Comparison {
  std::vector<std::string> missing;  ///< found by the oracle inside reach, absent from the solver
  std::vector<std::string> extra;    ///< emitted by the solver inside the box, absent from the oracle
  bool box_within_reach = true;

  bool match() const { return missing.empty() && extra.empty(); }
};

inline Comparison compare(const QuadraticField& field, const RelativeSolutionSet& solved, const OracleResult& oracle) {
  using Key = std::tuple<std::string, std::string, std::string, std::string>;
  auto key = [](const RingElement& x, const RingElement& y) {
    return Key{x.u1.get_str(), x.u2.get_str(), y.u1.get_str(), y.u2.get_str()};
  };
  std::set<Key> oracle_keys, solver_keys;
  for (const auto& s : oracle.solutions) oracle_keys.insert(key(s.x, s.y));
  for (const auto& s : solved.solutions)
    if (in_box(s.x, s.y, oracle.height)) solver_keys.insert(key(s.x, s.y));
  Comparison c;
  for (const auto& s : oracle.solutions) {
    if (!within_reach(field, solved, s.x, s.y)) {
      c.box_within_reach = false;
      continue;
    }
    if (!solver_keys.count(key(s.x, s.y))) c.missing.push_back(quad(s.x, s.y));
  }
  for (const auto& s : solved.solutions)
    if (in_box(s.x, s.y, oracle.height) && !oracle_keys.count(key(s.x, s.y))) c.extra.push_back(quad(s.x, s.y));
  return c;
}

inline int cmd_check(const Overrides& o, std::ostream& out, std::ostream& err) {
  Problem p = load(o);
  RelativeSolutionSet solved = solve_relative(p.field, p.form, p.K, p.epsilon, p.ymax);
  OracleResult oracle = brute_force(p.field, p.form, p.K, p.oracle_height);
  Comparison c = compare(p.field, solved, oracle);
  const bool consistent = solved.theorem_consistent();
  if (o.json) {
    out << json{{"problem", problem_json(p)},
                {"ymax", p.ymax},
                {"height", p.oracle_height},
                {"match", c.match()},
                {"box_within_reach", c.box_within_reach},
                {"missing", c.missing},
                {"extra", c.extra},
                {"theorem_consistent", consistent}}
                .dump(2)
        << "\n";
  } else {
    header(out, p);
    out << "# ymax = " << p.ymax << ", box = [-" << p.oracle_height << ", " << p.oracle_height << "]^4\n";
    if (!c.box_within_reach) out << "# note: part of the box lies outside the solver's reach; compared within reach\n";
    for (const auto& q : c.missing) out << "missing " << q << "\n";
    for (const auto& q : c.extra) out << "extra " << q << "\n";
    out << "# theorem cross-check: " << (consistent ? "ok" : "FAILED") << "\n";
    out << (c.match() ? "MATCH" : "MISMATCH") << "\n";
  }
  if (!c.match() || !consistent) {
    if (!c.match()) err << "solver and oracle disagree\n";
    if (!consistent) err << "theorem cross-check failed\n";
    return kDiscrepancy;
  }
  return kOk;
}

inline void add_problem_options(CLI::App* sub, Overrides& o) {
  sub->add_option("problem", o.problem_path, "problem file")->required();
  sub->add_option("--epsilon", o.epsilon, "override epsilon, a rational in (0, 1)");
  sub->add_flag("--json", o.json, "structured output");
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relative Thue inequalities over imaginary quadratic fields"};
  app.require_subcommand(1);

  detail::Overrides o;
  bool families = false, no_fast_path = false;
  auto* solve = app.add_subcommand("solve", "enumerate solutions through the absolute reduction");
  detail::add_problem_options(solve, o);
  solve->add_option("--ymax", o.ymax, "height bound for the absolute solver");
  solve->add_flag("--families", families, "print parametric zero families");
  solve->add_flag("--no-fast-path", no_fast_path, "always run the two-case reduction");

  std::string coeffs, kprime;
  std::int64_t abs_ymax = 100;
  bool abs_json = false;
  auto* abs_cmd = app.add_subcommand("abs", "solve |F(a,b)| <= K' over Z with |b| <= ymax");
  abs_cmd->add_option("--coeffs", coeffs, "c_0 ... c_n, ascending powers of x")->required();
  abs_cmd->add_option("--kprime", kprime, "bound K'")->required();
  abs_cmd->add_option("--ymax", abs_ymax, "height bound");
  abs_cmd->add_flag("--json", abs_json, "structured output");

  unsigned bits = kDefaultPrecisionBits;
  auto* consts = app.add_subcommand("constants", "print certified A, B, C, G and thresholds");
  detail::add_problem_options(consts, o);
  consts->add_option("--bits", bits, "starting root-isolation precision in bits");

  std::string candidate_file;
  std::vector<std::string> candidate_list;
  auto* verify = app.add_subcommand("verify", "evaluate the theorem predicates on candidates");
  detail::add_problem_options(verify, o);
  verify->add_option("--candidates", candidate_file, "file with one 'x1 x2 y1 y2' per line");
  verify->add_option("-c,--candidate", candidate_list, "inline candidate 'x1 x2 y1 y2'");

  auto* oracle = app.add_subcommand("oracle", "brute-force scan of the coordinate box");
  detail::add_problem_options(oracle, o);
  oracle->add_option("--height", o.height, "box half-width H");

  auto* check = app.add_subcommand("check", "solve, scan, and compare");
  detail::add_problem_options(check, o);
  check->add_option("--ymax", o.ymax, "height bound for the absolute solver");
  check->add_option("--height", o.height, "box half-width H");

  std::vector<const char*> argv{"thue"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) return detail::cmd_solve(o, families, no_fast_path, out, err);
    if (*abs_cmd) return detail::cmd_abs(coeffs, kprime, abs_ymax, abs_json, out);
    if (*consts) return detail::cmd_constants(o, bits, out);
    if (*verify) return detail::cmd_verify(o, candidate_file, candidate_list, out, err);
    if (*oracle) return detail::cmd_oracle(o, out);
    if (*check) return detail::cmd_check(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace thue::cli
