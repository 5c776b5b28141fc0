// One pass/fail line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using finvar::Check;
using finvar::Status;
using namespace finvar::cli;

namespace {

struct SuiteRun {
  Report report;
  double wall = 0;
};

std::map<std::string, SuiteRun> runs;
std::vector<Report> ordered;

const Check* find_check(const std::string& id) {
  for (const auto& r : ordered) {
    for (const auto& c : r.checks) {
      if (c.id == id) return &c;
    }
  }
  return nullptr;
}

struct Verdict {
  bool ok = true;
  std::vector<std::string> problems;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (std::find(problems.begin(), problems.end(), what) == problems.end()) problems.push_back(what);
  }
  // The check exists, passes, and its expected value is the stated oracle.
  void check(const std::string& id, const std::string& oracle = "") {
    const Check* c = find_check(id);
    if (c == nullptr) {
      require(false, id + " missing");
      return;
    }
    if (!oracle.empty()) require(c->expected == oracle, id + " expects " + c->expected + ", oracle " + oracle);
    require(c->status == Status::Pass, id + " expected " + c->expected + " got " + c->actual);
  }
  void suite_passes(const std::string& suite) {
    for (const auto& c : runs.at(suite).report.checks) {
      require(c.status == Status::Pass, c.id + " expected " + c.expected + " got " + c.actual);
    }
  }
  void within(const std::vector<std::string>& suites, double limit) {
    double s = 0;
    for (const auto& n : suites) s += runs.at(n).wall;
    std::ostringstream os;
    os << "took " << s << " s, limit " << limit << " s";
    require(s <= limit, os.str());
  }
};

int failures = 0;

void emit(int n, const std::string& title, const Verdict& v) {
  std::cout << "criterion " << n << ": " << (v.ok ? "PASS" : "FAIL") << "  " << title << "\n";
  for (const auto& p : v.problems) std::cout << "    " << p << "\n";
  if (!v.ok) ++failures;
}

}  // namespace

int main() {
  RunOptions opts;
  for (const auto& name : suite_names()) {
    const auto t0 = std::chrono::steady_clock::now();
    Report r = run_suite(name, opts).front();
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    runs[name] = {r, wall};
    ordered.push_back(r);
    std::cout << "ran suite " << name << " in " << wall << " s\n";
  }

  {
    Verdict v;
    const std::vector<std::pair<std::string, std::string>> orders{
        {"quaternion_q8.order", "8"},       {"binary_tetrahedral.order", "24"},
        {"binary_octahedral.order", "48"},  {"binary_icosahedral.order", "120"},
        {"group_n.order", "64"},            {"psi_tt.order", "288"},
        {"psi_ii.order", "7200"},           {"schur_s6_4dim.order", "1440"},
        {"schur_a7_8dim.order", "5040"},    {"sl2_f7_8dim.order", "336"},
        {"st32.order", "155520"},           {"st32_sl4.order", "51840"},
        {"a7_projective.scalar_quotient", "2520"}};
    for (const auto& [id, n] : orders) v.check(id, n);
    v.within({"catalog"}, 600);
    emit(1, "group orders by closure", v);
  }
  {
    Verdict v;
    v.check("igusa.degree4_dim", "5");
    v.check("igusa.degree4_span");
    v.check("igusa.relation_degree12_unique", "1");
    v.check("igusa.relation_matches");
    v.check("igusa.substitution_identity");
    v.check("igusa.molien_spanning");
    v.within({"igusa"}, 60);
    emit(2, "invariants of N and the quartic relation", v);
  }
  {
    Verdict v;
    v.suite_passes("reflections");
    v.check("reflections.st32.reflections", "80");
    v.check("reflections.a5_pm_e_3dim.reflections", "15");
    v.check("reflections.klein_pm_e_3dim.reflections", "21");
    for (const char* g : {"st32", "a5_pm_e_3dim", "klein_pm_e_3dim"}) {
      for (const char* k : {"molien", "degree_product", "reflection_generated"}) {
        v.check(std::string("reflections.") + g + "." + k);
      }
    }
    v.within({"reflections"}, 600);
    emit(3, "Shephard-Todd degrees of the three reflection groups", v);
  }
  {
    Verdict v;
    v.check("invariants.s5_molien", "[1, 0, 1, 1, 2, 2, 3, 3, 5, 5, 7, 7, 10, 10, 13, 14, 17, 18, 22, 23, 28]");
    emit(4, "standard S5 Molien series", v);
  }
  {
    Verdict v;
    v.check("invariants.quotient_s6", "[1, 0, 1, 0, 2, 1, 3, 1, 4, 2, 6]");
    v.check("invariants.quotient_s5_transitive", "[1, 1, 2, 2, 4, 5, 7, 8, 11]");
    v.within({"invariants"}, 120);
    emit(5, "quotient Hilbert dimensions", v);
  }
  {
    Verdict v;
    v.suite_passes("segre");
    v.check("segre.nodes", "10");
    v.check("segre.planes", "15");
    v.check("segre.nodes_per_plane", "4");
    v.check("segre.planes_per_node", "6");
    v.check("segre.node_stabilizer", "72");
    v.check("segre.plane_stabilizer", "48");
    v.check("segre.incidence_criteria", "0");
    v.check("segre.sylow3_equivariant");
    v.check("segre.lambda_outer", "2,2,2");
    v.check("segre.s5_standard_orbits", "15");
    v.check("segre.s5_transitive_orbits", "10,5");
    v.check("segre.small_orbit_nodes");
    v.check("segre.pencil_base_nodes");
    v.within({"segre"}, 60);
    emit(6, "Segre cubic geometry", v);
  }
  {
    Verdict v;
    v.check("igusa.s_action", "(1,1,-1,-1,1)");
    v.check("igusa.line_on_quartic");
    v.check("igusa.line_singular");
    v.check("igusa.pencil_unique", "1");
    emit(7, "Igusa quartic: S action, singular line, pencil", v);
  }
  {
    Verdict v;
    v.suite_passes("schur");
    v.check("a7_projective.s7_scalar");
    v.check("a7_projective.w3_scalar");
    v.check("a7_projective.correspondence");
    v.within({"schur"}, 60);
    emit(8, "Schur cover relations and the A7 generators", v);
  }
  {
    Verdict v;
    v.suite_passes("monomial");
    v.check("monomial.pi0_theta", "[[0,1,0],[0,0,1],[1,0,0]]");
    v.check("monomial.pi0_delta", "[[0,1,-1],[1,0,-1],[0,0,-1]]");
    v.check("monomial.gamma_presentations");
    v.check("monomial.a4_lattice_stable");
    v.check("monomial.a4_indices_agree");
    v.check("monomial.a4_traces");
    v.check("monomial.gamma9_bplus.theta_linear");
    v.check("monomial.gamma9_bplus.delta_linear");
    v.check("monomial.gamma9_bminus.order", "24");
    v.check("monomial.gamma9_bminus.split_faithful");
    v.within({"monomial"}, 60);
    emit(9, "monomial reduction and the Gamma9 cases", v);
  }
  {
    Verdict v;
    v.suite_passes("binaryforms");
    v.check("binaryforms.tetrahedral_character", "3");
    v.check("binaryforms.octahedral_character", "2");
    v.check("binaryforms.icosahedral_character", "1");
    v.check("binaryforms.quartic_self_pairing", "0");
    v.check("binaryforms.pairing_invariant", "0");
    v.within({"binaryforms"}, 30);
    emit(10, "binary forms: characters and the pairing", v);
  }
  {
    Verdict v;
    const std::string first = format_reports(ordered);
    std::ostringstream out, err;
    const auto t0 = std::chrono::steady_clock::now();
    const int code = run({"verify", "all"}, out, err);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    v.require(strip_timing(first) == strip_timing(out.str()), "reports differ outside timing fields");
    v.require(code == (reports_pass(ordered) ? kExitPass : kExitFail), "exit code does not match the report");
    double first_wall = 0;
    for (const auto& [n, r] : runs) first_wall += r.wall;
    std::ostringstream os;
    os << "two runs took " << first_wall + wall << " s, limit 900 s";
    v.require(first_wall + wall <= 900, os.str());
    emit(11, "determinism of verify all", v);
  }

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << "\n";
  return failures == 0 ? 0 : 1;
}
