#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "finvar/binaryforms.hpp"
#include "finvar/groupfile.hpp"
#include "finvar/igusa.hpp"
#include "finvar/invariants.hpp"
#include "finvar/monomial.hpp"
#include "finvar/segre.hpp"

namespace finvar::cli {
namespace {

constexpr int kReportVersion = 1;

std::string join_ints(const std::vector<int>& v) {
  std::string r;
  for (int x : v) r += (r.empty() ? "" : ",") + std::to_string(x);
  return r;
}

std::string one_line(const std::string& s) {
  std::string r;
  for (char c : s) r += c == '\n' ? std::string("\\n") : std::string(1, c);
  return r;
}

void append(std::vector<Check>& out, std::vector<Check> more) {
  for (auto& c : more) out.push_back(std::move(c));
}

void prefix_ids(std::vector<Check>& checks, const std::string& prefix) {
  for (auto& c : checks) c.id = prefix + c.id;
}

Report catalog_suite(const RunOptions& opts) {
  Report r{"catalog", {}, {}};
  for (const auto& info : catalog_index()) append(r.checks, build_catalog_entry(info.name, opts.catalog).checks);
  return r;
}

std::vector<SparsePoly> s1_s3() { return {SparsePoly::power_sum(6, 1), SparsePoly::power_sum(6, 3)}; }

std::string quotient_dims(const MatGroup& g, int bound) {
  std::ostringstream os;
  os << "[";
  for (int d = 0; d <= bound; ++d) os << (d ? ", " : "") << quotient_invariant_dims(g, s1_s3(), d);
  os << "]";
  return os.str();
}

MatGroup perm_matrix_group(const std::vector<Perm>& perms, const CatalogOptions& opts) {
  std::vector<Mat> gens;
  for (const auto& p : perms) gens.push_back(permutation_matrix(p));
  ClosureOptions co;
  co.cap = opts.cap;
  co.jobs = opts.jobs;
  return MatGroup::closure(gens, co);
}

Report invariants_suite(const RunOptions& opts) {
  Report r{"invariants", {}, {}};
  CheckRecorder rec;
  const CatalogEntry s5 = standard_s5_4dim(opts.catalog);
  rec.push(make_check("invariants.s5_molien", "standard S5 Molien series to degree 20",
                      TruncSeries::weighted_hilbert({2, 3, 4, 5}, 20).str(),
                      molien(s5.group, 20, opts.catalog.jobs).str()));

  const CatalogEntry s6 = s6_perm_6dim(opts.catalog);
  rec.push(make_check("invariants.quotient_s6", "S6 invariants of C[x1..x6]/(s1,s3), degrees 0..10",
                      TruncSeries::weighted_hilbert({2, 4, 5, 6}, 10).str(), quotient_dims(s6.group, 10)));

  const std::string s5_series = TruncSeries::weighted_hilbert({1, 2, 4, 5}, 8).str();
  const MatGroup transitive = perm_matrix_group(outer_automorphism().transitive_s5, opts.catalog);
  rec.push(make_check("invariants.quotient_s5_transitive",
                      "transitive S5 invariants of C[x1..x6]/(s1,s3), degrees 0..8", s5_series,
                      quotient_dims(transitive, 8)));
  const MatGroup fixing = perm_matrix_group(standard_s5(), opts.catalog);
  rec.push(make_check("invariants.quotient_s5_fixing_point",
                      "S5 fixing x6: invariants of C[x1..x6]/(s1,s3), degrees 0..8", s5_series,
                      quotient_dims(fixing, 8)));
  r.checks = rec.take();
  r.notes.push_back(
      "a transitive S5 fixes no coordinate, so it has no degree-1 invariant modulo s1; the series with a degree-1 "
      "generator is the one of the S5 fixing x6");
  return r;
}

Report reflections_suite(const RunOptions& opts) {
  Report r{"reflections", {}, {}};
  const std::map<std::string, std::pair<int, std::size_t>> targets{
      {"st32", {40, 80}}, {"a5_pm_e_3dim", {24, 15}}, {"klein_pm_e_3dim", {24, 21}}};
  for (const auto& e : reflection_groups_3d_4d(opts.catalog)) {
    auto it = targets.find(e.name);
    if (it == targets.end()) continue;
    const auto [bound, reflections] = it->second;
    const auto degrees = reflection_degrees(e.name);
    const auto t0 = std::chrono::steady_clock::now();
    StDegreeReport rep = verify_st_degrees(e.group, degrees, bound, opts.catalog.jobs);
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!rep.checks.empty()) rep.checks.front().seconds += elapsed;
    const std::string p = "reflections." + e.name + ".";
    prefix_ids(rep.checks, p);
    append(r.checks, std::move(rep.checks));
    Check count = make_check(p + "reflections", "number of reflections", std::to_string(reflections),
                             std::to_string(rep.reflections));
    r.checks.push_back(count);
    r.notes.push_back(e.name + " degrees " + join_ints(degrees));
  }
  return r;
}

Report igusa_suite(const RunOptions& opts) {
  IgusaOptions io;
  io.catalog = opts.catalog;
  return {"igusa", igusa_checks(io), {}};
}

Report segre_suite(const RunOptions&) {
  return {"segre",
          segre_checks(),
          {std::string("the printed node label ") + kMisprintedNodeLabel +
           " is read as <123|456> = (1,1,1,-1,-1,-1)"}};
}

Report schur_suite(const RunOptions& opts) {
  Report r{"schur", {}, {}};
  append(r.checks, schur_cover(SchurKind::S6_4dim, opts.catalog).entry.checks);
  append(r.checks, schur_cover(SchurKind::A7_8dim, opts.catalog).entry.checks);
  append(r.checks, a7_projective_generators(opts.catalog).entry.checks);
  return r;
}

Report monomial_suite(const RunOptions& opts) { return {"monomial", monomial_checks(opts.entry_bound), {}}; }

Report binaryforms_suite(const RunOptions&) { return {"binaryforms", binaryforms_checks(), {}}; }

using SuiteFn = Report (*)(const RunOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> s{
      {"catalog", catalog_suite}, {"invariants", invariants_suite}, {"reflections", reflections_suite},
      {"igusa", igusa_suite},     {"segre", segre_suite},           {"schur", schur_suite},
      {"monomial", monomial_suite}, {"binaryforms", binaryforms_suite}};
  return s;
}

Report run_guarded(const std::string& name, SuiteFn fn, const RunOptions& opts) {
  try {
    return fn(opts);
  } catch (const std::exception& e) {
    Report r{name, {}, {}};
    r.checks.push_back(make_check(name + ".completed", "suite ran to completion", "true", one_line(e.what())));
    return r;
  }
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

std::string vec_str(const Vec& v) {
  std::string r = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    r += (i ? "," : "") + (v[i].is_rational() ? v[i].to_rational().str() : v[i].str());
  }
  return r + ")";
}

int verify_cmd(const std::string& suite, const RunOptions& opts, const std::string& output, bool table,
               std::ostream& out, std::ostream& err) {
  const auto reports = run_suite(suite, opts);
  write_text(output, format_reports(reports), out);
  if (table) err << summary_table(reports);
  return reports_pass(reports) ? kExitPass : kExitFail;
}

int molien_cmd(const std::string& file, int degree, const RunOptions& opts, std::ostream& out) {
  const GroupFile gf = read_group_file(file);
  ClosureOptions co;
  co.cap = opts.catalog.cap;
  co.jobs = opts.catalog.jobs;
  const MatGroup g = MatGroup::closure(gf.generators, co);
  out << molien(g, degree, opts.catalog.jobs).str() << "\n";
  return kExitPass;
}

int catalog_list(std::ostream& out) {
  for (const auto& info : catalog_index()) {
    out << info.name << " order " << info.expected_order;
    if (info.expected_scalar_quotient) out << " mod_scalars " << info.expected_scalar_quotient;
    out << " : " << info.summary << "\n";
  }
  return kExitPass;
}

CatalogEntry build_named(const std::string& name, const RunOptions& opts) {
  try {
    return build_catalog_entry(name, opts.catalog);
  } catch (const UnknownCatalogName& e) {
    throw UsageError(e.what());
  }
}

int catalog_build(const std::string& name, const RunOptions& opts, std::ostream& out) {
  const CatalogEntry e = build_named(name, opts);
  for (const auto& c : e.checks) {
    if (c.id == name + ".order") out << "order " << c.actual << ": " << status_name(c.status) << "\n";
  }
  for (const auto& c : e.checks) {
    if (c.id == name + ".order") continue;
    out << c.id << ": " << status_name(c.status) << " (expected " << c.expected << ", actual " << c.actual << ")\n";
  }
  return e.ok() ? kExitPass : kExitFail;
}

int catalog_export(const std::string& name, const std::string& path, const RunOptions& opts, std::ostream& out) {
  const CatalogEntry e = build_named(name, opts);
  write_group_file(path, to_group_file(e));
  out << "wrote " << path << "\n";
  return e.ok() ? kExitPass : kExitFail;
}

int monomial_reduce(const std::string& file, const RunOptions& opts, std::ostream& out) {
  const GroupFile gf = read_group_file(file);
  ClosureOptions co;
  co.cap = opts.catalog.cap;
  co.jobs = opts.catalog.jobs;
  const MatGroup g = MatGroup::closure(gf.generators, co);
  for (const auto& m : g.generators()) {
    if (!m.is_monomial()) throw UsageError("generators must be monomial matrices");
  }
  const ImprimitiveReduction r = induced_integer_rep(g);
  out << "finvar-monomial " << kReportVersion << "\n";
  out << "group_order " << g.order() << "\n";
  out << "line_group_order " << r.gamma.size() << "\n";
  out << "kernel_order " << r.a_order << "\n";
  out << "lattice_basis " << int_str(r.lattice.basis) << "\n";
  out << "lattice_index " << r.lattice.index_det << "\n";
  out << "smith_index " << r.lattice.index_smith << "\n";
  out << "character_group_order " << r.lattice.character_group_order << "\n";
  out << "lattice_stable " << (r.lattice_stable ? "true" : "false") << "\n";
  out << "traces_agree " << (r.traces_agree ? "true" : "false") << "\n";
  for (std::size_t i = 0; i < r.pi0.matrices.size(); ++i) {
    out << "pi0 " << r.pi0.generator_names[i] << " " << int_str(r.pi0.matrices[i]) << "\n";
  }
  for (std::size_t i = 0; i < r.pi.matrices.size(); ++i) {
    out << "pi " << r.pi.generator_names[i] << " " << int_str(r.pi.matrices[i]) << "\n";
  }
  bool ok = r.lattice_stable && r.traces_agree && r.lattice.indices_agree();
  const auto a4 = a4_reduction(r, opts.entry_bound);
  if (a4) {
    out << "pi0_theta " << int_str(a4->pi0_theta) << "\n";
    out << "pi0_delta " << int_str(a4->pi0_delta) << "\n";
    out << "pi_theta " << int_str(a4->pi_theta) << "\n";
    out << "pi_delta " << int_str(a4->pi_delta) << "\n";
    out << "a4_presentation " << (a4->pi0_presentation && a4->pi_presentation ? "true" : "false") << "\n";
    out << "classification_pi0 " << a4->pi0_class.label << "\n";
    out << "classification_pi " << a4->pi_class.label << "\n";
    if (a4->pi_class.conjugator) out << "conjugator " << int_str(*a4->pi_class.conjugator) << "\n";
    ok = ok && a4->pi0_presentation && a4->pi_presentation;
  } else {
    out << "classification not_attempted (line group is not A4 on four letters)\n";
  }
  return ok ? kExitPass : kExitFail;
}

int segre_report(const std::string& output, std::ostream& out) {
  std::ostringstream os;
  const SegreGeometry geo = enumerate_geometry();
  const Incidence inc = incidence(geo);
  os << "finvar-segre " << kReportVersion << "\n";
  os << "note the printed node label " << kMisprintedNodeLabel << " is read as <123|456>\n";
  for (std::size_t i = 0; i < geo.nodes.size(); ++i) {
    os << "node " << geo.node_labels[i].str() << " " << vec_str(geo.nodes[i]) << " planes";
    for (int p : inc.planes_through_node[i]) os << " " << geo.plane_labels[p].str();
    os << "\n";
  }
  for (std::size_t i = 0; i < geo.planes.size(); ++i) {
    os << "plane " << geo.plane_labels[i].str() << " nodes";
    for (int n : inc.nodes_on_plane[i]) os << " " << geo.node_labels[n].str();
    os << "\n";
  }
  for (const auto& pr : inc.pairs) {
    os << "pair " << geo.plane_labels[pr.a].str() << " " << geo.plane_labels[pr.b].str() << " "
       << (pr.intersection_dim == 0 ? "point" : pr.intersection_dim == 1 ? "line" : "other")
       << (pr.criteria_hold ? "" : " criteria_violated") << "\n";
  }
  const std::vector<Report> reports{segre_suite({})};
  os << format_reports(reports);
  write_text(output, os.str(), out);
  return reports_pass(reports) ? kExitPass : kExitFail;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : suites()) n.push_back(name);
    return n;
  }();
  return names;
}

std::vector<Report> run_suite(const std::string& name, const RunOptions& opts) {
  std::vector<Report> out;
  for (const auto& [suite, fn] : suites()) {
    if (name == "all" || name == suite) out.push_back(run_guarded(suite, fn, opts));
  }
  if (out.empty()) throw UsageError("unknown suite: " + name);
  return out;
}

std::string format_reports(const std::vector<Report>& reports) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6);
  os << "finvar-report " << kReportVersion << "\n";
  std::size_t pass = 0, fail = 0, skipped = 0;
  double total = 0;
  for (const auto& r : reports) {
    os << "suite " << r.suite << "\n";
    for (const auto& n : r.notes) os << "note " << one_line(n) << "\n";
    std::size_t sp = 0, sf = 0, ss = 0;
    for (const auto& c : r.checks) {
      os << "check " << c.id << "\n"
         << "description " << one_line(c.description) << "\n"
         << "expected " << one_line(c.expected) << "\n"
         << "actual " << one_line(c.actual) << "\n"
         << "status " << status_name(c.status) << "\n"
         << "seconds " << c.seconds << "\n"
         << "end\n";
      total += c.seconds;
      (c.status == Status::Pass ? sp : c.status == Status::Fail ? sf : ss)++;
    }
    os << "summary " << r.suite << " pass " << sp << " fail " << sf << " skipped " << ss << "\n";
    pass += sp;
    fail += sf;
    skipped += ss;
  }
  os << "overall " << (fail == 0 ? "pass" : "fail") << " pass " << pass << " fail " << fail << " skipped " << skipped
     << "\n";
  os << "total_seconds " << total << "\n";
  return os.str();
}

std::string strip_timing(const std::string& report_text) {
  std::istringstream in(report_text);
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.rfind("seconds ", 0) == 0 || line.rfind("total_seconds ", 0) == 0) continue;
    out += line + "\n";
  }
  return out;
}

std::string summary_table(const std::vector<Report>& reports) {
  std::ostringstream os;
  os << std::left << std::setw(14) << "suite" << std::right << std::setw(6) << "pass" << std::setw(6) << "fail"
     << std::setw(10) << "seconds" << "\n";
  os << std::fixed << std::setprecision(2);
  for (const auto& r : reports) {
    std::size_t p = 0, f = 0;
    double s = 0;
    for (const auto& c : r.checks) {
      p += c.status == Status::Pass;
      f += c.status == Status::Fail;
      s += c.seconds;
    }
    os << std::left << std::setw(14) << r.suite << std::right << std::setw(6) << p << std::setw(6) << f
       << std::setw(10) << s << "\n";
    for (const auto& c : r.checks) {
      if (c.status == Status::Fail) os << "  FAIL " << c.id << ": expected " << c.expected << ", got " << c.actual << "\n";
    }
  }
  return os.str();
}

bool reports_pass(const std::vector<Report>& reports) {
  for (const auto& r : reports) {
    if (!all_pass(r.checks)) return false;
  }
  return true;
}

int default_jobs() {
  const char* v = std::getenv(kJobsEnv);
  if (v == nullptr || *v == '\0') return 1;
  try {
    const int j = std::stoi(v);
    return j > 0 ? j : 1;
  } catch (const std::exception&) {
    return 1;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of finite-group invariant computations"};
  app.name("finvar");
  app.require_subcommand(1);
  app.fallthrough();

  RunOptions opts;
  opts.catalog.jobs = default_jobs();
  std::size_t cap = opts.catalog.cap;
  app.add_option("--cap", cap, "maximum group order during closure")->capture_default_str();
  app.add_option("--jobs", opts.catalog.jobs, std::string("worker threads (default from ") + kJobsEnv + ")")
      ->check(CLI::PositiveNumber);
  app.add_option("--bound", opts.entry_bound, "entry bound for the GL(3,Z) conjugator search")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  std::string suite, output;
  bool table = false;
  auto* verify = app.add_subcommand("verify", "run a verification suite and print its report");
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_choices));
  verify->add_option("-o,--output", output, "write the report to a file");
  verify->add_flag("--table", table, "print a summary table to standard error");

  std::string file;
  int degree = 0;
  auto* molien_sc = app.add_subcommand("molien", "truncated Molien series of a group file");
  molien_sc->add_option("file", file, "group file")->required();
  molien_sc->add_option("--degree", degree, "last degree")->required()->check(CLI::NonNegativeNumber);

  std::string name, path;
  auto* catalog = app.add_subcommand("catalog", "catalog groups");
  catalog->require_subcommand(1);
  auto* cat_list = catalog->add_subcommand("list", "list catalog entries");
  auto* cat_build = catalog->add_subcommand("build", "build an entry and check its metadata");
  cat_build->add_option("name", name)->required();
  auto* cat_export = catalog->add_subcommand("export", "write an entry as a group file");
  cat_export->add_option("name", name)->required();
  cat_export->add_option("path", path)->required();

  auto* monomial = app.add_subcommand("monomial", "monomial group reduction");
  monomial->require_subcommand(1);
  auto* reduce = monomial->add_subcommand("reduce", "lattice, integer representations and classification");
  reduce->add_option("file", file, "group file")->required();

  auto* segre = app.add_subcommand("segre", "Segre cubic geometry");
  segre->require_subcommand(1);
  auto* segre_rep = segre->add_subcommand("report", "incidence structure and checks");
  segre_rep->add_option("-o,--output", output, "write the report to a file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }
  opts.catalog.cap = cap;

  try {
    if (verify->parsed()) return verify_cmd(suite, opts, output, table, out, err);
    if (molien_sc->parsed()) return molien_cmd(file, degree, opts, out);
    if (cat_list->parsed()) return catalog_list(out);
    if (cat_build->parsed()) return catalog_build(name, opts, out);
    if (cat_export->parsed()) return catalog_export(name, path, opts, out);
    if (reduce->parsed()) return monomial_reduce(file, opts, out);
    if (segre_rep->parsed()) return segre_report(output, out);
  } catch (const GroupFileError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace finvar::cli
