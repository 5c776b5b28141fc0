#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "finvar/catalog.hpp"
#include "finvar/report.hpp"

namespace finvar::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kJobsEnv = "FINVAR_JOBS";

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  std::vector<std::string> notes;
};

struct RunOptions {
  CatalogOptions catalog;
  int entry_bound = 2;  // GL(3,Z) conjugator search
};

// catalog, invariants, reflections, igusa, segre, schur, monomial, binaryforms.
const std::vector<std::string>& suite_names();

// `all` expands to every suite in order; unknown names throw UsageError.
std::vector<Report> run_suite(const std::string& name, const RunOptions& opts);

// Versioned key-value text; lines whose key is `seconds` or `total_seconds` carry timing.
std::string format_reports(const std::vector<Report>& reports);
std::string strip_timing(const std::string& report_text);
std::string summary_table(const std::vector<Report>& reports);
bool reports_pass(const std::vector<Report>& reports);

// Job count from the environment, or 1.
int default_jobs();

// Full command line (without the program name); returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace finvar::cli
