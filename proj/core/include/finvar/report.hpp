#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

namespace finvar {

enum class Status { Pass, Fail, Skipped };

struct Check {
  std::string id;
  std::string description;
  std::string expected;
  std::string actual;
  Status status = Status::Fail;
  double seconds = 0.0;
};

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    default: return "skipped";
  }
}

// Passes iff expected == actual.
inline Check make_check(std::string id, std::string description, std::string expected, std::string actual) {
  Check c{std::move(id), std::move(description), std::move(expected), std::move(actual), Status::Fail, 0.0};
  c.status = c.expected == c.actual ? Status::Pass : Status::Fail;
  return c;
}

inline Check bool_check(std::string id, std::string description, bool ok) {
  return make_check(std::move(id), std::move(description), "true", ok ? "true" : "false");
}

inline bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (c.status == Status::Fail) return false;
  }
  return true;
}

// Appends checks, stamping each with the time elapsed since the previous one.
class CheckRecorder {
 public:
  void push(Check c) {
    const auto now = std::chrono::steady_clock::now();
    c.seconds = std::chrono::duration<double>(now - last_).count();
    checks_.push_back(std::move(c));
    last_ = now;
  }
  void restart() { last_ = std::chrono::steady_clock::now(); }
  std::vector<Check>& checks() { return checks_; }
  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::vector<Check> checks_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace finvar
