#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace xell {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Status { Pass, Fail, Skip };
std::string to_string(Status s);
Status parse_status(const std::string& s);

struct Check {
  std::string name;
  Status status = Status::Skip;
  bool exact_zero = false;          // serialized as residual "exact-zero"
  std::optional<double> residual;   // numeric residual, if any
  std::string detail;

  bool operator==(const Check&) const = default;
};

/// Exact check: passes iff the residual polynomial is zero.  `magnitude` and
/// `text` describe a nonzero residual.
Check exact_check(std::string name, bool is_zero, double magnitude = 0.0, std::string text = {});
/// Numeric check: passes iff value < bound.
Check bound_check(std::string name, double value, double bound, std::string detail = {});
/// Passes iff ok; no residual.
Check predicate_check(std::string name, bool ok, std::string detail = {});

struct Report {
  std::string command;
  std::map<std::string, std::string> inputs;
  std::vector<Check> checks;
  std::string tool_version = kToolVersion;
  long long elapsed_ms = 0;
  std::optional<std::string> error;  // usage or constraint error, exit 2
  nlohmann::json data;               // command-specific payload (tables, coefficients)

  [[nodiscard]] bool all_pass() const;
  /// 0 all pass, 1 a check failed, 2 error.
  [[nodiscard]] int exit_code() const;
};

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

/// Short human-readable summary (counts, then failing checks).
std::string summary(const Report& r);

/// One unit of independent work producing one or more checks.
struct Task {
  std::string name;
  std::function<std::vector<Check>()> run;
};

/// Runs tasks on `jobs` threads.  Exceptions inside a task become a failed
/// check named after the task.  The result is sorted by check name.
std::vector<Check> run_tasks(const std::vector<Task>& tasks, int jobs);

/// XELL_JOBS if set and positive, else the number of logical cores.
int default_jobs();

/// Marks every check whose name contains `pattern` as failed.
void inject_failure(std::vector<Check>& checks, const std::string& pattern);

}  // namespace xell
