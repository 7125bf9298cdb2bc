#include "xell/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace xell {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "fail";
}

Status parse_status(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "skip") return Status::Skip;
  throw std::invalid_argument("unknown status '" + s + "'");
}

Check exact_check(std::string name, bool is_zero, double magnitude, std::string text) {
  Check c;
  c.name = std::move(name);
  c.status = is_zero ? Status::Pass : Status::Fail;
  c.exact_zero = is_zero;
  if (!is_zero) {
    c.residual = magnitude;
    if (text.size() > 240) text = text.substr(0, 240) + "...";
    c.detail = "nonzero residual: " + text;
  }
  return c;
}

Check bound_check(std::string name, double value, double bound, std::string detail) {
  Check c;
  c.name = std::move(name);
  c.status = value < bound ? Status::Pass : Status::Fail;
  c.residual = value;
  std::ostringstream os;
  os.precision(3);
  os << "bound " << bound;
  c.detail = detail.empty() ? os.str() : detail + "; " + os.str();
  return c;
}

Check predicate_check(std::string name, bool ok, std::string detail) {
  Check c;
  c.name = std::move(name);
  c.status = ok ? Status::Pass : Status::Fail;
  c.detail = std::move(detail);
  return c;
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.status == Status::Pass; });
}

int Report::exit_code() const {
  if (error) return 2;
  return all_pass() ? 0 : 1;
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json jc{{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}};
    if (c.exact_zero) jc["residual"] = "exact-zero";
    else if (c.residual) jc["residual"] = *c.residual;
    else jc["residual"] = nullptr;
    checks.push_back(std::move(jc));
  }
  nlohmann::json j{{"command", r.command},
                   {"inputs", r.inputs},
                   {"checks", std::move(checks)},
                   {"tool_version", r.tool_version},
                   {"elapsed_ms", r.elapsed_ms}};
  if (r.error) j["error"] = *r.error;
  if (!r.data.is_null()) j["data"] = r.data;
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs").get<std::map<std::string, std::string>>();
  r.tool_version = j.at("tool_version").get<std::string>();
  r.elapsed_ms = j.at("elapsed_ms").get<long long>();
  for (const auto& jc : j.at("checks")) {
    Check c;
    c.name = jc.at("name").get<std::string>();
    c.status = parse_status(jc.at("status").get<std::string>());
    c.detail = jc.at("detail").get<std::string>();
    const auto& res = jc.at("residual");
    if (res.is_string()) {
      if (res.get<std::string>() != "exact-zero") throw std::invalid_argument("bad residual string");
      c.exact_zero = true;
    } else if (res.is_number()) {
      c.residual = res.get<double>();
    }
    r.checks.push_back(std::move(c));
  }
  if (j.contains("error")) r.error = j.at("error").get<std::string>();
  if (j.contains("data")) r.data = j.at("data");
  return r;
}

std::string summary(const Report& r) {
  std::size_t pass = 0, fail = 0, skip = 0;
  for (const auto& c : r.checks) {
    if (c.status == Status::Pass) ++pass;
    else if (c.status == Status::Fail) ++fail;
    else ++skip;
  }
  std::ostringstream os;
  os << r.command << ": ";
  if (r.error) {
    os << "error: " << *r.error << "\n";
    return os.str();
  }
  os << r.checks.size() << (r.checks.size() == 1 ? " check, " : " checks, ") << pass << " passed, " << fail << " failed";
  if (skip) os << ", " << skip << " skipped";
  os << " (" << r.elapsed_ms << " ms)\n";
  for (const auto& c : r.checks)
    if (c.status == Status::Fail) os << "  FAIL " << c.name << ": " << c.detail << "\n";
  return os.str();
}

std::vector<Check> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<std::vector<Check>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i].run();
      } catch (const std::exception& e) {
        results[i] = {predicate_check(tasks[i].name, false, std::string("exception: ") + e.what())};
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<Check> out;
  for (auto& r : results)
    for (auto& c : r) out.push_back(std::move(c));
  std::stable_sort(out.begin(), out.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
  return out;
}

int default_jobs() {
  if (const char* env = std::getenv("XELL_JOBS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void inject_failure(std::vector<Check>& checks, const std::string& pattern) {
  for (auto& c : checks)
    if (c.name.find(pattern) != std::string::npos) {
      c.status = Status::Fail;
      c.exact_zero = false;
      c.detail += c.detail.empty() ? "injected failure" : "; injected failure";
    }
}

}  // namespace xell
