#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ysym/json_io.hpp"

namespace ysym {

struct SweepConfig {
  std::optional<int> max_n;  // unset: YSYM_MAX_N, then the per-suite default
  std::vector<std::string> suites;
  int jobs = 1;
  std::string out;  // JSON report path, empty for none
};

struct CaseResult {
  std::string label;
  bool pass = false;
  std::optional<bool> integral;  // thm11 only
  Json detail;                   // filled on failure
};

struct SuiteResult {
  std::string name;
  int max_n = 0;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double seconds = 0;
  std::vector<CaseResult> failed;
  Json extra = Json::object();
};

struct SweepReport {
  std::vector<SuiteResult> suites;

  bool all_pass() const;
  Json to_json() const;
};

using SweepCase = std::function<CaseResult()>;

/// idempotence, garnir, thm12, thm11, section4, shuffling, certificates, dn.
const std::vector<std::string>& suite_names();
int default_max_n(const std::string& suite);
/// --max-n, else YSYM_MAX_N, else the suite default.
int resolve_max_n(const std::string& suite, std::optional<int> requested);

std::vector<SweepCase> build_suite(const std::string& suite, int max_n);
SuiteResult run_suite(const std::string& suite, int max_n, int jobs);
SweepReport run_sweep(const SweepConfig& config);

/// Every bijective filling of lambda with 1..n.
std::vector<Filling> all_fillings(const Partition& lambda);
/// Every bijective filling F of lambda with F^-1([k]) a Young diagram.
std::vector<Filling> split_fillings(const Partition& lambda, int k);

}  // namespace ysym
