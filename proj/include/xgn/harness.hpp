#pragma once
// Verification suites over a configuration, shared by the command line tool
// and the acceptance runner, with JSON reports.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "xgn/intertwine.hpp"

namespace xgn::harness {

using liealg::Case;
using yangian::Realization;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SuiteConfig {
  Case kind = Case::Orth;
  int m = 1, n = 2, l = 0;
  int K = 12;
  std::vector<BigRat> generic = {rat(5, 7), rat(2, 11), rat(3, 13), rat(7, 17), rat(4, 19)};
  std::vector<std::string> suites;
  bool inject_fault = false;
  int threads = 1;
};

const std::vector<std::string>& suite_names();
// throws UsageError on guard violations
void validate(const SuiteConfig& cfg);

struct CheckResult {
  std::string suite, name, anchor;
  bool pass = false;
  bool faulted = false;  // received the injected perturbation
  std::string detail;
};

struct CheckItem {
  std::string name, anchor;
  bool fault_target = false;
  std::function<bool(bool fault, std::string& detail)> run;
};

std::vector<CheckItem> suite_items(const std::string& suite, const SuiteConfig& cfg);
// items run in a pool of cfg.threads workers; results keep declaration order
std::vector<CheckResult> run_suite(const std::string& suite, const SuiteConfig& cfg);
std::vector<CheckResult> run_all(const SuiteConfig& cfg);
bool all_pass(const std::vector<CheckResult>& r);
std::string report_json(const SuiteConfig& cfg, const std::vector<CheckResult>& r);

// adds u^{-1} e_{0, d-1} to the (0, n-1) entry
Realization perturbed(const Realization& X);

}  // namespace xgn::harness
