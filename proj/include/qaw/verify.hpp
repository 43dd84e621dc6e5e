#pragma once

// Named verification suites.  Each suite checks one family of identities
// against an independent evaluation (exact rationals, quadrature, or a
// second evaluation mode) and reports one row per check.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qaw/parallel.hpp"

namespace qaw {

struct CheckResult {
  std::string label;
  double residual = 0.0;
  double tol = 0.0;  // 0 for exact checks
  bool passed = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::size_t failures() const;
  double max_residual() const;
};

struct VerifyOptions {
  std::vector<double> qs;  // empty: the suite's own q sweep
  std::uint64_t seed = 20240917;
  std::size_t draws = 0;   // 0: the suite's default number of random draws
  ExecPolicy policy = ExecPolicy::Parallel;
};

struct SuiteInfo {
  const char* name;
  const char* summary;
};

const std::vector<SuiteInfo>& suite_catalog();

/// Throws DomainError for an unknown suite name.
SuiteReport run_suite(std::string_view name, const VerifyOptions& opts = {});

std::vector<SuiteReport> run_all(const VerifyOptions& opts = {});

}  // namespace qaw
