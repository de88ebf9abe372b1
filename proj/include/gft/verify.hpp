#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gft/oracle.hpp"

namespace gft {

struct VerifyOptions {
  OracleConfig oracle;
  std::uint64_t seed = 42;
  std::vector<TargetClass> classes{kAllClasses.begin(), kAllClasses.end()};
  /// Added to every closed-form radius before it is checked. Zero in normal runs.
  double radius_fault = 0.0;
};

struct CheckGroup {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::string detail;
  bool ok() const noexcept { return failed == 0; }
};

struct VerifyReport {
  std::vector<CheckGroup> groups;
  /// Findings that are reported but are not failures (non-monotone containment).
  std::vector<std::string> notes;
  /// Branch audit over 2a+b-2 < 0: one summary line per class plus one line
  /// per disagreeing grid point.
  std::vector<std::string> audit;
  std::size_t failed() const noexcept;
  std::size_t passed() const noexcept;
};

/// Acceptance grid: alpha in {0, 0.1, ..., 1}, beta in {0.25, 0.5, 1, 2, 4},
/// lambda in {0, 0.25, 0.5} for StarlikeOrder only.
std::vector<ClassParams> acceptance_grid(TargetClass c);

/// 21 x 21 grid, alpha = i/20 and beta = 0.01 * 200^(j/20), keeping 2a+b-2 < 0.
std::vector<ClassParams> branch_audit_grid();

/// Lemma consistency and maximality, covering-disc Monte Carlo, root
/// residuals, oracle agreement, sharpness two-sidedness and the branch audit.
VerifyReport run_verification(const VerifyOptions& opt);

}  // namespace gft
