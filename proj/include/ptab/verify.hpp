#pragma once

#include <string>
#include <vector>

#include "ptab/exec.hpp"

namespace ptab {

struct VerifyCheck {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  bool passed() const;
  // One "PASS|FAIL <id> <description> (<detail>)" line per check. Contains
  // no timings, so repeated runs are byte-identical.
  std::string str() const;
};

// Exhaustive counting, generating-function oracle, rising-factorial
// identity, mean, variance, tree-like mean and PASEP checks.
VerifyReport run_verify(Exec exec = Exec::parallel);

}  // namespace ptab
