#pragma once

#include <string>
#include <vector>

#include "partic/oracle.hpp"
#include "partic/word.hpp"

namespace partic {

struct VerifyOptions {
  int n = 4;
  int max_len = 6;
  int max_degree = 6;
  RelationKind relations = RelationKind::partic;
  bool center = false;
};

struct CheckResult {
  std::string name;
  std::string parameters;
  bool passed = true;
  std::string counterexample;  // empty when passed
  double wall_ms = 0.0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;  // sorted by name

  [[nodiscard]] bool passed() const;
};

// Desk-scale certification suite. With the partic relations every check is
// an equality between the rewriting oracle and the normal form; with the
// plactic relations the class checks only test that the normal form is
// constant on plactic classes and that those classes are at least as many as
// the basis monomials.
[[nodiscard]] VerifyReport run_verify(const VerifyOptions& options);

}  // namespace partic
