// SPDX-License-Identifier: Apache-2.0
//
// Executable registry of the classification results: each id builds its
// witness families, runs geometry and the classifier, and compares against
// the expected facts.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rotsurf/classifier.hpp"

namespace rotsurf {

struct Fact {
  std::string name;
  std::string expected;
  std::string measured;
  bool passed = false;
};

struct TheoremCheck {
  std::string id;
  std::string statement;
  std::vector<std::string> witnesses;
  std::vector<Fact> facts;
  bool passed = false;
};

struct VerifyOptions {
  Perturbation perturbation;  // applied to every closed-form table
  std::uint64_t seed = 1;     // sample points for the path comparison
  int grid_n = 11;
};

struct TheoremInfo {
  std::string id;
  std::string statement;
};

const std::vector<TheoremInfo>& theorem_registry();

/// Throws UsageError for an unknown id.
TheoremCheck run_theorem_check(const std::string& id, const VerifyOptions& opt = {});

std::vector<TheoremCheck> run_all_checks(const VerifyOptions& opt = {});

}  // namespace rotsurf
