// Copyright 2026 the abelos authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ABELOS_CORE_VERIFY_HPP
#define ABELOS_CORE_VERIFY_HPP

#include <string>
#include <vector>

namespace abelos {

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string details;
  double seconds = 0.0;
};

// The oracle/property suite backing `abelos verify`. Suites:
//   "all"          every criterion
//   "lab-only"     only the product-code ground-truth checks
//   "bounds-only"  only the bound-engine checks
std::vector<CriterionResult> run_verify(const std::string& suite = "all");

}  // namespace abelos

#endif
