// Copyright 2026 The pigame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PIGAME_SELFTEST_HPP
#define PIGAME_SELFTEST_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace pigame {

struct SubCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // observed vs expected when it matters
};

struct CriterionResult {
  int number = 0;
  std::string title;
  std::vector<SubCheck> checks;

  bool passed() const;
};

/// Runs every acceptance criterion against the bundled instances with exact
/// equality throughout. Criteria are independent; a failure in one does not
/// stop the others.
// on_done, when set, is called after each criterion finishes.
std::vector<CriterionResult> run_acceptance_criteria(
    const std::function<void(const CriterionResult&)>& on_done = {});

void print_criterion(const CriterionResult& result, std::ostream& out, bool verbose = false);

/// One PASS/FAIL line per criterion, failing sub-checks indented below it.
/// With verbose set, passing sub-checks are listed as well. Returns true when
/// everything passed.
bool print_acceptance_summary(const std::vector<CriterionResult>& results, std::ostream& out,
                              bool verbose = false);

}  // namespace pigame

#endif  // PIGAME_SELFTEST_HPP
