// Copyright 2026 The Authors.
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

// Recovering priority structures from observed choice tables.
//
// Every extractor re-materializes its output and compares it with the input
// on all problems before returning, so a table that does not satisfy the
// extractor's preconditions yields a failure rather than a wrong answer.

#ifndef LEXCHOICE_IDENTIFY_H_
#define LEXCHOICE_IDENTIFY_H_

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lexchoice/core.h"
#include "lexchoice/rules.h"

namespace lexchoice {

struct ExtractionFailure {
  // Construction step that went wrong, e.g. "ordering 2, position 3".
  std::string step;
  std::string message;
  // The problem whose observed choice contradicts the construction, if any.
  std::optional<Problem> problem;
};

template <typename T>
class Extraction {
 public:
  Extraction(T value) : result_(std::move(value)) {}  // NOLINT(runtime/explicit)
  Extraction(ExtractionFailure failure) : result_(std::move(failure)) {}  // NOLINT

  bool ok() const { return std::holds_alternative<T>(result_); }
  explicit operator bool() const { return ok(); }
  const T& value() const { return std::get<T>(result_); }
  const T& operator*() const { return value(); }
  const T* operator->() const { return &value(); }
  const ExtractionFailure& failure() const { return std::get<ExtractionFailure>(result_); }

 private:
  std::variant<T, ExtractionFailure> result_;
};

// A_1 = A and A_t = A ∖ C(A,t-1) for t = 2..n.
struct ResidualSets {
  std::vector<ChoiceSet> sets;

  ChoiceSet operator[](int t) const { return sets.at(t - 1); }
};

// Throws Error if C(A,t) violates capacity-filling for some t.
ResidualSets residual_sets(const ChoiceTable& c);

Extraction<PriorityProfile> extract_lex_profile(const ChoiceTable& c);

// Throws Error unless c is the materialization of Lexicographic(p1).
bool profiles_equivalent(const ChoiceTable& c, const PriorityProfile& p1,
                         const PriorityProfile& p2);

Extraction<PriorityOrdering> extract_responsive(const ChoiceTable& c);

// One ordering per capacity q such that C(S,q) is the top min(|S|,q) of S.
Extraction<std::vector<PriorityOrdering>> extract_capacity_wise_responsive(const ChoiceTable& c);

// First problem (in enumeration order) where two tables disagree.
std::optional<Problem> first_mismatch(const ChoiceTable& expected, const ChoiceTable& actual);

}  // namespace lexchoice

#endif  // LEXCHOICE_IDENTIFY_H_
