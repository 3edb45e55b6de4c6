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

// JSON documents for rules, choice structures, allocation problems and
// witnesses.
//
// Sets are arrays of labels sorted by label; orderings are arrays of labels
// best first. Objects are emitted with sorted keys, so dumping a parsed
// document yields a canonical form.

#ifndef LEXCHOICE_CLI_IO_H_
#define LEXCHOICE_CLI_IO_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lexchoice/axioms.h"
#include "lexchoice/core.h"
#include "lexchoice/feasibility.h"
#include "lexchoice/mechanism.h"
#include "lexchoice/rules.h"

namespace lexchoice::cli {

using Json = nlohmann::json;

// Malformed or invalid input; the message carries a line:column or a JSON
// path locating the problem.
class InputError : public Error {
 public:
  using Error::Error;
};

// Parses JSON text; syntax errors become InputError("source:line:col: ...").
Json parse_json(const std::string& text, std::string_view source);

// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

// Hex SHA-256 of the bytes of `text`.
std::string sha256_hex(const std::string& text);

enum class RuleKind {
  kLexicographic,
  kResponsive,
  kCapacityWise,
  kTable,
  kBostonWalkOpen,
  kBostonOpenWalk,
  kBostonRotating,
  kBostonCompromise,
  kFlex,
};

std::string_view kind_name(RuleKind k);
std::optional<RuleKind> kind_from_name(std::string_view name);
bool is_boston(RuleKind k);

struct RuleSpec {
  Universe universe;
  RuleKind kind;
  std::optional<PriorityProfile> profile;    // lexicographic, flex
  std::optional<PriorityOrdering> ordering;  // responsive
  std::optional<CapacityWiseLists> lists;    // capacity_wise
  std::optional<ChoiceTable> table;          // table
  std::optional<PriorityOrdering> walk;      // boston:*
  std::optional<PriorityOrdering> open;      // boston:*
  std::optional<FeasibilityFamily> family;   // flex; optional for table

  bool constrained() const { return family.has_value(); }
};

// `agents`, when given, supplies the universe and forbids a conflicting
// "universe" field. `path` prefixes diagnostics.
RuleSpec parse_rule(const Json& j, const std::optional<Universe>& agents = std::nullopt,
                    const std::string& path = "");
Json to_json(const RuleSpec& spec);

// Per-capacity lists for capacity-wise and Boston rules.
std::optional<CapacityWiseLists> lists_of(const RuleSpec& spec);
ChoiceTable materialize_spec(const RuleSpec& spec, RunOptions opts = {});
// Requires spec.constrained().
FChoiceTable materialize_constrained(const RuleSpec& spec, RunOptions opts = {});

Json set_json(const Universe& u, ChoiceSet s);
Json ordering_json(const Universe& u, const PriorityOrdering& o);
Json profile_json(const Universe& u, const PriorityProfile& p);
Json problem_json(const Universe& u, const Problem& p);
ChoiceSet parse_set(const Universe& u, const Json& j, const std::string& path);
PriorityOrdering parse_ordering(const Universe& u, const Json& j, const std::string& path);

// {"problems": [{"S", "q", "C"}...], "alternatives": [...], "capacity": q}.
Json witness_json(const ChoiceTable& c, const Witness& w);
Witness parse_witness(const Universe& u, const Json& j, const std::string& path);

// {"agents": [...], "objects": [...], "rule": RULE} or "rules": {object: RULE}.
ChoiceStructure parse_structure(const Json& j);
// {"R": {agent: [objects best first]}, "q": {object: capacity}}. Partial
// rankings are completed by ∅ and then the unlisted objects.
AllocationProblem parse_problem(const Json& j, const ChoiceStructure& cs,
                                const std::string& path = "");
Json problem_json(const ChoiceStructure& cs, const AllocationProblem& p);
Json allocation_json(const ChoiceStructure& cs, const Allocation& a);
Json mechanism_witness_json(const ChoiceStructure& cs, const MechanismWitness& w);

}  // namespace lexchoice::cli

#endif  // LEXCHOICE_CLI_IO_H_
