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

#include "lexchoice/core.h"

#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace lexchoice {

ChoiceSet ChoiceSet::FromMembers(const std::vector<Alternative>& members) {
  ChoiceSet s;
  for (Alternative a : members) {
    if (a < 0 || a >= kMaxAlternatives) throw Error("alternative index out of range");
    s = s.with(a);
  }
  return s;
}

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw Error("universe must contain at least one alternative");
  if (labels_.size() > static_cast<std::size_t>(kMaxAlternatives)) {
    throw Error("universe has " + std::to_string(labels_.size()) +
                " alternatives; at most " + std::to_string(kMaxAlternatives) +
                " are supported");
  }
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw Error("duplicate alternative label '" + l + "'");
  }
}

std::optional<Alternative> Universe::find(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

Alternative Universe::index_of(std::string_view label) const {
  auto a = find(label);
  if (!a) throw Error("unknown alternative '" + std::string(label) + "'");
  return *a;
}

ChoiceSet Universe::set_of(const std::vector<std::string>& labels) const {
  ChoiceSet s;
  for (const auto& l : labels) s = s.with(index_of(l));
  return s;
}

std::string Universe::format(ChoiceSet s) const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Alternative a : s) {
    if (!first) out << ',';
    out << label(a);
    first = false;
  }
  out << '}';
  return out.str();
}

std::string Universe::format(const Problem& p) const {
  return "(" + format(p.set) + "," + std::to_string(p.capacity) + ")";
}

Universe make_universe(std::vector<std::string> labels) { return Universe(std::move(labels)); }

Universe letters(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return Universe(std::move(labels));
}

ProblemSpace enumerate_problems(const Universe& u) { return ProblemSpace(u.size()); }

}  // namespace lexchoice
