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

// Relations over a universe as successor bitmasks: edge a -> b iff
// successors[a] contains b.

#ifndef LEXCHOICE_DIGRAPH_H_
#define LEXCHOICE_DIGRAPH_H_

#include <optional>
#include <vector>

#include "lexchoice/core.h"

namespace lexchoice {

using Digraph = std::vector<ChoiceSet>;

Digraph transitive_closure(Digraph g);

// Linear extension with the lowest index first among unconstrained
// alternatives; std::nullopt if g has a cycle.
std::optional<std::vector<Alternative>> linear_extension(const Digraph& g);

// Some cycle a0 -> a1 -> ... -> a0 (listed without repeating a0), found by
// depth-first search from the lowest index; empty if g is acyclic.
std::vector<Alternative> find_cycle(const Digraph& g);

}  // namespace lexchoice

#endif  // LEXCHOICE_DIGRAPH_H_
