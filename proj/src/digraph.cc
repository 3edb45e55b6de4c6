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

#include "lexchoice/digraph.h"

#include <algorithm>
#include <optional>
#include <vector>

namespace lexchoice {

Digraph transitive_closure(Digraph g) {
  const int n = static_cast<int>(g.size());
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (g[i].contains(k)) g[i] |= g[k];
    }
  }
  return g;
}

std::optional<std::vector<Alternative>> linear_extension(const Digraph& g) {
  const int n = static_cast<int>(g.size());
  std::vector<int> indegree(n, 0);
  for (int a = 0; a < n; ++a) {
    for (Alternative b : g[a]) ++indegree[b];
  }
  std::vector<Alternative> order;
  std::vector<bool> placed(n, false);
  for (int step = 0; step < n; ++step) {
    Alternative next = -1;
    for (int a = 0; a < n; ++a) {
      if (!placed[a] && indegree[a] == 0) {
        next = a;
        break;
      }
    }
    if (next < 0) return std::nullopt;
    placed[next] = true;
    order.push_back(next);
    for (Alternative b : g[next]) --indegree[b];
  }
  return order;
}

std::vector<Alternative> find_cycle(const Digraph& g) {
  const int n = static_cast<int>(g.size());
  enum class Mark { kNew, kActive, kDone };
  std::vector<Mark> mark(n, Mark::kNew);
  std::vector<Alternative> path;
  // Explicit stack of (vertex, successors still to visit).
  std::vector<std::pair<Alternative, ChoiceSet>> stack;
  for (int root = 0; root < n; ++root) {
    if (mark[root] != Mark::kNew) continue;
    stack.emplace_back(root, g[root]);
    mark[root] = Mark::kActive;
    path.push_back(root);
    while (!stack.empty()) {
      auto& [v, rest] = stack.back();
      if (rest.empty()) {
        mark[v] = Mark::kDone;
        path.pop_back();
        stack.pop_back();
        continue;
      }
      const Alternative w = rest.first();
      rest = rest.without(w);
      if (mark[w] == Mark::kActive) {
        auto from = std::find(path.begin(), path.end(), w);
        return {from, path.end()};
      }
      if (mark[w] == Mark::kNew) {
        mark[w] = Mark::kActive;
        path.push_back(w);
        stack.emplace_back(w, g[w]);
      }
    }
  }
  return {};
}

}  // namespace lexchoice
