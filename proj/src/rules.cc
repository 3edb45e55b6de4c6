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

#include "lexchoice/rules.h"

#include <algorithm>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace lexchoice {

PriorityOrdering::PriorityOrdering(std::vector<Alternative> order) : order_(std::move(order)) {
  const int n = static_cast<int>(order_.size());
  if (n < 1 || n > kMaxAlternatives) throw Error("priority ordering has invalid length");
  position_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    Alternative a = order_[i];
    if (a < 0 || a >= n || position_[a] != -1) {
      throw Error("priority ordering is not a permutation of the universe");
    }
    position_[a] = i;
  }
}

PriorityOrdering PriorityOrdering::Identity(int n) {
  std::vector<Alternative> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  return PriorityOrdering(std::move(order));
}

std::vector<Alternative> PriorityOrdering::restricted_to(ChoiceSet s) const {
  std::vector<Alternative> out;
  for (Alternative a : order_) {
    if (s.contains(a)) out.push_back(a);
  }
  return out;
}

PriorityProfile::PriorityProfile(std::vector<PriorityOrdering> orderings)
    : orderings_(std::move(orderings)) {
  if (orderings_.empty()) throw Error("priority profile is empty");
  const int n = orderings_.front().size();
  if (static_cast<int>(orderings_.size()) != n) {
    throw Error("priority profile must contain exactly n = " + std::to_string(n) +
                " orderings, got " + std::to_string(orderings_.size()));
  }
  for (const auto& o : orderings_) {
    if (o.size() != n) throw Error("priority profile mixes universes of different sizes");
  }
}

PriorityProfile PriorityProfile::Constant(const PriorityOrdering& ordering) {
  return PriorityProfile(std::vector<PriorityOrdering>(ordering.size(), ordering));
}

CapacityWiseLists::CapacityWiseLists(std::vector<std::vector<PriorityOrdering>> per_capacity)
    : lists_(std::move(per_capacity)) {
  const int n = static_cast<int>(lists_.size());
  if (n < 1) throw Error("capacity-wise lists are empty");
  for (int q = 1; q <= n; ++q) {
    const auto& list = lists_[q - 1];
    if (static_cast<int>(list.size()) != q) {
      throw Error("list for capacity " + std::to_string(q) + " must have " + std::to_string(q) +
                  " orderings");
    }
    for (const auto& o : list) {
      if (o.size() != n) throw Error("capacity-wise list ordering over wrong universe size");
    }
  }
}

ChoiceTable::ChoiceTable(Universe universe, std::vector<ChoiceSet> entries)
    : universe_(std::move(universe)), entries_(std::move(entries)) {
  if (entries_.size() != universe_.problem_count()) {
    throw Error("choice table is not total: expected " +
                std::to_string(universe_.problem_count()) + " entries, got " +
                std::to_string(entries_.size()));
  }
  for (Problem p : enumerate_problems(universe_)) {
    ChoiceSet c = entries_[universe_.problem_index(p)];
    if (!c.subset_of(p.set)) {
      throw Error("C" + universe_.format(p) + " = " + universe_.format(c) +
                  " is not a subset of the choice set");
    }
    if (c.size() > p.capacity) {
      throw Error("C" + universe_.format(p) + " = " + universe_.format(c) + " exceeds capacity");
    }
  }
}

ChoiceTable ChoiceTable::Tabulate(const Universe& universe,
                                  const std::function<ChoiceSet(const Problem&)>& rule,
                                  RunOptions opts) {
  const int n = universe.size();
  const std::size_t sets = (std::size_t{1} << n) - 1;
  std::vector<ChoiceSet> entries(universe.problem_count());
  parallel_for(sets, opts, [&](std::size_t i) {
    ChoiceSet s(static_cast<ChoiceSet::Bits>(i + 1));
    for (Capacity q = 1; q <= n; ++q) {
      entries[i * static_cast<std::size_t>(n) + static_cast<std::size_t>(q - 1)] = rule({s, q});
    }
  });
  return ChoiceTable(universe, std::move(entries));
}

ChoiceSet ChoiceTable::at(const Problem& p) const {
  if (!universe_.in_domain(p)) throw Error("problem outside the choice table's domain");
  return entries_[universe_.problem_index(p)];
}

ChoiceSet rejected(const ChoiceTable& c, const Problem& p) { return p.set - c.at(p); }

ChoiceSet lexicographic_pass(const std::vector<PriorityOrdering>& list, ChoiceSet s, int steps) {
  ChoiceSet chosen;
  ChoiceSet remaining = s;
  steps = std::min<int>(steps, static_cast<int>(list.size()));
  for (int t = 0; t < steps && !remaining.empty(); ++t) {
    Alternative a = list[t].best(remaining);
    chosen = chosen.with(a);
    remaining = remaining.without(a);
  }
  return chosen;
}

ChoiceSet lex_choose(const PriorityProfile& profile, const Problem& p) {
  return lexicographic_pass(profile.orderings(), p.set, p.capacity);
}

ChoiceSet responsive_choose(const PriorityOrdering& ordering, const Problem& p) {
  ChoiceSet chosen;
  int left = p.capacity;
  for (Alternative a : ordering.order()) {
    if (left == 0) break;
    if (p.set.contains(a)) {
      chosen = chosen.with(a);
      --left;
    }
  }
  return chosen;
}

ChoiceSet cwlex_choose(const CapacityWiseLists& lists, const Problem& p) {
  return lexicographic_pass(lists.for_capacity(p.capacity), p.set, p.capacity);
}

ChoiceSet choose(const ChoiceRule& rule, const Problem& p) {
  struct Visitor {
    const Problem& p;
    ChoiceSet operator()(const PriorityProfile& r) const { return lex_choose(r, p); }
    ChoiceSet operator()(const PriorityOrdering& r) const { return responsive_choose(r, p); }
    ChoiceSet operator()(const CapacityWiseLists& r) const { return cwlex_choose(r, p); }
    ChoiceSet operator()(const ChoiceTable& r) const { return r.at(p); }
  };
  return std::visit(Visitor{p}, rule);
}

namespace {

void check_pair(const PriorityOrdering& w, const PriorityOrdering& o, int n) {
  if (w.size() != n || o.size() != n) {
    throw Error("walk-zone and open orderings must range over the n = " + std::to_string(n) +
                " alternatives");
  }
}

// Concatenates runs of (ordering, count).
std::vector<PriorityOrdering> runs(
    std::initializer_list<std::pair<const PriorityOrdering*, int>> parts) {
  std::vector<PriorityOrdering> out;
  for (const auto& [ord, count] : parts) {
    for (int i = 0; i < count; ++i) out.push_back(*ord);
  }
  return out;
}

}  // namespace

CapacityWiseLists build_walk_open(const PriorityOrdering& w, const PriorityOrdering& o, int n) {
  check_pair(w, o, n);
  std::vector<std::vector<PriorityOrdering>> lists;
  for (int q = 1; q <= n; ++q) lists.push_back(runs({{&w, (q + 1) / 2}, {&o, q / 2}}));
  return CapacityWiseLists(std::move(lists));
}

CapacityWiseLists build_open_walk(const PriorityOrdering& w, const PriorityOrdering& o, int n) {
  check_pair(w, o, n);
  std::vector<std::vector<PriorityOrdering>> lists;
  for (int q = 1; q <= n; ++q) lists.push_back(runs({{&o, (q + 1) / 2}, {&w, q / 2}}));
  return CapacityWiseLists(std::move(lists));
}

CapacityWiseLists build_rotating(const PriorityOrdering& w, const PriorityOrdering& o, int n) {
  check_pair(w, o, n);
  std::vector<std::vector<PriorityOrdering>> lists;
  for (int q = 1; q <= n; ++q) {
    std::vector<PriorityOrdering> list;
    for (int l = 0; l < q; ++l) list.push_back(l % 2 == 0 ? w : o);
    lists.push_back(std::move(list));
  }
  return CapacityWiseLists(std::move(lists));
}

CapacityWiseLists build_compromise(const PriorityOrdering& w, const PriorityOrdering& o, int n) {
  check_pair(w, o, n);
  std::vector<std::vector<PriorityOrdering>> lists;
  for (int q = 1; q <= n; ++q) {
    // q = q' + k with 4 | q'.
    const int quarter = (q - q % 4) / 4;
    const int k = q % 4;
    const int head = quarter + (k >= 1 ? 1 : 0);
    const int middle = 2 * quarter + (k >= 2 ? 1 : 0);
    const int tail = quarter + (k == 3 ? 1 : 0);
    lists.push_back(runs({{&w, head}, {&o, middle}, {&w, tail}}));
  }
  return CapacityWiseLists(std::move(lists));
}

PriorityProfile rotating_profile(const PriorityOrdering& w, const PriorityOrdering& o, int n) {
  check_pair(w, o, n);
  std::vector<PriorityOrdering> list;
  for (int l = 0; l < n; ++l) list.push_back(l % 2 == 0 ? w : o);
  return PriorityProfile(std::move(list));
}

bool satisfies_boston_requirement(const CapacityWiseLists& lists, const PriorityOrdering& w,
                                  const PriorityOrdering& o) {
  for (const auto& list : lists.lists()) {
    int walk = 0;
    int open = 0;
    for (const auto& ord : list) {
      // When w == o an entry counts toward whichever side balances the list.
      if (ord == w && ord == o) continue;
      if (ord == w) {
        ++walk;
      } else if (ord == o) {
        ++open;
      } else {
        return false;
      }
    }
    if (w == o) continue;
    if (walk - open > 1 || open - walk > 1) return false;
  }
  return true;
}

bool alternates_in_pairs(const std::vector<PriorityOrdering>& list, const PriorityOrdering& w,
                         const PriorityOrdering& o) {
  for (const auto& ord : list) {
    if (!(ord == w) && !(ord == o)) return false;
  }
  for (std::size_t l = 0; l + 1 < list.size(); l += 2) {
    if ((list[l] == w) != (list[l + 1] == o)) return false;
  }
  return true;
}

ChoiceTable materialize(const ChoiceRule& rule, const Universe& u, RunOptions opts) {
  if (const auto* table = std::get_if<ChoiceTable>(&rule)) {
    if (!(table->universe() == u)) throw Error("choice table is over a different universe");
    return *table;
  }
  const int n = std::visit(
      [](const auto& r) -> int {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, PriorityProfile>) {
          return r.size();
        } else if constexpr (std::is_same_v<T, PriorityOrdering>) {
          return r.size();
        } else if constexpr (std::is_same_v<T, CapacityWiseLists>) {
          return r.universe_size();
        } else {
          return r.n();
        }
      },
      rule);
  if (n != u.size()) throw Error("choice rule is defined over a universe of a different size");
  return ChoiceTable::Tabulate(
      u, [&rule](const Problem& p) { return choose(rule, p); }, opts);
}

}  // namespace lexchoice
