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

#include "lexchoice/feasibility.h"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "lexchoice/digraph.h"

namespace lexchoice {
namespace {

constexpr int kBitmapLimit = 10;

std::size_t set_count(int n) { return (std::size_t{1} << n) - 1; }
ChoiceSet nth_set(std::size_t i) { return ChoiceSet(static_cast<ChoiceSet::Bits>(i + 1)); }

}  // namespace

FeasibilityFamily::FeasibilityFamily(int n, const std::vector<ChoiceSet>& maximal_sets) : n_(n) {
  if (n < 1 || n > kMaxAlternatives) throw Error("feasibility family over an invalid universe");
  const ChoiceSet all = ChoiceSet::Full(n);
  std::vector<ChoiceSet> candidates;
  for (ChoiceSet s : maximal_sets) {
    if (!s.subset_of(all)) throw Error("feasible set lies outside the universe");
    if (!s.empty()) candidates.push_back(s);
  }
  for (Alternative a = 0; a < n; ++a) candidates.push_back(ChoiceSet::Of(a));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (ChoiceSet s : candidates) {
    bool dominated = false;
    for (ChoiceSet t : candidates) {
      if (t != s && s.subset_of(t)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal_.push_back(s);
  }
  if (n <= kBitmapLimit) {
    members_.assign(std::size_t{1} << n, false);
    for (std::size_t bits = 0; bits < members_.size(); ++bits) {
      const ChoiceSet s(static_cast<ChoiceSet::Bits>(bits));
      members_[bits] = std::any_of(maximal_.begin(), maximal_.end(),
                                   [s](ChoiceSet m) { return s.subset_of(m); });
    }
  }
}

bool FeasibilityFamily::contains(ChoiceSet s) const {
  if (!members_.empty()) return s.subset_of(ChoiceSet::Full(n_)) && members_[s.bits()];
  return std::any_of(maximal_.begin(), maximal_.end(),
                     [s](ChoiceSet m) { return s.subset_of(m); });
}

FeasibilityFamily make_family(const Universe& u, const std::vector<ChoiceSet>& maximal_sets) {
  return FeasibilityFamily(u.size(), maximal_sets);
}

FeasibilityFamily unconstrained_family(const Universe& u) {
  return FeasibilityFamily(u.size(), {u.all()});
}

FeasibilityFamily partition_family(const Universe& u, const std::vector<ChoiceSet>& groups) {
  ChoiceSet covered;
  for (ChoiceSet g : groups) {
    if (g.empty() || !(g & covered).empty() || !u.contains(g)) {
      throw Error("agent groups must be nonempty, disjoint subsets of the universe");
    }
    covered |= g;
  }
  if (covered != u.all()) throw Error("agent groups must cover the universe");
  // Maximal feasible sets are the transversals: one alternative per group.
  std::vector<ChoiceSet> transversals = {ChoiceSet()};
  for (ChoiceSet g : groups) {
    std::vector<ChoiceSet> next;
    for (ChoiceSet partial : transversals) {
      for (Alternative a : g) next.push_back(partial.with(a));
    }
    transversals = std::move(next);
  }
  return FeasibilityFamily(u.size(), transversals);
}

FChoiceTable::FChoiceTable(ChoiceTable table, FeasibilityFamily family)
    : table_(std::move(table)), family_(std::move(family)) {
  if (family_.universe_size() != table_.n()) {
    throw Error("feasibility family is over a different universe");
  }
  for (Problem p : enumerate_problems(table_.universe())) {
    const ChoiceSet c = table_(p.set, p.capacity);
    if (c.empty()) throw Error("C" + universe().format(p) + " is empty");
    if (!family_.contains(c)) {
      throw Error("C" + universe().format(p) + " = " + universe().format(c) + " is infeasible");
    }
  }
}

ChoiceSet flex_choose(const PriorityProfile& profile, const FeasibilityFamily& f,
                      const Problem& p) {
  ChoiceSet chosen;
  for (int t = 0; t < p.capacity; ++t) {
    ChoiceSet candidates;
    for (Alternative a : p.set - chosen) {
      if (f.contains(chosen.with(a))) candidates = candidates.with(a);
    }
    if (candidates.empty()) break;
    chosen = chosen.with(profile[t].best(candidates));
  }
  return chosen;
}

FChoiceTable materialize_flex(const PriorityProfile& profile, const FeasibilityFamily& f,
                              const Universe& u, RunOptions opts) {
  if (profile.size() != u.size() || f.universe_size() != u.size()) {
    throw Error("profile and family must range over the universe");
  }
  ChoiceTable table = ChoiceTable::Tabulate(
      u, [&](const Problem& p) { return flex_choose(profile, f, p); }, opts);
  return FChoiceTable(std::move(table), f);
}

AxiomReport check_f_capacity_filling(const FChoiceTable& c) {
  const std::size_t total = c.table().size();
  for (Problem p : enumerate_problems(c.universe())) {
    const ChoiceSet chosen = c(p.set, p.capacity);
    if (chosen.size() == p.capacity) continue;
    for (Alternative a : p.set - chosen) {
      if (c.family().contains(chosen.with(a))) {
        return AxiomReport{Axiom::kFCapacityFilling, false, Witness{{p}, {a}, 0}, total};
      }
    }
  }
  return AxiomReport{Axiom::kFCapacityFilling, true, std::nullopt, total};
}

RevealedPreference f_revealed_pref(const FChoiceTable& c, Capacity q) {
  if (q < 1 || q > c.n()) {
    throw Error("revealed F-preference is defined for capacities 1..n, got " + std::to_string(q));
  }
  RevealedPreference rp(c.n(), q);
  for (std::size_t i = 0; i < set_count(c.n()); ++i) {
    const ChoiceSet s = nth_set(i);
    const ChoiceSet prev = c.table().chosen_or_empty(s, q - 1);
    const ChoiceSet cur = c(s, q);
    ChoiceSet losers;
    for (Alternative b : s - cur - prev) {
      if (c.family().contains(prev.with(b))) losers = losers.with(b);
    }
    for (Alternative a : cur - prev) {
      for (Alternative b : losers) rp.add(a, b, s);
    }
  }
  return rp;
}

AxiomReport check_csarp(const FChoiceTable& c) {
  const std::size_t total = c.table().size();
  for (Capacity q = 1; q <= c.n(); ++q) {
    const RevealedPreference rp = f_revealed_pref(c, q);
    Digraph g;
    for (Alternative a = 0; a < c.n(); ++a) g.push_back(rp.successors(a));
    const std::vector<Alternative> cycle = find_cycle(g);
    if (cycle.empty()) continue;
    Witness w;
    w.alternatives = cycle;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      w.problems.push_back({rp.witness(cycle[k], cycle[(k + 1) % cycle.size()]), q});
    }
    return AxiomReport{Axiom::kCsarp, false, std::move(w), total};
  }
  return AxiomReport{Axiom::kCsarp, true, std::nullopt, total};
}

Extraction<PriorityProfile> extract_flex_profile(const FChoiceTable& c) {
  std::vector<PriorityOrdering> orderings;
  for (Capacity q = 1; q <= c.n(); ++q) {
    const RevealedPreference rp = f_revealed_pref(c, q);
    Digraph g;
    for (Alternative a = 0; a < c.n(); ++a) g.push_back(rp.successors(a));
    auto order = linear_extension(transitive_closure(std::move(g)));
    if (!order) {
      return ExtractionFailure{"capacity " + std::to_string(q),
                               "revealed F-preference has a cycle", std::nullopt};
    }
    orderings.emplace_back(std::move(*order));
  }
  PriorityProfile profile(std::move(orderings));
  const FChoiceTable rebuilt = materialize_flex(profile, c.family(), c.universe());
  if (auto p = first_mismatch(c.table(), rebuilt.table())) {
    return ExtractionFailure{"validation",
                             "constructed rule chooses " +
                                 c.universe().format(rebuilt(p->set, p->capacity)) + " at " +
                                 c.universe().format(*p) + " but the table has " +
                                 c.universe().format(c(p->set, p->capacity)),
                             *p};
  }
  return profile;
}

bool witness_reproduces(const FChoiceTable& c, Axiom axiom, const Witness& w) {
  const Universe& u = c.universe();
  switch (axiom) {
    case Axiom::kFCapacityFilling: {
      if (w.problems.size() != 1 || w.alternatives.size() != 1) return false;
      const Problem p = w.problems[0];
      const Alternative a = w.alternatives[0];
      if (!u.in_domain(p) || a < 0 || a >= c.n() || !p.set.contains(a)) return false;
      const ChoiceSet chosen = c(p.set, p.capacity);
      return !chosen.contains(a) && chosen.size() < p.capacity &&
             c.family().contains(chosen.with(a));
    }
    case Axiom::kCsarp: {
      const std::size_t k = w.alternatives.size();
      if (k < 2 || w.problems.size() != k) return false;
      const Capacity q = w.problems[0].capacity;
      for (std::size_t e = 0; e < k; ++e) {
        const Problem p = w.problems[e];
        const Alternative a = w.alternatives[e];
        const Alternative b = w.alternatives[(e + 1) % k];
        if (p.capacity != q || !u.in_domain(p) || a < 0 || a >= c.n() || b < 0 || b >= c.n() ||
            !p.set.contains(a) || !p.set.contains(b)) {
          return false;
        }
        const ChoiceSet prev = c.table().chosen_or_empty(p.set, q - 1);
        const ChoiceSet cur = c(p.set, q);
        if (prev.contains(a) || prev.contains(b) || !cur.contains(a) || cur.contains(b) ||
            !c.family().contains(prev.with(b))) {
          return false;
        }
      }
      return true;
    }
    default:
      return witness_reproduces(c.table(), axiom, w);
  }
}

}  // namespace lexchoice
