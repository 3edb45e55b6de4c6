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

#include "lexchoice/axioms.h"

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lexchoice {
namespace {

constexpr std::array<std::pair<Axiom, std::string_view>, 12> kAxiomNames = {{
    {Axiom::kCapacityFilling, "capacity_filling"},
    {Axiom::kGrossSubstitutes, "gross_substitutes"},
    {Axiom::kMonotonicity, "monotonicity"},
    {Axiom::kIrrelevanceOfAcceptedAlternatives, "iaa"},
    {Axiom::kCwarp, "cwarp"},
    {Axiom::kCwarpAlternative, "cwarp_alt"},
    {Axiom::kWrarp, "wrarp"},
    {Axiom::kCwrarp, "cwrarp"},
    {Axiom::kPathIndependence, "path_independence"},
    {Axiom::kInsertion, "insertion"},
    {Axiom::kFCapacityFilling, "f_capacity_filling"},
    {Axiom::kCsarp, "csarp"},
}};

std::size_t set_count(int n) { return (std::size_t{1} << n) - 1; }
ChoiceSet nth_set(std::size_t i) { return ChoiceSet(static_cast<ChoiceSet::Bits>(i + 1)); }

AxiomReport passed(Axiom axiom, std::size_t checked) {
  return AxiomReport{axiom, true, std::nullopt, checked};
}

AxiomReport failed(Axiom axiom, std::size_t checked, Witness w) {
  return AxiomReport{axiom, false, std::move(w), checked};
}

AxiomReport from_hit(Axiom axiom, std::size_t checked, std::optional<Witness> hit) {
  return hit ? failed(axiom, checked, std::move(*hit)) : passed(axiom, checked);
}

// S reveals a over b at q (q >= 2).
bool reveals(const ChoiceTable& c, ChoiceSet s, Capacity q, Alternative a, Alternative b) {
  if (q < 2 || q > c.n() || !s.contains(a) || !s.contains(b) || a == b) return false;
  const ChoiceSet prev = c(s, q - 1);
  const ChoiceSet cur = c(s, q);
  return !prev.contains(a) && !prev.contains(b) && cur.contains(a) && !cur.contains(b);
}

bool valid_alternative(const ChoiceTable& c, Alternative a) { return a >= 0 && a < c.n(); }

bool domain_ok(const ChoiceTable& c, const Witness& w, std::size_t problems,
               std::size_t alternatives) {
  if (w.problems.size() != problems || w.alternatives.size() != alternatives) return false;
  for (const auto& p : w.problems) {
    if (!c.universe().in_domain(p)) return false;
  }
  for (Alternative a : w.alternatives) {
    if (!valid_alternative(c, a)) return false;
  }
  return true;
}

// a ∈ C(S,q), b ∈ C(S',q') ∖ C(S,q), a, b ∈ S ∩ S', a ∉ C(S',q').
std::optional<std::pair<Alternative, Alternative>> weaker_axiom_violation(ChoiceSet s,
                                                                          ChoiceSet chosen,
                                                                          ChoiceSet s2,
                                                                          ChoiceSet chosen2) {
  const ChoiceSet both = s & s2;
  const ChoiceSet a_side = (both & chosen) - chosen2;
  const ChoiceSet b_side = (both & chosen2) - chosen;
  if (a_side.empty() || b_side.empty()) return std::nullopt;
  return std::make_pair(a_side.first(), b_side.first());
}

ChoiceSet path_independent_rhs(const ChoiceTable& c, ChoiceSet s, ChoiceSet t, Capacity q) {
  const ChoiceSet pooled = c(s, q) | c(t, q);
  return pooled.empty() ? ChoiceSet() : c(pooled, q);
}

}  // namespace

std::string_view axiom_name(Axiom a) {
  for (const auto& [axiom, name] : kAxiomNames) {
    if (axiom == a) return name;
  }
  return "unknown";
}

std::optional<Axiom> axiom_from_name(std::string_view name) {
  for (const auto& [axiom, n] : kAxiomNames) {
    if (n == name) return axiom;
  }
  if (name == "cf") return Axiom::kCapacityFilling;
  if (name == "gs") return Axiom::kGrossSubstitutes;
  if (name == "mon") return Axiom::kMonotonicity;
  if (name == "pi") return Axiom::kPathIndependence;
  if (name == "f_cf") return Axiom::kFCapacityFilling;
  return std::nullopt;
}

RevealedPreference::RevealedPreference(int n, Capacity q)
    : n_(n),
      capacity_(q),
      successors_(static_cast<std::size_t>(n)),
      witness_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

std::size_t RevealedPreference::edge_count() const {
  std::size_t edges = 0;
  for (ChoiceSet s : successors_) edges += static_cast<std::size_t>(s.size());
  return edges;
}

void RevealedPreference::add(Alternative a, Alternative b, ChoiceSet revealing_set) {
  if (successors_[a].contains(b)) return;
  successors_[a] = successors_[a].with(b);
  witness_[static_cast<std::size_t>(a) * n_ + b] = revealing_set;
}

ChoiceSet newly_accepted(const ChoiceTable& c, ChoiceSet s, Capacity q) {
  return c(s, q + 1) & (s - c(s, q));
}

AxiomReport check_capacity_filling(const ChoiceTable& c) {
  for (Problem p : enumerate_problems(c.universe())) {
    if (c(p.set, p.capacity).size() != std::min(p.set.size(), p.capacity)) {
      return failed(Axiom::kCapacityFilling, c.size(), Witness{{p}, {}, 0});
    }
  }
  return passed(Axiom::kCapacityFilling, c.size());
}

AxiomReport check_gross_substitutes(const ChoiceTable& c) {
  for (Problem p : enumerate_problems(c.universe())) {
    const ChoiceSet chosen = c(p.set, p.capacity);
    for (Alternative a : chosen) {
      for (Alternative b : p.set.without(a)) {
        if (!c(p.set.without(b), p.capacity).contains(a)) {
          return failed(Axiom::kGrossSubstitutes, c.size(), Witness{{p}, {a, b}, 0});
        }
      }
    }
  }
  return passed(Axiom::kGrossSubstitutes, c.size());
}

AxiomReport check_monotonicity(const ChoiceTable& c) {
  for (Problem p : enumerate_problems(c.universe())) {
    if (p.capacity == c.n()) continue;
    const ChoiceSet lost = c(p.set, p.capacity) - c(p.set, p.capacity + 1);
    if (!lost.empty()) {
      return failed(Axiom::kMonotonicity, c.size(), Witness{{p}, {lost.first()}, 0});
    }
  }
  return passed(Axiom::kMonotonicity, c.size());
}

AxiomReport check_iaa(const ChoiceTable& c) {
  const int n = c.n();
  // Sets sharing a rejection set are compared against the earliest one.
  std::vector<ChoiceSet> earliest(std::size_t{1} << n);
  for (Capacity q = 1; q < n; ++q) {
    std::fill(earliest.begin(), earliest.end(), ChoiceSet());
    for (std::size_t i = 0; i < set_count(n); ++i) {
      const ChoiceSet s = nth_set(i);
      const ChoiceSet rej = s - c(s, q);
      ChoiceSet& first = earliest[rej.bits()];
      if (first.empty()) {
        first = s;
        continue;
      }
      if (newly_accepted(c, first, q) != newly_accepted(c, s, q)) {
        return failed(Axiom::kIrrelevanceOfAcceptedAlternatives, c.size(),
                      Witness{{{first, q}, {s, q}}, {}, 0});
      }
    }
  }
  return passed(Axiom::kIrrelevanceOfAcceptedAlternatives, c.size());
}

RevealedPreference revealed_pref(const ChoiceTable& c, Capacity q) {
  if (q < 2 || q > c.n()) {
    throw Error("revealed preference is defined for capacities 2..n, got " + std::to_string(q));
  }
  RevealedPreference rp(c.n(), q);
  for (std::size_t i = 0; i < set_count(c.n()); ++i) {
    const ChoiceSet s = nth_set(i);
    const ChoiceSet prev = c(s, q - 1);
    const ChoiceSet cur = c(s, q);
    const ChoiceSet winners = cur - prev;
    const ChoiceSet losers = s - cur - prev;
    for (Alternative a : winners) {
      for (Alternative b : losers) rp.add(a, b, s);
    }
  }
  return rp;
}

AxiomReport check_cwarp(const ChoiceTable& c) {
  const int n = c.n();
  for (Capacity q = 2; q <= n; ++q) {
    const RevealedPreference rp = revealed_pref(c, q);
    for (Alternative a = 0; a < n; ++a) {
      for (Alternative b = a + 1; b < n; ++b) {
        if (rp.prefers(a, b) && rp.prefers(b, a)) {
          return failed(Axiom::kCwarp, c.size(),
                        Witness{{{rp.witness(a, b), q}, {rp.witness(b, a), q}}, {a, b}, 0});
        }
      }
    }
  }
  return passed(Axiom::kCwarp, c.size());
}

AxiomReport check_cwarp_alt(const ChoiceTable& c, RunOptions opts) {
  const int n = c.n();
  const std::size_t sets = set_count(n);
  const std::size_t outer = n >= 2 ? sets * static_cast<std::size_t>(n - 1) : 0;
  auto hit = first_hit<Witness>(outer, opts, [&](std::size_t i) -> std::optional<Witness> {
    const Capacity q = static_cast<Capacity>(i / sets) + 2;
    const ChoiceSet s = nth_set(i % sets);
    for (std::size_t j = 0; j < sets; ++j) {
      const ChoiceSet t = nth_set(j);
      const ChoiceSet fresh = (s & t) - (c(s, q - 1) | c(t, q - 1));
      if (auto v = weaker_axiom_violation(fresh, c(s, q), fresh, c(t, q))) {
        return Witness{{{s, q}, {t, q}}, {v->first, v->second}, 0};
      }
    }
    return std::nullopt;
  });
  return from_hit(Axiom::kCwarpAlternative, c.size(), std::move(hit));
}

AxiomReport check_wrarp(const ChoiceTable& c, RunOptions opts) {
  const int n = c.n();
  const std::size_t sets = set_count(n);
  auto hit = first_hit<Witness>(sets * n, opts, [&](std::size_t i) -> std::optional<Witness> {
    const Capacity q = static_cast<Capacity>(i / sets) + 1;
    const ChoiceSet s = nth_set(i % sets);
    const ChoiceSet chosen = c(s, q);
    for (std::size_t j = 0; j < sets; ++j) {
      const ChoiceSet s2 = nth_set(j);
      if (auto v = weaker_axiom_violation(s, chosen, s2, c(s2, q))) {
        return Witness{{{s, q}, {s2, q}}, {v->first, v->second}, 0};
      }
    }
    return std::nullopt;
  });
  return from_hit(Axiom::kWrarp, c.size(), std::move(hit));
}

AxiomReport check_cwrarp(const ChoiceTable& c, RunOptions opts) {
  const int n = c.n();
  const std::size_t sets = set_count(n);
  // Outer index follows the canonical problem order.
  auto hit = first_hit<Witness>(c.size(), opts, [&](std::size_t i) -> std::optional<Witness> {
    const ChoiceSet s = nth_set(i / n);
    const Capacity q = static_cast<Capacity>(i % n) + 1;
    const ChoiceSet chosen = c(s, q);
    for (std::size_t j = 0; j < sets; ++j) {
      const ChoiceSet s2 = nth_set(j);
      for (Capacity q2 = 1; q2 <= n; ++q2) {
        if (auto v = weaker_axiom_violation(s, chosen, s2, c(s2, q2))) {
          return Witness{{{s, q}, {s2, q2}}, {v->first, v->second}, 0};
        }
      }
    }
    return std::nullopt;
  });
  return from_hit(Axiom::kCwrarp, c.size(), std::move(hit));
}

AxiomReport check_path_independence(const ChoiceTable& c, RunOptions opts) {
  const int n = c.n();
  const std::size_t sets = set_count(n);
  auto hit = first_hit<Witness>(sets * n, opts, [&](std::size_t i) -> std::optional<Witness> {
    const Capacity q = static_cast<Capacity>(i / sets) + 1;
    const ChoiceSet s = nth_set(i % sets);
    for (std::size_t j = 0; j < sets; ++j) {
      const ChoiceSet t = nth_set(j);
      if (c(s | t, q) != path_independent_rhs(c, s, t, q)) {
        return Witness{{{s, q}, {t, q}}, {}, 0};
      }
    }
    return std::nullopt;
  });
  return from_hit(Axiom::kPathIndependence, c.size(), std::move(hit));
}

bool obtained_by_insertion(const std::vector<PriorityOrdering>& shorter,
                           const std::vector<PriorityOrdering>& longer) {
  if (longer.size() != shorter.size() + 1) return false;
  for (std::size_t k = 0; k < longer.size(); ++k) {
    bool match = true;
    for (std::size_t l = 0; l < shorter.size() && match; ++l) {
      match = shorter[l] == longer[l < k ? l : l + 1];
    }
    if (match) return true;
  }
  return false;
}

AxiomReport check_insertion(const CapacityWiseLists& lists) {
  const int n = lists.universe_size();
  for (Capacity q = 2; q <= n; ++q) {
    if (!obtained_by_insertion(lists.for_capacity(q - 1), lists.for_capacity(q))) {
      return failed(Axiom::kInsertion, static_cast<std::size_t>(n), Witness{{}, {}, q});
    }
  }
  return passed(Axiom::kInsertion, static_cast<std::size_t>(n));
}

AxiomReport check(Axiom axiom, const ChoiceTable& c, RunOptions opts) {
  switch (axiom) {
    case Axiom::kCapacityFilling:
      return check_capacity_filling(c);
    case Axiom::kGrossSubstitutes:
      return check_gross_substitutes(c);
    case Axiom::kMonotonicity:
      return check_monotonicity(c);
    case Axiom::kIrrelevanceOfAcceptedAlternatives:
      return check_iaa(c);
    case Axiom::kCwarp:
      return check_cwarp(c);
    case Axiom::kCwarpAlternative:
      return check_cwarp_alt(c, opts);
    case Axiom::kWrarp:
      return check_wrarp(c, opts);
    case Axiom::kCwrarp:
      return check_cwrarp(c, opts);
    case Axiom::kPathIndependence:
      return check_path_independence(c, opts);
    default:
      throw Error(std::string(axiom_name(axiom)) + " cannot be checked on a plain choice table");
  }
}

bool witness_reproduces(const ChoiceTable& c, Axiom axiom, const Witness& w) {
  switch (axiom) {
    case Axiom::kCapacityFilling: {
      if (!domain_ok(c, w, 1, 0)) return false;
      const Problem p = w.problems[0];
      return c(p.set, p.capacity).size() != std::min(p.set.size(), p.capacity);
    }
    case Axiom::kGrossSubstitutes: {
      if (!domain_ok(c, w, 1, 2)) return false;
      const Problem p = w.problems[0];
      const Alternative a = w.alternatives[0];
      const Alternative b = w.alternatives[1];
      if (a == b || !p.set.contains(b) || p.set.without(b).empty()) return false;
      return c(p.set, p.capacity).contains(a) && !c(p.set.without(b), p.capacity).contains(a);
    }
    case Axiom::kMonotonicity: {
      if (!domain_ok(c, w, 1, 1)) return false;
      const Problem p = w.problems[0];
      if (p.capacity >= c.n()) return false;
      const Alternative a = w.alternatives[0];
      return c(p.set, p.capacity).contains(a) && !c(p.set, p.capacity + 1).contains(a);
    }
    case Axiom::kIrrelevanceOfAcceptedAlternatives: {
      if (!domain_ok(c, w, 2, 0)) return false;
      const Problem p = w.problems[0];
      const Problem p2 = w.problems[1];
      if (p.capacity != p2.capacity || p.capacity >= c.n()) return false;
      const Capacity q = p.capacity;
      return (p.set - c(p.set, q)) == (p2.set - c(p2.set, q)) &&
             newly_accepted(c, p.set, q) != newly_accepted(c, p2.set, q);
    }
    case Axiom::kCwarp: {
      if (!domain_ok(c, w, 2, 2)) return false;
      const Problem p = w.problems[0];
      const Problem p2 = w.problems[1];
      const Alternative a = w.alternatives[0];
      const Alternative b = w.alternatives[1];
      return p.capacity == p2.capacity && reveals(c, p.set, p.capacity, a, b) &&
             reveals(c, p2.set, p2.capacity, b, a);
    }
    case Axiom::kCwarpAlternative: {
      if (!domain_ok(c, w, 2, 2)) return false;
      const Problem p = w.problems[0];
      const Problem p2 = w.problems[1];
      const Capacity q = p.capacity;
      if (q != p2.capacity || q < 2) return false;
      const Alternative a = w.alternatives[0];
      const Alternative b = w.alternatives[1];
      const ChoiceSet both = p.set & p2.set;
      const ChoiceSet earlier = c(p.set, q - 1) | c(p2.set, q - 1);
      if (a == b || !both.contains(a) || !both.contains(b) || earlier.contains(a) ||
          earlier.contains(b)) {
        return false;
      }
      return c(p.set, q).contains(a) && c(p2.set, q).contains(b) && !c(p.set, q).contains(b) &&
             !c(p2.set, q).contains(a);
    }
    case Axiom::kWrarp:
    case Axiom::kCwrarp: {
      if (!domain_ok(c, w, 2, 2)) return false;
      const Problem p = w.problems[0];
      const Problem p2 = w.problems[1];
      if (axiom == Axiom::kWrarp && p.capacity != p2.capacity) return false;
      const Alternative a = w.alternatives[0];
      const Alternative b = w.alternatives[1];
      const ChoiceSet both = p.set & p2.set;
      const ChoiceSet chosen = c(p.set, p.capacity);
      const ChoiceSet chosen2 = c(p2.set, p2.capacity);
      return both.contains(a) && both.contains(b) && chosen.contains(a) && chosen2.contains(b) &&
             !chosen.contains(b) && !chosen2.contains(a);
    }
    case Axiom::kPathIndependence: {
      if (!domain_ok(c, w, 2, 0)) return false;
      const Problem p = w.problems[0];
      const Problem p2 = w.problems[1];
      if (p.capacity != p2.capacity) return false;
      return c(p.set | p2.set, p.capacity) != path_independent_rhs(c, p.set, p2.set, p.capacity);
    }
    default:
      return false;
  }
}

}  // namespace lexchoice
