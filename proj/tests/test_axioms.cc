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

#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "lexchoice/axioms.h"
#include "lexchoice/cli/fixtures.h"
#include "lexchoice/rules.h"
#include "oracles.h"

using namespace lexchoice;
using cli::ordering;
using cli::set;

namespace {

constexpr Axiom kCf = Axiom::kCapacityFilling;
constexpr Axiom kGs = Axiom::kGrossSubstitutes;
constexpr Axiom kMon = Axiom::kMonotonicity;
constexpr Axiom kIaa = Axiom::kIrrelevanceOfAcceptedAlternatives;
constexpr Axiom kCwarp = Axiom::kCwarp;

bool passes(Axiom a, const ChoiceTable& c) { return check(a, c).passed; }

// Random capacity-wise lexicographic table: capacity-filling by construction,
// other axioms vary.
ChoiceTable random_capacity_wise(int n, std::mt19937_64& rng) {
  std::vector<std::vector<PriorityOrdering>> lists;
  for (int q = 1; q <= n; ++q) {
    std::vector<PriorityOrdering> list;
    for (int t = 0; t < q; ++t) list.emplace_back(oracle::random_order(n, rng));
    lists.push_back(std::move(list));
  }
  return materialize(CapacityWiseLists(std::move(lists)), letters(n));
}

// Random lexicographic lists that share their first orderings across
// capacities with probability 1/2 per position, which makes monotone tables
// common.
ChoiceTable random_nearly_lexicographic(int n, std::mt19937_64& rng) {
  const auto base = oracle::random_profile(n, rng);
  std::vector<std::vector<PriorityOrdering>> lists;
  for (int q = 1; q <= n; ++q) {
    std::vector<PriorityOrdering> list;
    for (int t = 0; t < q; ++t) {
      list.emplace_back(rng() % 2 ? base[static_cast<std::size_t>(t)] : oracle::random_order(n, rng));
    }
    lists.push_back(std::move(list));
  }
  return materialize(CapacityWiseLists(std::move(lists)), letters(n));
}

std::vector<ChoiceTable> fixture_tables() {
  std::vector<ChoiceTable> out = {cli::cwarp_two_cycle(),   cli::necessity_capacity_filling(), cli::necessity_monotonicity(),
                                  cli::necessity_cwarp(), cli::independence_capacity_filling(), cli::independence_gross_substitutes(),
                                  cli::independence_monotonicity()};
  for (const cli::BostonFixture& f :
       {cli::walk_open_fixture(), cli::open_walk_fixture(), cli::compromise_fixture()}) {
    const int n = f.universe.size();
    out.push_back(materialize(build_walk_open(f.walk, f.open, n), f.universe));
    out.push_back(materialize(build_open_walk(f.walk, f.open, n), f.universe));
    out.push_back(materialize(build_rotating(f.walk, f.open, n), f.universe));
    out.push_back(materialize(build_compromise(f.walk, f.open, n), f.universe));
  }
  return out;
}

// Fixtures plus random tables of several flavours at n <= 4.
std::vector<ChoiceTable> corpus() {
  std::vector<ChoiceTable> out = fixture_tables();
  std::mt19937_64 rng(2026);
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k < 40; ++k) {
      out.push_back(oracle::random_table(letters(n), rng));
      out.push_back(random_capacity_wise(n, rng));
      out.push_back(random_nearly_lexicographic(n, rng));
      out.push_back(materialize(oracle::to_profile(oracle::random_profile(n, rng)), letters(n)));
    }
  }
  return out;
}

void check_witness(const ChoiceTable& c, const AxiomReport& r) {
  if (r.passed) {
    CHECK_FALSE(r.witness.has_value());
  } else {
    REQUIRE(r.witness.has_value());
    CHECK(witness_reproduces(c, r.axiom, *r.witness));
  }
}

}  // namespace

TEST_CASE("checkers agree with brute-force definitions") {
  for (const ChoiceTable& c : corpus()) {
    CAPTURE(c.n());
    CHECK(passes(kCf, c) == oracle::capacity_filling(c));
    CHECK(passes(kGs, c) == oracle::gross_substitutes(c));
    CHECK(passes(kMon, c) == oracle::monotonicity(c));
    CHECK(passes(kIaa, c) == oracle::iaa(c));
    CHECK(passes(kCwarp, c) == oracle::cwarp(c));
  }
}

TEST_CASE("property: every failing report carries a reproducing witness") {
  for (const ChoiceTable& c : corpus()) {
    for (Axiom a : {kCf, kGs, kMon, kIaa, kCwarp, Axiom::kCwarpAlternative, Axiom::kWrarp,
                    Axiom::kCwrarp, Axiom::kPathIndependence}) {
      CAPTURE(axiom_name(a));
      check_witness(c, check(a, c));
    }
  }
}

TEST_CASE("property: capacity-filling, monotonicity and CWARP imply IAA") {
  std::size_t premises = 0;
  for (const ChoiceTable& c : corpus()) {
    if (passes(kCf, c) && passes(kMon, c) && passes(kCwarp, c)) {
      ++premises;
      CHECK(passes(kIaa, c));
    }
  }
  CHECK(premises > 100);
}

TEST_CASE("property: IAA and CWARP are interchangeable given CF, GS and MON") {
  for (const ChoiceTable& c : corpus()) {
    const bool base = passes(kCf, c) && passes(kGs, c) && passes(kMon, c);
    CHECK((base && passes(kIaa, c)) == (base && passes(kCwarp, c)));
  }
}

TEST_CASE("property: the alternative CWARP form agrees with CWARP") {
  for (const ChoiceTable& c : corpus()) {
    CHECK(passes(Axiom::kCwarpAlternative, c) == passes(kCwarp, c));
  }
}

TEST_CASE("property: capacity-filling with gross substitutes implies path independence") {
  for (const ChoiceTable& c : corpus()) {
    if (passes(kCf, c) && passes(kGs, c)) CHECK(passes(Axiom::kPathIndependence, c));
  }
  CHECK_FALSE(passes(Axiom::kPathIndependence, cli::independence_gross_substitutes()));
  CHECK(passes(Axiom::kPathIndependence, materialize(PriorityOrdering::Identity(1), letters(1))));
}

TEST_CASE("property: lexicographic tables pass all four axioms and CWARP") {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k < 15; ++k) {
      const ChoiceTable c = materialize(oracle::to_profile(oracle::random_profile(n, rng)), letters(n));
      for (Axiom a : {kCf, kGs, kMon, kIaa, kCwarp}) CHECK(passes(a, c));
    }
  }
}

TEST_CASE("capacity-filling examples") {
  const AxiomReport b1 = check_capacity_filling(cli::independence_capacity_filling());
  REQUIRE_FALSE(b1.passed);
  CHECK(b1.witness->problems[0].set.size() >= 2);
  CHECK(b1.witness->problems[0].capacity >= 2);
  const cli::BostonFixture f = cli::walk_open_fixture();
  CHECK(check_capacity_filling(materialize(build_rotating(f.walk, f.open, 5), f.universe)).passed);
  CHECK(check_capacity_filling(materialize(PriorityOrdering::Identity(1), letters(1))).passed);
}

TEST_CASE("gross substitutes examples") {
  const ChoiceTable b2 = cli::independence_gross_substitutes();
  const Universe& u = b2.universe();
  CHECK_FALSE(check_gross_substitutes(b2).passed);
  const Witness stated{{{set(u, "abc"), 1}}, {u.index_of("a"), u.index_of("c")}, 0};
  CHECK(witness_reproduces(b2, kGs, stated));
  CHECK(b2(set(u, "ab"), 1) == set(u, "b"));
  CHECK(check_gross_substitutes(materialize(ordering(u, "cab"), u)).passed);
  const cli::BostonFixture f = cli::walk_open_fixture();
  CHECK(check_gross_substitutes(materialize(build_walk_open(f.walk, f.open, 5), f.universe)).passed);
}

TEST_CASE("monotonicity examples") {
  const ChoiceTable b3 = cli::independence_monotonicity();
  const Universe& u = b3.universe();
  CHECK_FALSE(check_monotonicity(b3).passed);
  CHECK(witness_reproduces(b3, kMon, Witness{{{u.all(), 1}}, {u.index_of("a")}, 0}));
  CHECK(b3(u.all(), 2) == set(u, "bc"));
  for (const cli::BostonFixture& f : {cli::walk_open_fixture(), cli::compromise_fixture()}) {
    const int n = f.universe.size();
    CHECK(check_monotonicity(materialize(build_walk_open(f.walk, f.open, n), f.universe)).passed);
    CHECK(check_monotonicity(materialize(build_open_walk(f.walk, f.open, n), f.universe)).passed);
    CHECK(check_monotonicity(materialize(build_rotating(f.walk, f.open, n), f.universe)).passed);
    CHECK(check_monotonicity(materialize(build_compromise(f.walk, f.open, n), f.universe)).passed);
  }
  CHECK(check_monotonicity(materialize(PriorityOrdering::Identity(1), letters(1))).passed);
}

TEST_CASE("IAA examples") {
  const cli::BostonFixture f = cli::walk_open_fixture();
  const Universe& u = f.universe;
  const ChoiceTable wo = materialize(build_walk_open(f.walk, f.open, 5), u);
  CHECK_FALSE(check_iaa(wo).passed);
  CHECK(witness_reproduces(wo, kIaa, Witness{{{set(u, "acde"), 2}, {set(u, "abcd"), 2}}, {}, 0}));
  CHECK(rejected(wo, {set(u, "acde"), 3}) == set(u, "d"));
  CHECK(rejected(wo, {set(u, "abcd"), 3}) == set(u, "c"));
  CHECK(check_iaa(materialize(build_rotating(f.walk, f.open, 5), u)).passed);

  const cli::BostonFixture g = cli::compromise_fixture();
  const Universe& v = g.universe;
  const ChoiceTable comp = materialize(build_compromise(g.walk, g.open, 6), v);
  CHECK_FALSE(check_iaa(comp).passed);
  CHECK(witness_reproduces(comp, kIaa, Witness{{{set(v, "abcxy"), 3}, {set(v, "abdxy"), 3}}, {}, 0}));
  CHECK(rejected(comp, {set(v, "abcxy"), 4}) == set(v, "y"));
  CHECK(rejected(comp, {set(v, "abdxy"), 4}) == set(v, "x"));
}

TEST_CASE("IAA witnesses are canonical-minimal and stable") {
  const cli::BostonFixture f = cli::walk_open_fixture();
  const ChoiceTable wo = materialize(build_walk_open(f.walk, f.open, 5), f.universe);
  const AxiomReport r = check_iaa(wo);
  REQUIRE(r.witness.has_value());
  const Witness w = *r.witness;
  CHECK(w.problems[0].set < w.problems[1].set);
  for (int k = 0; k < 3; ++k) CHECK(check_iaa(wo).witness == w);
}

TEST_CASE("revealed preference examples") {
  const ChoiceTable ex = cli::cwarp_two_cycle();
  const Universe& u = ex.universe();
  const RevealedPreference r = revealed_pref(ex, 2);
  CHECK(r.prefers(u.index_of("b"), u.index_of("c")));
  CHECK(r.prefers(u.index_of("c"), u.index_of("b")));
  CHECK_THROWS_AS(revealed_pref(ex, 1), Error);
  CHECK_THROWS_AS(revealed_pref(materialize(PriorityOrdering::Identity(1), letters(1)), 1), Error);

  const Universe abc = make_universe({"a", "b", "c"});
  const ChoiceTable resp = materialize(ordering(abc, "abc"), abc);
  const RevealedPreference r2 = revealed_pref(resp, 2);
  for (Alternative a = 0; a < 3; ++a) {
    CHECK_FALSE(r2.prefers(a, a));
    for (Alternative b = 0; b < 3; ++b) {
      if (r2.prefers(a, b)) CHECK(a < b);
    }
  }
  CHECK(r2.prefers(1, 2));
  CHECK(r2.edge_count() == 1);
  const auto brute = oracle::revealed(resp, 2);
  for (Alternative a = 0; a < 3; ++a) {
    for (Alternative b = 0; b < 3; ++b) CHECK(r2.prefers(a, b) == brute[a][b]);
  }
}

TEST_CASE("CWARP examples") {
  const ChoiceTable ex = cli::cwarp_two_cycle();
  const AxiomReport r = check_cwarp(ex);
  REQUIRE_FALSE(r.passed);
  CHECK(r.witness->problems[0].capacity == 2);
  const Universe& u = ex.universe();
  CHECK(witness_reproduces(ex, kCwarp,
                           Witness{{{set(u, "abcd"), 2}, {set(u, "abce"), 2}},
                                   {u.index_of("b"), u.index_of("c")},
                                   0}));
  CHECK_FALSE(check_cwarp(cli::necessity_cwarp()).passed);
}

TEST_CASE("WrARP and CWrARP examples") {
  const Universe abc = make_universe({"a", "b", "c"});
  const ChoiceTable resp = materialize(ordering(abc, "abc"), abc);
  CHECK(check_wrarp(resp).passed);
  CHECK(check_cwrarp(resp).passed);
  const ChoiceTable per_q = materialize(
      CapacityWiseLists({{ordering(abc, "abc")},
                         {ordering(abc, "cba"), ordering(abc, "cba")},
                         {ordering(abc, "bca"), ordering(abc, "bca"), ordering(abc, "bca")}}),
      abc);
  CHECK(check_wrarp(per_q).passed);
  CHECK_FALSE(check_cwrarp(per_q).passed);
  CHECK_FALSE(check_wrarp(cli::cwarp_two_cycle()).passed);
  const cli::BostonFixture f = cli::walk_open_fixture();
  const AxiomReport rot = check_cwrarp(materialize(build_rotating(f.walk, f.open, 5), f.universe));
  CHECK_FALSE(rot.passed);
  CHECK(rot.witness.has_value());
  CHECK(check_cwrarp(materialize(PriorityOrdering::Identity(1), letters(1))).passed);
}

TEST_CASE("insertion examples") {
  const cli::BostonFixture f = cli::walk_open_fixture();
  CHECK(check_insertion(build_walk_open(f.walk, f.open, 5)).passed);
  CHECK(check_insertion(build_rotating(f.walk, f.open, 5)).passed);
  const PriorityOrdering w = PriorityOrdering::Identity(3);
  const PriorityOrdering o({2, 1, 0});
  const AxiomReport bad = check_insertion(CapacityWiseLists({{w}, {w, o}, {o, w, w}}));
  CHECK_FALSE(bad.passed);
  CHECK(bad.witness->capacity == 3);
  CHECK(obtained_by_insertion({w, o}, {w, w, o}));
  CHECK_FALSE(obtained_by_insertion({w, o}, {o, w, w}));
}

TEST_CASE("the dispatcher refuses list and family axioms on plain tables") {
  const ChoiceTable c = materialize(PriorityOrdering::Identity(2), letters(2));
  CHECK_THROWS_AS(check(Axiom::kInsertion, c), Error);
  CHECK_THROWS_AS(check(Axiom::kCsarp, c), Error);
}

TEST_CASE("parallel checkers are deterministic") {
  const cli::BostonFixture f = cli::compromise_fixture();
  const ChoiceTable c = materialize(build_compromise(f.walk, f.open, 6), f.universe);
  for (Axiom a : {Axiom::kCwarpAlternative, Axiom::kWrarp, Axiom::kCwrarp,
                  Axiom::kPathIndependence}) {
    const AxiomReport one = check(a, c, {1});
    const AxiomReport many = check(a, c, {8});
    CHECK(one.passed == many.passed);
    CHECK(one.witness == many.witness);
    CHECK(one.problems_checked == many.problems_checked);
  }
}

TEST_CASE("axiom names round-trip") {
  for (Axiom a : {kCf, kGs, kMon, kIaa, kCwarp, Axiom::kCwarpAlternative, Axiom::kWrarp,
                  Axiom::kCwrarp, Axiom::kPathIndependence, Axiom::kInsertion,
                  Axiom::kFCapacityFilling, Axiom::kCsarp}) {
    CHECK(axiom_from_name(axiom_name(a)) == a);
  }
  CHECK(axiom_from_name("cf") == kCf);
  CHECK_FALSE(axiom_from_name("nonsense").has_value());
}

TEST_CASE("newly accepted alternatives") {
  const ChoiceTable a1 = cli::necessity_capacity_filling();
  const Universe& u = a1.universe();
  CHECK(newly_accepted(a1, set(u, "ac"), 1).empty());
  CHECK(newly_accepted(a1, set(u, "bc"), 1) == set(u, "c"));
}
