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

#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "lexchoice/cli/commands.h"
#include "lexchoice/cli/fixtures.h"
#include "lexchoice/cli/io.h"
#include "lexchoice/cli/repro.h"

using namespace lexchoice;
using namespace lexchoice::cli;

namespace {

InputFile file(const Json& j, const std::string& name = "rule.json") {
  return {j.dump(), name};
}

Json boston(const std::string& kind, const std::string& walk, const std::string& open) {
  Json u = Json::array();
  Json w = Json::array();
  Json o = Json::array();
  for (char c : walk) u.push_back(std::string(1, c));
  for (char c : walk) w.push_back(std::string(1, c));
  for (char c : open) o.push_back(std::string(1, c));
  return {{"universe", u}, {"kind", "boston:" + kind}, {"walk", w}, {"open", o}};
}

Json table_rule(const ChoiceTable& c) {
  Json table = Json::array();
  for (Problem p : enumerate_problems(c.universe())) {
    table.push_back({{"S", set_json(c.universe(), p.set)},
                     {"q", p.capacity},
                     {"C", set_json(c.universe(), c(p.set, p.capacity))}});
  }
  return {{"universe", c.universe().labels()}, {"kind", "table"}, {"table", table}};
}

Json flex_rule() {
  return Json::parse(R"({"universe": ["a1", "a2", "b1"], "kind": "flex",
                         "profile": [["a1", "a2", "b1"], ["a2", "b1", "a1"], ["a1", "a2", "b1"]],
                         "family": [["b1", "a1"], ["a2", "b1"]]})");
}

Json parsed(const CommandResult& r) { return Json::parse(r.out); }

Json structure_json() {
  Json rule = boston("walk_open", "abcde", "ebdca");
  rule.erase("universe");
  return {{"agents", {"a", "b", "c", "d", "e"}}, {"objects", {"x"}}, {"rule", rule}};
}

Json problem_json_for(const std::string& unwilling, int qx) {
  Json r = Json::object();
  for (std::string a : {"a", "b", "c", "d", "e"}) {
    r[a] = a == unwilling ? Json::array() : Json::array({"x"});
  }
  return {{"R", r}, {"q", {{"x", qx}}}};
}

CommonOptions with_jobs(unsigned jobs) {
  CommonOptions o;
  o.run.jobs = jobs;
  return o;
}

}  // namespace

TEST_CASE("diagnostics locate the problem and exit with 2") {
  Json missing = table_rule(materialize(PriorityOrdering::Identity(2), letters(2)));
  missing["table"].erase(missing["table"].begin());
  const CommandResult r = run_check(file(missing), {});
  CHECK(r.exit_code == kExitInputError);
  CHECK(r.err.find("rule.json:/table: missing problem ({a},1)") != std::string::npos);

  Json unknown = boston("rotating", "abc", "cba");
  unknown["walk"][1] = "zz";
  const CommandResult u = run_check(file(unknown), {});
  CHECK(u.exit_code == kExitInputError);
  CHECK(u.err.find("/walk/1") != std::string::npos);

  Json kind = boston("rotating", "abc", "cba");
  kind["kind"] = "boston:sideways";
  CHECK(run_check(file(kind), {}).exit_code == kExitInputError);

  const CommandResult syntax = run_check({"{\n  \"universe\": [\"a\"\n", "broken.json"}, {});
  CHECK(syntax.exit_code == kExitInputError);
  CHECK(syntax.err.find("broken.json:3:") != std::string::npos);

  CheckOptions bad_axiom;
  bad_axiom.axioms = "capacity_filling,bogus";
  CHECK(run_check(file(boston("rotating", "abc", "cba")), bad_axiom).exit_code ==
        kExitInputError);

  Json oversized_c = table_rule(materialize(PriorityOrdering::Identity(2), letters(2)));
  oversized_c["table"][2]["C"] = {"a", "b"};
  CHECK(run_check(file(oversized_c), {}).exit_code == kExitInputError);

  CHECK_THROWS_AS(parse_format("yaml"), InputError);
  CHECK(parse_format("text") == Format::kText);
}

TEST_CASE("LEXICHOICE_JOBS sets the default worker count") {
  ::setenv("LEXICHOICE_JOBS", "3", 1);
  CHECK(default_jobs() == 3);
  ::setenv("LEXICHOICE_JOBS", "zero", 1);
  CHECK_THROWS_AS(default_jobs(), InputError);
  ::setenv("LEXICHOICE_JOBS", "0", 1);
  CHECK_THROWS_AS(default_jobs(), InputError);
  ::unsetenv("LEXICHOICE_JOBS");
  CHECK(default_jobs() == 1);
}

TEST_CASE("rule serialization is canonical") {
  const std::vector<Json> rules = {
      boston("walk_open", "abcde", "ebdca"),
      boston("compromise", "abcdxy", "bcyxda"),
      table_rule(cwarp_two_cycle()),
      Json::parse(R"({"universe": ["c", "a", "b"], "kind": "responsive",
                      "ordering": ["b", "c", "a"]})"),
      Json::parse(R"({"universe": ["a", "b"], "kind": "lexicographic",
                      "profile": [["b", "a"], ["a", "b"]]})"),
      Json::parse(R"({"universe": ["a", "b"], "kind": "capacity_wise",
                      "lists": [[["b", "a"]], [["a", "b"], ["b", "a"]]]})"),
      flex_rule(),
  };
  for (const Json& j : rules) {
    const std::string once = dump(to_json(parse_rule(j)));
    const std::string twice = dump(to_json(parse_rule(Json::parse(once))));
    CHECK(once == twice);
    CHECK(materialize_spec(parse_rule(j)) == materialize_spec(parse_rule(Json::parse(once))));
  }
}

TEST_CASE("check reports") {
  const CommandResult rot = run_check(file(boston("rotating", "abcde", "ebdca")), {});
  CHECK(rot.exit_code == kExitPass);
  const Json report = parsed(rot);
  CHECK(report["passed"] == true);
  CHECK(report["tool"] == "lexchoice");
  CHECK(report["input_digest"].get<std::string>().size() == 64);
  CHECK_FALSE(report.contains("timing_ms"));
  std::vector<std::string> names;
  for (const Json& a : report["axioms"]) names.push_back(a["axiom"]);
  CHECK(names == std::vector<std::string>{"capacity_filling", "gross_substitutes", "monotonicity",
                                          "iaa", "cwarp", "insertion"});

  const CommandResult wo = run_check(file(boston("walk_open", "abcde", "ebdca")), {});
  CHECK(wo.exit_code == kExitFail);
  const Json failing = parsed(wo);
  for (const Json& a : failing["axioms"]) {
    const bool expect_fail = a["axiom"] == "iaa" || a["axiom"] == "cwarp";
    CHECK(a["passed"] == !expect_fail);
    CHECK(a["witness"].is_null() == !expect_fail);
  }
  const Json& iaa = failing["axioms"][3];
  REQUIRE(iaa["axiom"] == "iaa");
  CHECK(iaa["witness"]["problems"][0]["S"] == Json({"a", "b", "c", "d"}));
  CHECK(iaa["witness"]["problems"][0]["C"] == Json({"a", "b"}));
  CHECK(iaa["witness"]["problems"][1]["S"] == Json({"a", "c", "d", "e"}));
  CHECK(iaa["witness"]["problems"][1]["C"] == Json({"a", "e"}));

  CheckOptions full;
  full.axioms = "full";
  const Json all = parsed(run_check(file(boston("rotating", "abcde", "ebdca")), full));
  CHECK(all["axioms"].size() == 10);

  CheckOptions timed;
  timed.common.timing = true;
  CHECK(parsed(run_check(file(boston("rotating", "abc", "cba")), timed)).contains("timing_ms"));

  CheckOptions text;
  text.common.format = Format::kText;
  const CommandResult t = run_check(file(boston("walk_open", "abcde", "ebdca")), text);
  CHECK(t.out.find("result: FAIL") != std::string::npos);
}

TEST_CASE("constrained rules use the feasibility axioms") {
  const Json flex = flex_rule();
  const CommandResult r = run_check(file(flex), {});
  CHECK(r.exit_code == kExitPass);
  std::vector<std::string> names;
  const Json report = parsed(r);
  for (const Json& a : report["axioms"]) names.push_back(a["axiom"]);
  CHECK(names == std::vector<std::string>{"f_capacity_filling", "monotonicity", "csarp"});
  const Json e = parsed(run_extract(file(flex), {}));
  CHECK(e["method"] == "flex");
  CHECK(e["verified"] == true);
}

TEST_CASE("witness replay") {
  const InputFile rule = file(boston("walk_open", "abcde", "ebdca"));
  const CommandResult report = run_check(rule, {});
  CheckOptions replay;
  replay.replay = InputFile{report.out, "report.json"};
  const CommandResult ok = run_check(rule, replay);
  CHECK(ok.exit_code == kExitPass);
  const Json replays = parsed(ok)["replays"];
  REQUIRE(replays.size() == 2);
  for (const Json& r : replays) CHECK(r["reproduces"] == true);

  Json tampered = Json::parse(report.out);
  Json& w = tampered["axioms"][3]["witness"];
  std::swap(w["problems"][0], w["problems"][1]);
  w["problems"][1]["S"] = {"a", "b", "c", "d", "e"};
  replay.replay = InputFile{tampered.dump(), "tampered.json"};
  const CommandResult bad = run_check(rule, replay);
  CHECK(bad.exit_code == kExitFail);

  replay.replay = InputFile{"{\"axiom\": \"iaa\"}", "partial.json"};
  CHECK(run_check(rule, replay).exit_code == kExitInputError);
}

TEST_CASE("extract") {
  const Json rot = parsed(run_extract(file(boston("rotating", "abcde", "ebdca")), {}));
  CHECK(rot["method"] == "lexicographic");
  CHECK(rot["verified"] == true);
  CHECK(rot["profile"].size() == 5);
  CHECK(rot["profile"][0] == Json({"a", "b", "c", "d", "e"}));

  const Universe u = make_universe({"a", "b", "c"});
  const Json resp = parsed(run_extract(file(table_rule(materialize(ordering(u, "bca"), u))), {}));
  CHECK(resp["method"] == "responsive");
  for (const Json& o : resp["profile"]) CHECK(o == Json({"b", "c", "a"}));

  const CommandResult ex = run_extract(file(table_rule(cwarp_two_cycle())), {});
  CHECK(ex.exit_code == kExitFail);
  const Json fail = parsed(ex);
  CHECK(fail["extracted"] == false);
  CHECK(fail.contains("failure"));
  std::vector<std::string> failing;
  for (const Json& d : fail["diagnosis"]) failing.push_back(d["axiom"]);
  CHECK(std::find(failing.begin(), failing.end(), "cwarp") != failing.end());
}

TEST_CASE("da") {
  const InputFile s = file(structure_json(), "structure.json");
  DaOptions opts;
  opts.trace = true;
  const CommandResult r = run_da(s, file(problem_json_for("b", 2), "problem.json"), opts);
  CHECK(r.exit_code == kExitPass);
  const Json out = parsed(r);
  CHECK(out["allocation"]["a"] == "x");
  CHECK(out["allocation"]["e"] == "x");
  CHECK(out["allocation"]["c"] == "∅");
  CHECK(out["D"]["x"] == Json({"c", "d"}));
  CHECK(out["rounds"].size() <= 6);
  CHECK(parsed(run_da(s, file(problem_json_for("b", 3)), {}))["D"]["x"] == Json({"d"}));
  CHECK(parsed(run_da(s, file(problem_json_for("e", 3)), {}))["D"]["x"] == Json({"c"}));

  Json nobody = problem_json_for("b", 2);
  for (auto& [agent, list] : nobody["R"].items()) list = Json::array();
  const Json idle = parsed(run_da(s, file(nobody), {}));
  for (const auto& [agent, object] : idle["allocation"].items()) {
    CHECK(object == "∅");
  }

  CHECK(run_da(s, std::nullopt, {}).exit_code == kExitInputError);
  Json bad = problem_json_for("b", 2);
  bad["q"]["x"] = 9;
  CHECK(run_da(s, file(bad), {}).exit_code == kExitInputError);

  DaOptions props;
  props.properties = true;
  const CommandResult p = run_da(s, std::nullopt, props);
  CHECK(p.exit_code == kExitFail);
  const Json pr = parsed(p)["properties"];
  CHECK(pr["exhaustive"] == true);
  for (const Json& res : pr["results"]) {
    const bool isd = res["property"] == "isd" || res["property"] == "weak_isd";
    CHECK(res["passed"] == !isd);
  }
}

TEST_CASE("boston-report") {
  const CommandResult r = run_boston_report({});
  CHECK(r.exit_code == kExitPass);
  const Json out = parsed(r);
  REQUIRE(out["rules"].size() == 4);
  for (const Json& row : out["rules"]) {
    CHECK(row["insertion"] == true);
    CHECK(row["boston_requirement"] == true);
    const bool rotating = row["rule"] == "rotating";
    CHECK(row["axioms"]["capacity_filling"] == true);
    CHECK(row["axioms"]["gross_substitutes"] == true);
    CHECK(row["axioms"]["monotonicity"] == true);
    CHECK(row["axioms"]["iaa"] == rotating);
    CHECK(row["axioms"]["cwarp"] == rotating);
  }

  BostonOptions same;
  same.walk = InputFile{"[\"a\",\"b\",\"c\"]", "w.json"};
  same.open = InputFile{"[\"a\",\"b\",\"c\"]", "o.json"};
  const Json same_report = parsed(run_boston_report(same));
  for (const Json& row : same_report["rules"]) {
    for (const auto& [name, pass] : row["axioms"].items()) CHECK(pass == true);
  }

  BostonOptions one;
  one.n = 1;
  const Json one_report = parsed(run_boston_report(one));
  for (const Json& row : one_report["rules"]) {
    for (const auto& [name, pass] : row["axioms"].items()) CHECK(pass == true);
  }

  BostonOptions half;
  half.walk = InputFile{"[\"a\",\"b\"]", "w.json"};
  CHECK(run_boston_report(half).exit_code == kExitInputError);
}

TEST_CASE("repro") {
  CHECK(repro_case_ids().size() == 13);
  const CommandResult all = run_repro("all", {});
  CHECK(all.exit_code == kExitPass);
  const Json out = parsed(all);
  CHECK(out["cases"].size() == 13);
  for (const Json& c : out["cases"]) CHECK(c["passed"] == true);
  const Json c = parsed(run_repro("walk_open_satisfied_demand", {}));
  CHECK(c["cases"].size() == 1);
  CHECK(run_repro("nope", {}).exit_code == kExitInputError);
  for (const std::string& id : repro_case_ids()) CHECK(run_repro_case(id, {}).passed());
}

TEST_CASE("reports are byte-identical across runs and worker counts") {
  CheckOptions one;
  one.axioms = "full";
  CheckOptions four = one;
  four.common.run.jobs = 4;
  const InputFile rule = file(boston("compromise", "abcdxy", "bcyxda"));
  CHECK(run_check(rule, one).out == run_check(rule, four).out);
  CHECK(run_check(rule, one).out == run_check(rule, one).out);
  CHECK(run_repro("all", with_jobs(1)).out == run_repro("all", with_jobs(4)).out);
  CHECK(run_extract(rule, with_jobs(1)).out == run_extract(rule, with_jobs(4)).out);
  DaOptions p1;
  p1.properties = true;
  DaOptions p4 = p1;
  p4.common.run.jobs = 4;
  const InputFile s = file(structure_json());
  CHECK(run_da(s, std::nullopt, p1).out == run_da(s, std::nullopt, p4).out);
  p1.seed = 5;
  p4.seed = 5;
  CHECK(run_da(s, std::nullopt, p1).out == run_da(s, std::nullopt, p4).out);
}
