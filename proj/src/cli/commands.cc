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

#include "lexchoice/cli/commands.h"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lexchoice/axioms.h"
#include "lexchoice/cli/fixtures.h"
#include "lexchoice/cli/io.h"
#include "lexchoice/cli/repro.h"
#include "lexchoice/feasibility.h"
#include "lexchoice/identify.h"
#include "lexchoice/mechanism.h"
#include "lexchoice/rules.h"

namespace lexchoice::cli {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

Json header(const std::string& digest) {
  return {{"tool", kToolName}, {"version", kToolVersion}, {"input_digest", digest}};
}

CommandResult input_error(const std::string& message) {
  return {kExitInputError, "", "error: " + message + "\n"};
}

CommandResult guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    return input_error(e.what());
  } catch (const Json::exception& e) {
    return input_error(e.what());
  }
}

CommandResult emit(const Json& report, Format format, const std::string& text, bool passed) {
  return {passed ? kExitPass : kExitFail, format == Format::kJson ? dump(report) : text, ""};
}

std::string pass_word(bool passed) { return passed ? "pass" : "FAIL"; }

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string labels_text(const Universe& u, const std::vector<Alternative>& alts) {
  std::string out;
  for (std::size_t k = 0; k < alts.size(); ++k) out += (k ? "," : "") + u.label(alts[k]);
  return out;
}

std::string witness_text(const ChoiceTable& c, const Witness& w) {
  const Universe& u = c.universe();
  std::string out;
  for (const Problem& p : w.problems) {
    out += "      " + u.format(p);
    if (u.in_domain(p)) out += " C=" + u.format(c(p.set, p.capacity));
    out += "\n";
  }
  if (!w.alternatives.empty()) out += "      alternatives " + labels_text(u, w.alternatives) + "\n";
  if (w.capacity > 0) out += "      capacity " + std::to_string(w.capacity) + "\n";
  return out;
}

// --- check -----------------------------------------------------------------

std::vector<Axiom> select_axioms(const std::string& request, const RuleSpec& spec) {
  const bool has_lists = lists_of(spec).has_value();
  std::vector<Axiom> out;
  if (request == "all" || request == "full") {
    if (spec.constrained()) {
      return {Axiom::kFCapacityFilling, Axiom::kMonotonicity, Axiom::kCsarp};
    }
    out = {Axiom::kCapacityFilling, Axiom::kGrossSubstitutes, Axiom::kMonotonicity,
           Axiom::kIrrelevanceOfAcceptedAlternatives, Axiom::kCwarp};
    if (request == "full") {
      out.insert(out.end(), {Axiom::kCwarpAlternative, Axiom::kWrarp, Axiom::kCwrarp,
                             Axiom::kPathIndependence});
    }
    if (has_lists) out.push_back(Axiom::kInsertion);
    return out;
  }
  std::stringstream stream(request);
  std::string name;
  while (std::getline(stream, name, ',')) {
    name.erase(0, name.find_first_not_of(' '));
    name.erase(name.find_last_not_of(' ') + 1);
    if (name.empty()) continue;
    const auto axiom = axiom_from_name(name);
    if (!axiom) throw InputError("--axioms: unknown axiom \"" + name + "\"");
    if (*axiom == Axiom::kInsertion && !has_lists) {
      throw InputError("--axioms: insertion needs a rule given by capacity-wise lists");
    }
    if ((*axiom == Axiom::kFCapacityFilling || *axiom == Axiom::kCsarp) &&
        !spec.constrained()) {
      throw InputError("--axioms: " + name + " needs a rule with a feasibility family");
    }
    if (std::find(out.begin(), out.end(), *axiom) == out.end()) out.push_back(*axiom);
  }
  if (out.empty()) throw InputError("--axioms: no axiom requested");
  return out;
}

struct Materialized {
  RuleSpec spec;
  ChoiceTable table;
  std::optional<FChoiceTable> constrained;
};

// Prefixes semantic diagnostics with the file they refer to.
template <typename Fn>
auto in_file(const InputFile& file, Fn&& fn) {
  const Json j = parse_json(file.text, file.source);
  try {
    return fn(j);
  } catch (const InputError& e) {
    throw InputError(file.source + ":" + e.what());
  }
}

Materialized load_rule(const InputFile& rule, RunOptions run) {
  RuleSpec spec = in_file(rule, [](const Json& j) { return parse_rule(j); });
  if (spec.constrained()) {
    FChoiceTable f = materialize_constrained(spec, run);
    ChoiceTable t = f.table();
    return {std::move(spec), std::move(t), std::move(f)};
  }
  ChoiceTable t = materialize_spec(spec, run);
  return {std::move(spec), std::move(t), std::nullopt};
}

AxiomReport run_axiom(Axiom axiom, const Materialized& m, RunOptions run) {
  switch (axiom) {
    case Axiom::kInsertion:
      return check_insertion(*lists_of(m.spec));
    case Axiom::kFCapacityFilling:
      return check_f_capacity_filling(*m.constrained);
    case Axiom::kCsarp:
      return check_csarp(*m.constrained);
    default:
      return check(axiom, m.table, run);
  }
}

bool replays(Axiom axiom, const Materialized& m, const Witness& w) {
  if (axiom == Axiom::kInsertion) {
    const auto lists = lists_of(m.spec);
    if (!lists) throw InputError("an insertion witness needs a rule given by capacity-wise lists");
    const Capacity q = w.capacity;
    return q >= 2 && q <= lists->universe_size() &&
           !obtained_by_insertion(lists->for_capacity(q - 1), lists->for_capacity(q));
  }
  if (m.constrained) return witness_reproduces(*m.constrained, axiom, w);
  if (axiom == Axiom::kFCapacityFilling || axiom == Axiom::kCsarp) {
    throw InputError(std::string(axiom_name(axiom)) + " witness needs a feasibility family");
  }
  return witness_reproduces(m.table, axiom, w);
}

CommandResult replay_witnesses(const InputFile& rule, const Materialized& m,
                               const InputFile& replay, Format format) {
  const Json doc = parse_json(replay.text, replay.source);
  std::vector<std::pair<Json, std::string>> entries;
  if (doc.is_object() && doc.contains("axioms") && doc["axioms"].is_array()) {
    for (std::size_t k = 0; k < doc["axioms"].size(); ++k) {
      entries.emplace_back(doc["axioms"][k], "/axioms/" + std::to_string(k));
    }
  } else if (doc.is_array()) {
    for (std::size_t k = 0; k < doc.size(); ++k) entries.emplace_back(doc[k], "/" + std::to_string(k));
  } else {
    entries.emplace_back(doc, "");
  }
  Json results = Json::array();
  std::string text;
  bool all = true;
  for (const auto& [entry, path] : entries) {
    if (!entry.is_object() || !entry.contains("axiom") || !entry["axiom"].is_string()) {
      throw InputError(replay.source + ":" + (path.empty() ? "/" : path) +
                       ": expected an object with \"axiom\" and \"witness\"");
    }
    if (!entry.contains("witness") || entry["witness"].is_null()) continue;
    const std::string name = entry["axiom"].get<std::string>();
    const auto axiom = axiom_from_name(name);
    if (!axiom) throw InputError(replay.source + ":" + path + "/axiom: unknown axiom \"" + name + "\"");
    const Witness w = parse_witness(m.spec.universe, entry["witness"], path + "/witness");
    const bool ok = replays(*axiom, m, w);
    all = all && ok;
    results.push_back({{"axiom", axiom_name(*axiom)}, {"reproduces", ok}});
    text += "  " + pad(std::string(axiom_name(*axiom)), 20) + (ok ? "reproduces" : "DOES NOT REPRODUCE") +
            "\n";
  }
  if (results.empty()) throw InputError(replay.source + ": no witness to replay");
  Json report = header(sha256_hex(rule.text));
  report["replay_digest"] = sha256_hex(replay.text);
  report["replays"] = std::move(results);
  report["passed"] = all;
  return emit(report, format, "replay " + replay.source + "\n" + text + "result: " + pass_word(all) + "\n",
              all);
}

// --- da --------------------------------------------------------------------

Json agent_sets_json(const ChoiceStructure& cs, const std::vector<ChoiceSet>& per_object) {
  Json out = Json::object();
  for (Object x = 0; x < cs.object_count(); ++x) {
    out[cs.objects().name(x)] = set_json(cs.agents(), per_object[x]);
  }
  return out;
}

std::string agent_sets_text(const ChoiceStructure& cs, const std::vector<ChoiceSet>& per_object) {
  std::string out;
  for (Object x = 0; x < cs.object_count(); ++x) {
    out += (x ? " " : "") + cs.objects().name(x) + "=" + cs.agents().format(per_object[x]);
  }
  return out;
}

MechanismSpace choose_space(const ChoiceStructure& cs, const DaOptions& opts) {
  constexpr double kExhaustiveBudget = 200000;
  const int n = cs.agent_count();
  const int m = cs.object_count();
  double relations = 1;
  for (int k = 2; k <= m + 1; ++k) relations *= k;
  double size = 1;
  for (int i = 0; i < n; ++i) size *= relations;
  for (int x = 0; x < m; ++x) size *= n + 1;
  if (!opts.seed && size <= kExhaustiveBudget) return exhaustive_space(n, m);
  return sampled_space(n, m, opts.samples, opts.seed.value_or(0));
}

// --- boston-report ----------------------------------------------------------

std::vector<std::string> label_list(const InputFile& file) {
  const Json j = parse_json(file.text, file.source);
  if (!j.is_array()) throw InputError(file.source + ":/: expected an array of labels");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_string()) {
      throw InputError(file.source + ":/" + std::to_string(k) + ": expected a string");
    }
    out.push_back(j[k].get<std::string>());
  }
  return out;
}

BostonFixture boston_inputs(const BostonOptions& opts) {
  if (opts.walk.has_value() != opts.open.has_value()) {
    throw InputError("--walk and --open must be given together");
  }
  std::vector<std::string> walk;
  std::vector<std::string> open;
  if (opts.walk) {
    walk = label_list(*opts.walk);
    open = label_list(*opts.open);
  } else {
    const BostonFixture f = compromise_fixture();
    for (Alternative a : f.walk.order()) walk.push_back(f.universe.label(a));
    for (Alternative a : f.open.order()) open.push_back(f.universe.label(a));
  }
  std::vector<std::string> sorted_walk = walk;
  std::vector<std::string> sorted_open = open;
  std::sort(sorted_walk.begin(), sorted_walk.end());
  std::sort(sorted_open.begin(), sorted_open.end());
  if (sorted_walk != sorted_open) {
    throw InputError("the walk and open orderings must rank the same labels");
  }
  if (opts.n) {
    if (*opts.n < 1 || *opts.n > static_cast<int>(walk.size())) {
      throw InputError("--n must lie in 1.." + std::to_string(walk.size()));
    }
    walk.resize(static_cast<std::size_t>(*opts.n));
    std::erase_if(open, [&](const std::string& l) {
      return std::find(walk.begin(), walk.end(), l) == walk.end();
    });
  }
  Universe u(walk);
  std::vector<Alternative> o;
  for (const std::string& l : open) o.push_back(u.index_of(l));
  PriorityOrdering w = PriorityOrdering::Identity(u.size());
  return {u, std::move(w), PriorityOrdering(std::move(o))};
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::kJson;
  if (name == "text") return Format::kText;
  throw InputError("--format must be json or text, got \"" + name + "\"");
}

unsigned default_jobs() {
  const char* value = std::getenv("LEXICHOICE_JOBS");
  if (value == nullptr || *value == '\0') return 1;
  char* end = nullptr;
  const long jobs = std::strtol(value, &end, 10);
  if (*end != '\0' || jobs < 1 || jobs > 1024) {
    throw InputError("LEXICHOICE_JOBS must be an integer in 1..1024, got \"" +
                     std::string(value) + "\"");
  }
  return static_cast<unsigned>(jobs);
}

InputFile read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream text;
  text << in.rdbuf();
  return {text.str(), path};
}

CommandResult run_check(const InputFile& rule, const CheckOptions& opts) {
  return guarded([&] {
    const auto start = Clock::now();
    const Materialized m = load_rule(rule, opts.common.run);
    const double load_ms = elapsed_ms(start);
    if (opts.replay) return replay_witnesses(rule, m, *opts.replay, opts.common.format);

    const std::vector<Axiom> axioms = select_axioms(opts.axioms, m.spec);
    const Universe& u = m.spec.universe;
    Json results = Json::array();
    Json timings = Json::object();
    std::string text = std::string(kToolName) + " " + kToolVersion + " check " + rule.source +
                       "\n  kind " + std::string(kind_name(m.spec.kind)) + ", universe " +
                       u.format(u.all()) + "\n";
    bool all = true;
    for (Axiom axiom : axioms) {
      const auto t0 = Clock::now();
      const AxiomReport r = run_axiom(axiom, m, opts.common.run);
      timings[std::string(axiom_name(axiom))] = elapsed_ms(t0);
      all = all && r.passed;
      results.push_back({{"axiom", axiom_name(axiom)},
                         {"passed", r.passed},
                         {"problems_checked", r.problems_checked},
                         {"witness", r.witness ? witness_json(m.table, *r.witness) : Json()}});
      text += "  " + pad(std::string(axiom_name(axiom)), 20) + pad(pass_word(r.passed), 6) +
              std::to_string(r.problems_checked) + " checked\n";
      if (r.witness) text += "    witness\n" + witness_text(m.table, *r.witness);
    }
    Json report = header(sha256_hex(rule.text));
    report["kind"] = kind_name(m.spec.kind);
    report["universe"] = u.labels();
    report["axioms"] = std::move(results);
    report["passed"] = all;
    if (opts.common.timing) {
      timings["materialize"] = load_ms;
      report["timing_ms"] = std::move(timings);
    }
    text += "result: " + pass_word(all) + "\n";
    return emit(report, opts.common.format, text, all);
  });
}

CommandResult run_extract(const InputFile& rule, const CommonOptions& opts) {
  return guarded([&] {
    const auto start = Clock::now();
    const Materialized m = load_rule(rule, opts.run);
    const Universe& u = m.spec.universe;
    Json report = header(sha256_hex(rule.text));
    report["kind"] = kind_name(m.spec.kind);
    report["universe"] = u.labels();
    std::string text = std::string(kToolName) + " " + kToolVersion + " extract " + rule.source +
                       "\n";

    std::optional<PriorityProfile> profile;
    std::optional<ExtractionFailure> failure;
    std::string method;
    bool verified = false;
    if (m.constrained) {
      method = "flex";
      const auto e = extract_flex_profile(*m.constrained);
      if (e.ok()) {
        profile = e.value();
        verified = materialize_flex(*profile, m.constrained->family(), u, opts.run).table() ==
                   m.table;
      } else {
        failure = e.failure();
      }
    } else {
      const auto responsive = extract_responsive(m.table);
      if (responsive.ok()) {
        method = "responsive";
        profile = PriorityProfile::Constant(responsive.value());
      } else {
        method = "lexicographic";
        const auto e = extract_lex_profile(m.table);
        if (e.ok()) {
          profile = e.value();
        } else {
          failure = e.failure();
        }
      }
      if (profile) verified = materialize(*profile, u, opts.run) == m.table;
    }

    report["method"] = method;
    report["extracted"] = profile.has_value();
    if (profile) {
      report["profile"] = profile_json(u, *profile);
      report["verified"] = verified;
      text += "  method " + method + "\n  profile\n";
      for (int t = 0; t < profile->size(); ++t) {
        text += "    " + std::to_string(t + 1) + ": " +
                labels_text(u, (*profile)[static_cast<std::size_t>(t)].order()) + "\n";
      }
      text += "  re-materialization " + std::string(verified ? "identical" : "DIFFERS") + "\n";
    } else {
      Json fail = {{"step", failure->step}, {"message", failure->message}};
      fail["problem"] = failure->problem ? problem_json(u, *failure->problem) : Json();
      report["failure"] = std::move(fail);
      text += "  extraction failed at " + failure->step + ": " + failure->message + "\n";
      if (failure->problem) text += "    at " + u.format(*failure->problem) + "\n";
      const std::vector<Axiom> axioms = select_axioms("all", m.spec);
      Json diagnosis = Json::array();
      for (Axiom axiom : axioms) {
        const AxiomReport r = run_axiom(axiom, m, opts.run);
        if (r.passed) continue;
        diagnosis.push_back({{"axiom", axiom_name(axiom)},
                             {"witness", r.witness ? witness_json(m.table, *r.witness) : Json()}});
        text += "  violates " + std::string(axiom_name(axiom)) + "\n";
        if (r.witness) text += witness_text(m.table, *r.witness);
      }
      report["diagnosis"] = std::move(diagnosis);
    }
    const bool passed = profile.has_value() && verified;
    report["passed"] = passed;
    if (opts.timing) report["timing_ms"] = {{"total", elapsed_ms(start)}};
    text += "result: " + pass_word(passed) + "\n";
    return emit(report, opts.format, text, passed);
  });
}

CommandResult run_da(const InputFile& structure, const std::optional<InputFile>& problem,
                     const DaOptions& opts) {
  return guarded([&] {
    const auto start = Clock::now();
    if (!problem && !opts.properties) throw InputError("da needs a problem file or --properties");
    const ChoiceStructure cs =
        in_file(structure, [](const Json& j) { return parse_structure(j); });
    Json report = header(sha256_hex(structure.text + (problem ? "\n" + problem->text : "")));
    report["agents"] = cs.agents().labels();
    report["objects"] = cs.objects().names();
    std::string text = std::string(kToolName) + " " + kToolVersion + " da " + structure.source +
                       "\n";
    bool passed = true;

    if (problem) {
      const AllocationProblem p =
          in_file(*problem, [&](const Json& j) { return parse_problem(j, cs); });
      DaTrace trace;
      const Allocation a = da_allocate(cs, p, opts.trace ? &trace : nullptr);
      std::vector<ChoiceSet> demands;
      for (Object x = 0; x < cs.object_count(); ++x) demands.push_back(demand(a, p.preferences, x));
      report["problem"] = problem_json(cs, p);
      report["allocation"] = allocation_json(cs, a);
      report["D"] = agent_sets_json(cs, demands);
      text += "  allocation";
      for (Alternative i = 0; i < cs.agent_count(); ++i) {
        text += " " + cs.agents().label(i) + "->" + cs.objects().name(a[i]);
      }
      text += "\n  demand " + agent_sets_text(cs, demands) + "\n";
      if (opts.trace) {
        Json rounds = Json::array();
        for (std::size_t r = 0; r < trace.rounds.size(); ++r) {
          const DaRound& round = trace.rounds[r];
          rounds.push_back({{"round", r + 1},
                            {"S", agent_sets_json(cs, round.applicants)},
                            {"held", agent_sets_json(cs, round.held)},
                            {"unassigned", set_json(cs.agents(), round.unassigned)}});
          text += "  round " + std::to_string(r + 1) + "  S: " +
                  agent_sets_text(cs, round.applicants) + "  held: " +
                  agent_sets_text(cs, round.held) + "  unassigned " +
                  cs.agents().format(round.unassigned) + "\n";
        }
        report["trace"] = std::move(rounds);
      }
    }

    if (opts.properties) {
      const MechanismSpace space = choose_space(cs, opts);
      const Mechanism da = deferred_acceptance(cs);
      Json results = Json::array();
      text += "  properties over " + space.description + "\n";
      for (MechanismProperty prop :
           {MechanismProperty::kUnavailableTypeInvariance, MechanismProperty::kWeakNonWastefulness,
            MechanismProperty::kResourceMonotonicity, MechanismProperty::kTruncationInvariance,
            MechanismProperty::kStrategyProofness,
            MechanismProperty::kIrrelevanceOfSatisfiedDemand,
            MechanismProperty::kWeakIrrelevanceOfSatisfiedDemand}) {
        const MechanismReport r = check(prop, da, space, opts.common.run);
        passed = passed && r.passed;
        results.push_back({{"property", property_name(prop)},
                           {"passed", r.passed},
                           {"cases_checked", r.cases_checked},
                           {"witness", r.witness ? mechanism_witness_json(cs, *r.witness) : Json()}});
        text += "    " + pad(std::string(property_name(prop)), 28) + pad(pass_word(r.passed), 6) +
                std::to_string(r.cases_checked) + " cases\n";
      }
      report["properties"] = {{"space", space.description},
                              {"exhaustive", space.exhaustive},
                              {"preference_profiles", space.profiles.size()},
                              {"capacity_profiles", space.capacities.size()},
                              {"results", std::move(results)}};
    }
    report["passed"] = passed;
    if (opts.common.timing) report["timing_ms"] = {{"total", elapsed_ms(start)}};
    text += "result: " + pass_word(passed) + "\n";
    return emit(report, opts.common.format, text, passed);
  });
}

CommandResult run_boston_report(const BostonOptions& opts) {
  return guarded([&] {
    const auto start = Clock::now();
    const BostonFixture f = boston_inputs(opts);
    const Universe& u = f.universe;
    const int n = u.size();
    struct Row {
      const char* name;
      CapacityWiseLists (*build)(const PriorityOrdering&, const PriorityOrdering&, int);
    };
    const std::array<Row, 4> rows = {{{"walk_open", build_walk_open},
                                      {"open_walk", build_open_walk},
                                      {"rotating", build_rotating},
                                      {"compromise", build_compromise}}};
    const std::array<Axiom, 5> axioms = {
        Axiom::kCapacityFilling, Axiom::kGrossSubstitutes, Axiom::kMonotonicity,
        Axiom::kIrrelevanceOfAcceptedAlternatives, Axiom::kCwarp};

    std::string digest_input;
    if (opts.walk) digest_input = opts.walk->text + "\n" + opts.open->text;
    digest_input += "\nn=" + std::to_string(n);
    Json report = header(sha256_hex(digest_input));
    report["universe"] = u.labels();
    report["walk"] = ordering_json(u, f.walk);
    report["open"] = ordering_json(u, f.open);
    std::string text = std::string(kToolName) + " " + kToolVersion + " boston-report\n  w " +
                       labels_text(u, f.walk.order()) + "\n  o " +
                       labels_text(u, f.open.order()) + "\n  " + pad("rule", 12);
    for (Axiom a : axioms) text += pad(std::string(axiom_name(a)), 19);
    text += pad("insertion", 11) + "boston_requirement\n";

    Json out_rows = Json::array();
    for (const Row& row : rows) {
      const CapacityWiseLists lists = row.build(f.walk, f.open, n);
      const ChoiceTable table = materialize(lists, u, opts.common.run);
      Json verdicts = Json::object();
      Json witnesses = Json::object();
      text += "  " + pad(row.name, 12);
      for (Axiom a : axioms) {
        const AxiomReport r = check(a, table, opts.common.run);
        verdicts[std::string(axiom_name(a))] = r.passed;
        if (r.witness) witnesses[std::string(axiom_name(a))] = witness_json(table, *r.witness);
        text += pad(pass_word(r.passed), 19);
      }
      const bool insertion = check_insertion(lists).passed;
      const bool requirement = satisfies_boston_requirement(lists, f.walk, f.open);
      text += pad(pass_word(insertion), 11) + pass_word(requirement) + "\n";
      Json list_json = Json::array();
      for (const auto& per_q : lists.lists()) {
        Json entry = Json::array();
        for (const PriorityOrdering& o : per_q) {
          entry.push_back(o == f.walk ? (o == f.open ? "w=o" : "w") : (o == f.open ? "o" : "?"));
        }
        list_json.push_back(std::move(entry));
      }
      out_rows.push_back({{"rule", row.name},
                          {"axioms", std::move(verdicts)},
                          {"insertion", insertion},
                          {"boston_requirement", requirement},
                          {"lists", std::move(list_json)},
                          {"witnesses", std::move(witnesses)}});
    }
    report["rules"] = std::move(out_rows);
    if (opts.common.timing) report["timing_ms"] = {{"total", elapsed_ms(start)}};
    return emit(report, opts.common.format, text, true);
  });
}

CommandResult run_repro(const std::string& id, const CommonOptions& opts) {
  return guarded([&] {
    const auto start = Clock::now();
    std::vector<std::string> ids;
    if (id == "all") {
      ids = repro_case_ids();
    } else {
      ids.push_back(id);
    }
    Json cases = Json::array();
    std::string text = std::string(kToolName) + " " + kToolVersion + " repro " + id + "\n";
    bool all = true;
    for (const std::string& case_id : ids) {
      const ReproResult r = run_repro_case(case_id, opts.run);
      all = all && r.passed();
      cases.push_back(repro_json(r));
      text += "  " + pad(r.id, 32) + pad(pass_word(r.passed()), 6) +
              std::to_string(r.checks.size()) + " checks  " + r.title + "\n";
      for (const ReproCheck& c : r.checks) {
        if (c.passed()) continue;
        text += "    " + c.claim + ": expected " + c.expected.dump() + ", got " +
                c.actual.dump() + "\n";
      }
    }
    Json report = header(sha256_hex("repro " + id));
    report["cases"] = std::move(cases);
    report["passed"] = all;
    if (opts.timing) report["timing_ms"] = {{"total", elapsed_ms(start)}};
    text += "result: " + pass_word(all) + "\n";
    return emit(report, opts.format, text, all);
  });
}

}  // namespace lexchoice::cli
