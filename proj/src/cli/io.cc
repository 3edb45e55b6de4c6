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

#include "lexchoice/cli/io.h"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lexchoice::cli {
namespace {

constexpr std::array<std::pair<RuleKind, std::string_view>, 9> kKinds = {{
    {RuleKind::kLexicographic, "lexicographic"},
    {RuleKind::kResponsive, "responsive"},
    {RuleKind::kCapacityWise, "capacity_wise"},
    {RuleKind::kTable, "table"},
    {RuleKind::kBostonWalkOpen, "boston:walk_open"},
    {RuleKind::kBostonOpenWalk, "boston:open_walk"},
    {RuleKind::kBostonRotating, "boston:rotating"},
    {RuleKind::kBostonCompromise, "boston:compromise"},
    {RuleKind::kFlex, "flex"},
}};

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw InputError((path.empty() ? std::string("/") : path) + ": " + message);
}

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing field \"" + key + "\"");
  return *it;
}

const Json& array_field(const Json& j, const std::string& key, const std::string& path) {
  const Json& v = field(j, key, path);
  if (!v.is_array()) fail(at(path, key), "expected an array");
  return v;
}

const std::string& string_value(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get_ref<const std::string&>();
}

int int_value(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

Alternative label_index(const Universe& u, const Json& j, const std::string& path) {
  const std::string& label = string_value(j, path);
  auto a = u.find(label);
  if (!a) fail(path, "unknown label \"" + label + "\"");
  return *a;
}

Universe parse_universe(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of labels");
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < j.size(); ++k) labels.push_back(string_value(j[k], at(path, k)));
  try {
    return Universe(std::move(labels));
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

PriorityProfile parse_profile(const Universe& u, const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of orderings");
  if (static_cast<int>(j.size()) != u.size()) {
    fail(path, "a profile needs exactly " + std::to_string(u.size()) + " orderings, got " +
                   std::to_string(j.size()));
  }
  std::vector<PriorityOrdering> orderings;
  for (std::size_t k = 0; k < j.size(); ++k) {
    orderings.push_back(parse_ordering(u, j[k], at(path, k)));
  }
  return PriorityProfile(std::move(orderings));
}

CapacityWiseLists parse_lists(const Universe& u, const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of per-capacity lists");
  if (static_cast<int>(j.size()) != u.size()) {
    fail(path, "expected one list per capacity 1.." + std::to_string(u.size()));
  }
  std::vector<std::vector<PriorityOrdering>> lists;
  for (std::size_t q = 0; q < j.size(); ++q) {
    const std::string lp = at(path, q);
    if (!j[q].is_array() || j[q].size() != q + 1) {
      fail(lp, "the list for capacity " + std::to_string(q + 1) + " needs " +
                   std::to_string(q + 1) + " orderings");
    }
    std::vector<PriorityOrdering> list;
    for (std::size_t t = 0; t < j[q].size(); ++t) {
      list.push_back(parse_ordering(u, j[q][t], at(lp, t)));
    }
    lists.push_back(std::move(list));
  }
  return CapacityWiseLists(std::move(lists));
}

ChoiceTable parse_table(const Universe& u, const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of {S, q, C} records");
  std::vector<ChoiceSet> entries(u.problem_count());
  std::vector<bool> seen(u.problem_count(), false);
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string rp = at(path, k);
    const ChoiceSet s = parse_set(u, field(j[k], "S", rp), at(rp, "S"));
    const int q = int_value(field(j[k], "q", rp), at(rp, "q"));
    const ChoiceSet c = parse_set(u, field(j[k], "C", rp), at(rp, "C"));
    if (s.empty()) fail(at(rp, "S"), "choice sets must be nonempty");
    if (q < 1 || q > u.size()) fail(at(rp, "q"), "capacity outside 1.." + std::to_string(u.size()));
    const Problem p{s, q};
    if (!c.subset_of(s)) fail(at(rp, "C"), "C" + u.format(p) + " is not a subset of S");
    if (c.size() > q) fail(at(rp, "C"), "C" + u.format(p) + " exceeds the capacity");
    const std::size_t index = u.problem_index(p);
    if (seen[index]) fail(rp, "duplicate problem " + u.format(p));
    seen[index] = true;
    entries[index] = c;
  }
  for (Problem p : enumerate_problems(u)) {
    if (!seen[u.problem_index(p)]) fail(path, "missing problem " + u.format(p));
  }
  return ChoiceTable(u, std::move(entries));
}

FeasibilityFamily parse_family(const Universe& u, const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of maximal feasible sets");
  std::vector<ChoiceSet> sets;
  for (std::size_t k = 0; k < j.size(); ++k) sets.push_back(parse_set(u, j[k], at(path, k)));
  return make_family(u, sets);
}

Json table_json(const ChoiceTable& c) {
  Json out = Json::array();
  for (Problem p : enumerate_problems(c.universe())) {
    out.push_back({{"S", set_json(c.universe(), p.set)},
                   {"q", p.capacity},
                   {"C", set_json(c.universe(), c(p.set, p.capacity))}});
  }
  return out;
}

Json lists_json(const Universe& u, const CapacityWiseLists& lists) {
  Json out = Json::array();
  for (const auto& list : lists.lists()) {
    Json l = Json::array();
    for (const PriorityOrdering& o : list) l.push_back(ordering_json(u, o));
    out.push_back(std::move(l));
  }
  return out;
}

}  // namespace

Json parse_json(const std::string& text, std::string_view source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < end; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    const std::size_t colon = what.rfind(": ");
    if (colon != std::string::npos) what = what.substr(colon + 2);
    throw InputError(std::string(source) + ":" + std::to_string(line) + ":" +
                     std::to_string(column) + ": syntax error: " + what);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string sha256_hex(const std::string& text) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  std::string hex;
  char byte[3];
  for (unsigned int k = 0; k < length; ++k) {
    std::snprintf(byte, sizeof(byte), "%02x", digest[k]);
    hex += byte;
  }
  return hex;
}

std::string_view kind_name(RuleKind k) {
  for (const auto& [kind, name] : kKinds) {
    if (kind == k) return name;
  }
  return "unknown";
}

std::optional<RuleKind> kind_from_name(std::string_view name) {
  for (const auto& [kind, n] : kKinds) {
    if (n == name) return kind;
  }
  return std::nullopt;
}

bool is_boston(RuleKind k) {
  return k == RuleKind::kBostonWalkOpen || k == RuleKind::kBostonOpenWalk ||
         k == RuleKind::kBostonRotating || k == RuleKind::kBostonCompromise;
}

Json set_json(const Universe& u, ChoiceSet s) {
  std::vector<std::string> labels;
  for (Alternative a : s) labels.push_back(u.label(a));
  std::sort(labels.begin(), labels.end());
  return labels;
}

Json ordering_json(const Universe& u, const PriorityOrdering& o) {
  Json out = Json::array();
  for (Alternative a : o.order()) out.push_back(u.label(a));
  return out;
}

Json profile_json(const Universe& u, const PriorityProfile& p) {
  Json out = Json::array();
  for (const PriorityOrdering& o : p.orderings()) out.push_back(ordering_json(u, o));
  return out;
}

Json problem_json(const Universe& u, const Problem& p) {
  return {{"S", set_json(u, p.set)}, {"q", p.capacity}};
}

ChoiceSet parse_set(const Universe& u, const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of labels");
  ChoiceSet s;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const Alternative a = label_index(u, j[k], at(path, k));
    if (s.contains(a)) fail(at(path, k), "duplicate label \"" + u.label(a) + "\"");
    s = s.with(a);
  }
  return s;
}

PriorityOrdering parse_ordering(const Universe& u, const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an ordering (array of labels)");
  std::vector<Alternative> order;
  ChoiceSet seen;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const Alternative a = label_index(u, j[k], at(path, k));
    if (seen.contains(a)) fail(at(path, k), "duplicate label \"" + u.label(a) + "\"");
    seen = seen.with(a);
    order.push_back(a);
  }
  if (seen != u.all()) {
    fail(path, "an ordering must rank all of " + u.format(u.all()) + ", missing " +
                   u.format(u.all() - seen));
  }
  return PriorityOrdering(std::move(order));
}

RuleSpec parse_rule(const Json& j, const std::optional<Universe>& agents,
                    const std::string& path) {
  if (!j.is_object()) fail(path, "expected a rule object");
  std::optional<Universe> universe = agents;
  if (j.contains("universe")) {
    Universe declared = parse_universe(j["universe"], at(path, "universe"));
    if (agents && !(declared == *agents)) {
      fail(at(path, "universe"), "must match the agents of the structure");
    }
    universe = std::move(declared);
  }
  if (!universe) fail(path, "missing field \"universe\"");
  const Universe& u = *universe;

  const std::string& kind_text = string_value(field(j, "kind", path), at(path, "kind"));
  const auto kind = kind_from_name(kind_text);
  if (!kind) fail(at(path, "kind"), "unknown rule kind \"" + kind_text + "\"");

  RuleSpec spec{u, *kind, {}, {}, {}, {}, {}, {}, {}};
  switch (*kind) {
    case RuleKind::kLexicographic:
      spec.profile = parse_profile(u, field(j, "profile", path), at(path, "profile"));
      break;
    case RuleKind::kResponsive:
      spec.ordering = parse_ordering(u, field(j, "ordering", path), at(path, "ordering"));
      break;
    case RuleKind::kCapacityWise:
      spec.lists = parse_lists(u, field(j, "lists", path), at(path, "lists"));
      break;
    case RuleKind::kTable:
      spec.table = parse_table(u, array_field(j, "table", path), at(path, "table"));
      if (j.contains("family")) {
        spec.family = parse_family(u, j["family"], at(path, "family"));
        try {
          FChoiceTable(*spec.table, *spec.family);
        } catch (const Error& e) {
          fail(at(path, "table"), e.what());
        }
      }
      break;
    case RuleKind::kFlex:
      spec.profile = parse_profile(u, field(j, "profile", path), at(path, "profile"));
      spec.family = parse_family(u, field(j, "family", path), at(path, "family"));
      break;
    default:
      spec.walk = parse_ordering(u, field(j, "walk", path), at(path, "walk"));
      spec.open = parse_ordering(u, field(j, "open", path), at(path, "open"));
      break;
  }
  return spec;
}

Json to_json(const RuleSpec& spec) {
  const Universe& u = spec.universe;
  Json out = {{"universe", u.labels()}, {"kind", kind_name(spec.kind)}};
  if (spec.profile) out["profile"] = profile_json(u, *spec.profile);
  if (spec.ordering) out["ordering"] = ordering_json(u, *spec.ordering);
  if (spec.lists) out["lists"] = lists_json(u, *spec.lists);
  if (spec.table) out["table"] = table_json(*spec.table);
  if (spec.walk) out["walk"] = ordering_json(u, *spec.walk);
  if (spec.open) out["open"] = ordering_json(u, *spec.open);
  if (spec.family) {
    Json family = Json::array();
    for (ChoiceSet s : spec.family->maximal_sets()) family.push_back(set_json(u, s));
    out["family"] = std::move(family);
  }
  return out;
}

std::optional<CapacityWiseLists> lists_of(const RuleSpec& spec) {
  const int n = spec.universe.size();
  switch (spec.kind) {
    case RuleKind::kCapacityWise:
      return spec.lists;
    case RuleKind::kBostonWalkOpen:
      return build_walk_open(*spec.walk, *spec.open, n);
    case RuleKind::kBostonOpenWalk:
      return build_open_walk(*spec.walk, *spec.open, n);
    case RuleKind::kBostonRotating:
      return build_rotating(*spec.walk, *spec.open, n);
    case RuleKind::kBostonCompromise:
      return build_compromise(*spec.walk, *spec.open, n);
    default:
      return std::nullopt;
  }
}

ChoiceTable materialize_spec(const RuleSpec& spec, RunOptions opts) {
  const Universe& u = spec.universe;
  switch (spec.kind) {
    case RuleKind::kLexicographic:
      return materialize(*spec.profile, u, opts);
    case RuleKind::kResponsive:
      return materialize(*spec.ordering, u, opts);
    case RuleKind::kTable:
      return *spec.table;
    case RuleKind::kFlex:
      return materialize_flex(*spec.profile, *spec.family, u, opts).table();
    default:
      return materialize(*lists_of(spec), u, opts);
  }
}

FChoiceTable materialize_constrained(const RuleSpec& spec, RunOptions opts) {
  if (!spec.family) throw Error("rule has no feasibility family");
  if (spec.kind == RuleKind::kFlex) {
    return materialize_flex(*spec.profile, *spec.family, spec.universe, opts);
  }
  return FChoiceTable(materialize_spec(spec, opts), *spec.family);
}

Json witness_json(const ChoiceTable& c, const Witness& w) {
  const Universe& u = c.universe();
  Json problems = Json::array();
  for (const Problem& p : w.problems) {
    Json entry = problem_json(u, p);
    if (u.in_domain(p)) entry["C"] = set_json(u, c(p.set, p.capacity));
    problems.push_back(std::move(entry));
  }
  Json alternatives = Json::array();
  for (Alternative a : w.alternatives) alternatives.push_back(u.label(a));
  return {{"problems", std::move(problems)},
          {"alternatives", std::move(alternatives)},
          {"capacity", w.capacity}};
}

Witness parse_witness(const Universe& u, const Json& j, const std::string& path) {
  Witness w;
  const Json& problems = array_field(j, "problems", path);
  for (std::size_t k = 0; k < problems.size(); ++k) {
    const std::string pp = at(at(path, "problems"), k);
    w.problems.push_back({parse_set(u, field(problems[k], "S", pp), at(pp, "S")),
                          int_value(field(problems[k], "q", pp), at(pp, "q"))});
  }
  const Json& alternatives = array_field(j, "alternatives", path);
  for (std::size_t k = 0; k < alternatives.size(); ++k) {
    w.alternatives.push_back(label_index(u, alternatives[k], at(at(path, "alternatives"), k)));
  }
  if (j.contains("capacity")) w.capacity = int_value(j["capacity"], at(path, "capacity"));
  return w;
}

ChoiceStructure parse_structure(const Json& j) {
  Universe agents = parse_universe(field(j, "agents", ""), "/agents");
  const Json& names = array_field(j, "objects", "");
  std::vector<std::string> object_names;
  for (std::size_t k = 0; k < names.size(); ++k) {
    object_names.push_back(string_value(names[k], at("/objects", k)));
  }
  std::optional<ObjectSpace> objects;
  try {
    objects.emplace(std::move(object_names));
  } catch (const Error& e) {
    fail("/objects", e.what());
  }
  auto load = [&](const Json& rule, const std::string& path) {
    RuleSpec spec = parse_rule(rule, agents, path);
    if (spec.constrained()) fail(path, "object rules cannot carry a feasibility family");
    return materialize_spec(spec);
  };
  std::vector<ChoiceTable> tables;
  if (j.contains("rule") == j.contains("rules")) {
    fail("", "give exactly one of \"rule\" (shared) or \"rules\" (per object)");
  }
  if (j.contains("rule")) {
    tables.assign(static_cast<std::size_t>(objects->size()), load(j["rule"], "/rule"));
  } else {
    const Json& rules = j["rules"];
    if (!rules.is_object()) fail("/rules", "expected an object keyed by object name");
    for (const std::string& name : objects->names()) {
      tables.push_back(load(field(rules, name, "/rules"), at("/rules", name)));
    }
    for (const auto& item : rules.items()) {
      if (std::find(objects->names().begin(), objects->names().end(), item.key()) ==
          objects->names().end()) {
        fail(at("/rules", item.key()), "unknown object");
      }
    }
  }
  return ChoiceStructure(std::move(agents), std::move(*objects), std::move(tables));
}

AllocationProblem parse_problem(const Json& j, const ChoiceStructure& cs,
                                const std::string& path) {
  const Universe& agents = cs.agents();
  const ObjectSpace& objects = cs.objects();
  const int m = objects.size();
  AllocationProblem p;
  const Json& r = field(j, "R", path);
  if (!r.is_object()) fail(at(path, "R"), "expected an object keyed by agent");
  for (Alternative i = 0; i < agents.size(); ++i) {
    const std::string rp = at(at(path, "R"), agents.label(i));
    const Json& list = field(r, agents.label(i), at(path, "R"));
    if (!list.is_array()) fail(rp, "expected a ranking (array of objects)");
    std::vector<Object> head;
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string& name = string_value(list[k], at(rp, k));
      Object x = kNull;
      try {
        x = objects.index_of(name);
      } catch (const Error& e) {
        fail(at(rp, k), e.what());
      }
      if (std::find(head.begin(), head.end(), x) != head.end()) {
        fail(at(rp, k), "duplicate object \"" + name + "\"");
      }
      head.push_back(x);
    }
    p.preferences.push_back(PreferenceRelation::Completed(m, head));
  }
  for (const auto& item : r.items()) {
    if (!agents.find(item.key())) fail(at(at(path, "R"), item.key()), "unknown agent");
  }
  p.capacities.assign(static_cast<std::size_t>(m), 0);
  if (j.contains("q")) {
    const Json& q = j["q"];
    if (!q.is_object()) fail(at(path, "q"), "expected an object keyed by object name");
    for (const auto& item : q.items()) {
      const std::string qp = at(at(path, "q"), item.key());
      Object x = kNull;
      try {
        x = objects.index_of(item.key());
      } catch (const Error& e) {
        fail(qp, e.what());
      }
      if (x == kNull) fail(qp, "the null object's capacity is fixed at n");
      const int value = int_value(item.value(), qp);
      if (value < 0 || value > agents.size()) {
        fail(qp, "capacity outside 0.." + std::to_string(agents.size()));
      }
      p.capacities[x] = value;
    }
  }
  return p;
}

Json problem_json(const ChoiceStructure& cs, const AllocationProblem& p) {
  Json r = Json::object();
  for (Alternative i = 0; i < cs.agent_count(); ++i) {
    Json list = Json::array();
    for (Object x : p.preferences[i].order()) list.push_back(cs.objects().name(x));
    r[cs.agents().label(i)] = std::move(list);
  }
  Json q = Json::object();
  for (Object x = 0; x < cs.object_count(); ++x) q[cs.objects().name(x)] = p.capacities[x];
  return {{"R", std::move(r)}, {"q", std::move(q)}};
}

Json allocation_json(const ChoiceStructure& cs, const Allocation& a) {
  Json out = Json::object();
  for (Alternative i = 0; i < cs.agent_count(); ++i) {
    out[cs.agents().label(i)] = cs.objects().name(a[i]);
  }
  return out;
}

Json mechanism_witness_json(const ChoiceStructure& cs, const MechanismWitness& w) {
  Json problems = Json::array();
  for (const AllocationProblem& p : w.problems) problems.push_back(problem_json(cs, p));
  return {{"problems", std::move(problems)},
          {"agent", w.agent >= 0 ? Json(cs.agents().label(w.agent)) : Json(nullptr)},
          {"object", w.object >= 0 ? Json(cs.objects().name(w.object)) : Json(nullptr)}};
}

}  // namespace lexchoice::cli
