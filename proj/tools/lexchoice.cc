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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lexchoice/cli/commands.h"
#include "lexchoice/cli/io.h"

namespace {

using lexchoice::cli::CommandResult;
using lexchoice::cli::CommonOptions;
using lexchoice::cli::InputError;
using lexchoice::cli::InputFile;

struct Flags {
  std::string format = "json";
  unsigned jobs = 0;
  bool timing = false;
  std::string output;
};

void add_common(CLI::App* cmd, Flags& flags) {
  cmd->add_option("--format", flags.format, "Report format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--jobs", flags.jobs, "Worker threads (default: LEXICHOICE_JOBS or 1)")
      ->check(CLI::Range(1U, 1024U));
  cmd->add_flag("--timing", flags.timing, "Include wall-clock timings in the report");
  cmd->add_option("-o,--output", flags.output, "Write the report to a file instead of stdout");
}

CommonOptions common(const Flags& flags) {
  CommonOptions c;
  c.format = lexchoice::cli::parse_format(flags.format);
  c.run.jobs = flags.jobs > 0 ? flags.jobs : lexchoice::cli::default_jobs();
  c.timing = flags.timing;
  return c;
}

std::optional<InputFile> optional_input(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return lexchoice::cli::read_input(path);
}

int finish(const CommandResult& r, const Flags& flags) {
  if (!r.out.empty()) {
    if (flags.output.empty()) {
      std::cout << r.out;
    } else {
      std::ofstream out(flags.output, std::ios::binary);
      if (!out) {
        std::cerr << "error: " << flags.output << ": cannot write file\n";
        return lexchoice::cli::kExitInputError;
      }
      out << r.out;
    }
  }
  std::cerr << r.err;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Capacity-constrained lexicographic choice: axiom checks, extraction, deferred "
               "acceptance"};
  app.set_version_flag("--version", std::string(lexchoice::cli::kToolVersion));
  app.require_subcommand(1);
  Flags flags;

  std::string rule_path;
  std::string axioms = "all";
  std::string replay_path;
  CLI::App* check = app.add_subcommand("check", "Check choice-rule axioms on a rule file");
  check->add_option("rule", rule_path, "Rule file (JSON)")->required();
  check->add_option("--axioms", axioms,
                    "all, full, or a comma-separated list (e.g. cf,gs,mon,iaa,cwarp)");
  check->add_option("--replay-witness", replay_path,
                    "Replay the witnesses in a report or witness file against the rule");
  add_common(check, flags);

  CLI::App* extract = app.add_subcommand("extract", "Extract a priority profile from a rule file");
  extract->add_option("rule", rule_path, "Rule file (JSON)")->required();
  add_common(extract, flags);

  std::string structure_path;
  std::string problem_path;
  bool trace = false;
  bool properties = false;
  std::optional<std::uint64_t> seed;
  std::size_t samples = 200;
  CLI::App* da = app.add_subcommand("da", "Run deferred acceptance");
  da->add_option("structure", structure_path, "Choice structure file (JSON)")->required();
  da->add_option("problem", problem_path, "Allocation problem file (JSON)");
  da->add_flag("--trace", trace, "Include the round-by-round trace");
  da->add_flag("--properties", properties, "Check mechanism properties of deferred acceptance");
  da->add_option("--seed", seed, "Use a sampled problem space with this seed");
  da->add_option("--samples", samples, "Preference profiles drawn for a sampled space")
      ->check(CLI::PositiveNumber);
  add_common(da, flags);

  std::string walk_path;
  std::string open_path;
  std::optional<int> n;
  CLI::App* boston = app.add_subcommand("boston-report", "Compare the four Boston rules");
  boston->add_option("--walk", walk_path, "Walk-zone ordering file (JSON label array)");
  boston->add_option("--open", open_path, "Open ordering file (JSON label array)");
  boston->add_option("--n", n, "Use only the first n alternatives of the walk ordering");
  add_common(boston, flags);

  std::string case_id;
  CLI::App* repro = app.add_subcommand("repro", "Replay the built-in reference cases");
  repro->add_option("case", case_id, "Case id or \"all\"")->required();
  add_common(repro, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lexchoice::cli::kExitInputError;
  }

  try {
    const CommonOptions opts = common(flags);
    if (check->parsed()) {
      lexchoice::cli::CheckOptions c{opts, axioms, optional_input(replay_path)};
      return finish(lexchoice::cli::run_check(lexchoice::cli::read_input(rule_path), c), flags);
    }
    if (extract->parsed()) {
      return finish(lexchoice::cli::run_extract(lexchoice::cli::read_input(rule_path), opts),
                    flags);
    }
    if (da->parsed()) {
      lexchoice::cli::DaOptions d{opts, trace, properties, seed, samples};
      return finish(lexchoice::cli::run_da(lexchoice::cli::read_input(structure_path),
                                           optional_input(problem_path), d),
                    flags);
    }
    if (boston->parsed()) {
      lexchoice::cli::BostonOptions b{opts, optional_input(walk_path), optional_input(open_path),
                                      n};
      return finish(lexchoice::cli::run_boston_report(b), flags);
    }
    return finish(lexchoice::cli::run_repro(case_id, opts), flags);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return lexchoice::cli::kExitInputError;
  }
}
