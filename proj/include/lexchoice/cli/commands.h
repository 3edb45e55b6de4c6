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

// Subcommands of the lexchoice tool, as pure functions from input text to
// report text plus an exit code.

#ifndef LEXCHOICE_CLI_COMMANDS_H_
#define LEXCHOICE_CLI_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "lexchoice/parallel.h"

namespace lexchoice::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInputError = 2;

inline constexpr const char* kToolName = "lexchoice";
inline constexpr const char* kToolVersion = "1.0.0";

struct CommandResult {
  int exit_code = kExitPass;
  std::string out;
  std::string err;
};

enum class Format { kJson, kText };

// Throws InputError unless `name` is "json" or "text".
Format parse_format(const std::string& name);

// Worker count from LEXICHOICE_JOBS, or 1 when unset. Throws InputError on a
// malformed value.
unsigned default_jobs();

struct InputFile {
  std::string text;
  // Name used in diagnostics.
  std::string source;
};

// Throws InputError when the file cannot be read.
InputFile read_input(const std::string& path);

struct CommonOptions {
  Format format = Format::kJson;
  RunOptions run;
  // Adds wall-clock timings; off by default so reports stay reproducible.
  bool timing = false;
};

struct CheckOptions {
  CommonOptions common;
  // "all", "full", or a comma-separated list of axiom names.
  std::string axioms = "all";
  // A report or witness document to replay instead of running checkers.
  std::optional<InputFile> replay;
};

CommandResult run_check(const InputFile& rule, const CheckOptions& opts);

CommandResult run_extract(const InputFile& rule, const CommonOptions& opts);

struct DaOptions {
  CommonOptions common;
  bool trace = false;
  // Checks mechanism properties of deferred acceptance over a problem space.
  bool properties = false;
  // Forces a sampled space with this seed.
  std::optional<std::uint64_t> seed;
  std::size_t samples = 200;
};

// `problem` may be absent only when opts.properties is set.
CommandResult run_da(const InputFile& structure, const std::optional<InputFile>& problem,
                     const DaOptions& opts);

struct BostonOptions {
  CommonOptions common;
  // Label arrays; both absent selects compromise_fixture().
  std::optional<InputFile> walk;
  std::optional<InputFile> open;
  // Restricts to the first n alternatives of the walk ordering.
  std::optional<int> n;
};

CommandResult run_boston_report(const BostonOptions& opts);

CommandResult run_repro(const std::string& id, const CommonOptions& opts);

}  // namespace lexchoice::cli

#endif  // LEXCHOICE_CLI_COMMANDS_H_
