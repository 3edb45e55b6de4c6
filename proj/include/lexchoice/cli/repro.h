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

// Replays the built-in reference cases and compares every expected set exactly.

#ifndef LEXCHOICE_CLI_REPRO_H_
#define LEXCHOICE_CLI_REPRO_H_

#include <string>
#include <vector>

#include "lexchoice/cli/io.h"
#include "lexchoice/parallel.h"

namespace lexchoice::cli {

struct ReproCheck {
  std::string claim;
  Json expected;
  Json actual;

  bool passed() const { return expected == actual; }
};

struct ReproResult {
  std::string id;
  std::string title;
  std::vector<ReproCheck> checks;

  bool passed() const;
};

const std::vector<std::string>& repro_case_ids();
// Throws InputError for an unknown id.
ReproResult run_repro_case(const std::string& id, RunOptions opts = {});
Json repro_json(const ReproResult& r);

}  // namespace lexchoice::cli

#endif  // LEXCHOICE_CLI_REPRO_H_
