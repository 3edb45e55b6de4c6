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

// Reference rules, orderings and allocation problems used by the repro suite.

#ifndef LEXCHOICE_CLI_FIXTURES_H_
#define LEXCHOICE_CLI_FIXTURES_H_

#include <string>
#include <vector>

#include "lexchoice/core.h"
#include "lexchoice/mechanism.h"
#include "lexchoice/rules.h"

namespace lexchoice::cli {

// Ordering over single-character labels, e.g. ordering(u, "abdc").
PriorityOrdering ordering(const Universe& u, const std::string& chars);
// Set over single-character labels, e.g. set(u, "acd").
ChoiceSet set(const Universe& u, const std::string& chars);

// Responsive for a>b>c>d>e when d is present, else for a>c>b>d>e.
ChoiceTable cwarp_two_cycle();

// Over {a,b,c}: {a} whenever a is present, else responsive for a>b>c.
ChoiceTable necessity_capacity_filling();
// Over {a,b,c,d}: responsive for a>b>c>d at q=1 and b>c>d>a above.
ChoiceTable necessity_monotonicity();
// Over {a,b,c,d}: responsive for a>b>c>d when a is present, else a>b>d>c.
ChoiceTable necessity_cwarp();

// Over {a,b,c}: the a>b>c-best alternative at every capacity.
ChoiceTable independence_capacity_filling();
// Over {a,b,c}: a>b>c-best at q=1 when c is present, else responsive for
// b>a>c.
ChoiceTable independence_gross_substitutes();
// Over {a,b,c}: a>b>c-best at q=1, all of S at q=2 when |S|=2,
// C({a,b,c},2)={b,c}, and all of S at q=3.
ChoiceTable independence_monotonicity();

struct BostonFixture {
  Universe universe;
  PriorityOrdering walk;
  PriorityOrdering open;
};

// {a..e}, w: a>b>c>d>e, o: e>b>d>c>a.
BostonFixture walk_open_fixture();
// The same orderings interchanged.
BostonFixture open_walk_fixture();
// {a,b,c,d,x,y}, w: a>b>c>d>x>y, o: b>c>y>x>d>a.
BostonFixture compromise_fixture();

// Agents {a..e}, one object x, walk-open rule from walk_open_fixture().
ChoiceStructure walk_open_structure();
// Every agent but `unwilling` ranks x above ∅; q_x as given.
AllocationProblem walk_open_problem(const ChoiceStructure& cs, const std::string& unwilling,
                                     Capacity qx);

// Agents {a..e}, objects {x,y,z}, rotating rule from walk_open_fixture().
ChoiceStructure rotating_structure(int objects = 3);

}  // namespace lexchoice::cli

#endif  // LEXCHOICE_CLI_FIXTURES_H_
