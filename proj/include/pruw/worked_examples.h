// Copyright 2026 The pruw authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "pruw/permutations.h"
#include "pruw/simulation.h"

namespace pruw {

// The two reference configurations with their fixed permutations:
//   Case1: P=15, B=3, within (2,1,4,5,3), (3,5,2,4,1), (5,2,3,1,4).
//   Case2: P=12, B=3, within (2,4,3,1), (1,3,2,4), (3,1,4,2), inter (2,3,1).
PermutationSet ReferencePermutationsCase1();
PermutationSet ReferencePermutationsCase2();
SimulationConfig ReferenceConfigCase1();  // N=4
SimulationConfig ReferenceConfigCase2();  // N=6

struct ExampleCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Replays every worked mapping, query layout and update placement of the two
// reference configurations.
std::vector<ExampleCheck> VerifyWorkedExamples();

}  // namespace pruw
