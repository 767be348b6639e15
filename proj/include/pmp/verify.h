// Copyright 2026 The pmpspec Authors.
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

#ifndef PMP_VERIFY_H_
#define PMP_VERIFY_H_

#include <string>
#include <vector>

namespace pmp {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Runs the invariant suite over built-in fixtures: spectra of cycles and
// biregular graphs, Wilf/Hoffman sandwiches, bipartiteness equivalences,
// block and two-set inequalities, Tutte/matching agreement, mass transport,
// peeling colorings, the rotation demo and limit spectra. A few seconds.
std::vector<CheckResult> RunVerificationSuite();

}  // namespace pmp

#endif  // PMP_VERIFY_H_
