// Copyright 2026 The archimesh Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "archimesh/mesh.hpp"
#include "archimesh/solids.hpp"

namespace archimesh {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Invariants of one catalog solid: closed form vs slice sums, convergence
/// of the sums, certified bounds, Monte Carlo containment, mesh closure and
/// accuracy, scaling, and the kind-specific classical identities.
std::vector<CheckResult> verify_kind(SolidKind kind);

/// The twelve acceptance criteria, one result each, in order.
std::vector<CheckResult> acceptance_suite();

/// Every kind followed by the acceptance suite.
std::vector<CheckResult> verify_all();

/// Printability fixtures: a 10 mm solid cube, the same cube hollowed to a
/// 0.5 mm wall, and the solid cube with one facet removed.
TriangleMesh solid_cube_fixture();
TriangleMesh thin_shell_fixture();
TriangleMesh holed_cube_fixture();

}  // namespace archimesh
