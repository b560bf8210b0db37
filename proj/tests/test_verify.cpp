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

#include <doctest.h>

#include "archimesh/verify.hpp"

using namespace archimesh;

TEST_CASE("every kind passes its invariant checks") {
  for (SolidKind kind : all_kinds()) {
    for (const auto& r : verify_kind(kind)) {
      CAPTURE(kind_name(kind));
      CAPTURE(r.name);
      CAPTURE(r.detail);
      CHECK(r.passed);
    }
  }
}

TEST_CASE("acceptance suite has twelve criteria") {
  const auto results = acceptance_suite();
  CHECK(results.size() == 12);
  for (const auto& r : results) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("fixtures") {
  CHECK(mesh_stats(solid_cube_fixture()).signed_volume == doctest::Approx(1000));
  CHECK(mesh_stats(thin_shell_fixture()).shell_count == 2);
  CHECK_FALSE(mesh_stats(holed_cube_fixture()).watertight);
}
