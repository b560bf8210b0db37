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

#include <algorithm>
#include <json.hpp>
#include <stdexcept>

#include "archimesh/printcheck.hpp"
#include "archimesh/verify.hpp"

using namespace archimesh;

namespace {

TriangleMesh inverted(TriangleMesh m) {
  for (auto& t : m.triangles) std::swap(t[1], t[2]);
  return m;
}

}  // namespace

TEST_CASE("solid cube passes with a 10 mm wall") {
  const auto report = validate(solid_cube_fixture());
  CHECK(report.watertight);
  CHECK(report.verdict == Verdict::pass);
  REQUIRE(report.min_wall_estimate_mm.has_value());
  CHECK(*report.min_wall_estimate_mm == doctest::Approx(10).epsilon(1e-9));
  CHECK(report.meets_strict_wall);
  CHECK(report.thin_regions.empty());
  CHECK(report.bbox_ok);
  CHECK(report.shell_count == 1);
  CHECK(report.wall_samples == 64);
  CHECK(report.est_material_cm3 == doctest::Approx(1.0));
  CHECK(report.est_cost == doctest::Approx(1.0));
}

TEST_CASE("half-millimetre shell warns") {
  const auto report = validate(thin_shell_fixture());
  CHECK(report.watertight);
  CHECK(report.verdict == Verdict::warn);
  REQUIRE(report.min_wall_estimate_mm.has_value());
  CHECK(*report.min_wall_estimate_mm == doctest::Approx(0.5).epsilon(1e-9));
  CHECK_FALSE(report.thin_regions.empty());
  CHECK(report.shell_count == 2);
  // Hollow: material is the 10^3 - 9^3 mm^3 wall only.
  CHECK(report.est_material_cm3 == doctest::Approx((1000.0 - 729.0) / 1000));
}

TEST_CASE("cube with a missing facet fails") {
  const auto report = validate(holed_cube_fixture());
  CHECK_FALSE(report.watertight);
  CHECK(report.verdict == Verdict::fail);
}

TEST_CASE("oversized part fails") {
  const auto report = validate(box_mesh({0, 0, 0}, {150, 10, 10}));
  CHECK_FALSE(report.bbox_ok);
  CHECK(report.verdict == Verdict::fail);
  PrintProfile big;
  big.max_bbox_mm = 200;
  CHECK(validate(box_mesh({0, 0, 0}, {150, 10, 10}), big).verdict == Verdict::pass);
}

TEST_CASE("empty mesh is rejected") {
  CHECK_THROWS_AS(validate(TriangleMesh{}), std::invalid_argument);
}

TEST_CASE("property: raising min wall never turns warn into pass") {
  const TriangleMesh meshes[] = {solid_cube_fixture(), thin_shell_fixture(),
                                 box_mesh({0, 0, 0}, {2, 3, 40})};
  for (const auto& mesh : meshes) {
    Verdict previous = Verdict::pass;
    for (double wall : {0.1, 0.4, 0.6, 1.0, 1.9, 2.1, 2.9, 3.0, 5.0, 9.9, 10.1}) {
      PrintProfile p;
      p.min_wall_mm = wall;
      p.strict_wall_mm = std::max(wall, 3.0);
      const Verdict v = validate(mesh, p).verdict;
      CHECK(static_cast<int>(v) >= static_cast<int>(previous));
      previous = v;
    }
  }
}

TEST_CASE("property: cost increases strictly with volume") {
  PrintProfile p;
  p.cost_base = 2.5;
  p.cost_per_cm3 = 0.3;
  double previous = -1;
  for (double side = 1; side <= 60; side += 4.5) {
    const double cost = validate(box_mesh({0, 0, 0}, {side, side, side}), p).est_cost;
    CHECK(cost > previous);
    previous = cost;
  }
  CHECK(validate(box_mesh({0, 0, 0}, {10, 10, 10}), p).est_cost == doctest::Approx(2.8));
}

TEST_CASE("sphere shell wall estimate") {
  for (double t : {1.0, 2.0, 3.0}) {
    auto shell = uv_sphere({0, 0, 0}, 20, 128, 128);
    shell.append(inverted(uv_sphere({0, 0, 0}, 20 - t, 128, 128)));
    const auto report = validate(shell);
    CAPTURE(t);
    REQUIRE(report.min_wall_estimate_mm.has_value());
    CHECK(*report.min_wall_estimate_mm == doctest::Approx(t).epsilon(0.1));
    CHECK(report.shell_count == 2);
  }
}

TEST_CASE("strut checks") {
  const double radii[] = {1.5, 0.5, 1.0};
  const auto checks = check_struts(radii);
  REQUIRE(checks.size() == 3);
  CHECK(checks[0].verdict == Verdict::pass);
  CHECK(checks[1].verdict == Verdict::warn);
  CHECK(checks[2].verdict == Verdict::pass);
  CHECK(check_struts({}).empty());
}

TEST_CASE("profile parsing") {
  const auto p = parse_profile("# strict printer\nmin_wall_mm = 1.5\nstrict_wall_mm=4\n\ncost_base=3 # flat fee\n");
  CHECK(p.min_wall_mm == 1.5);
  CHECK(p.strict_wall_mm == 4);
  CHECK(p.cost_base == 3);
  CHECK(p.cost_per_cm3 == 1.0);
  CHECK_THROWS_AS(parse_profile("min_wall_mm=4\n"), std::invalid_argument);  // above strict
  CHECK_THROWS_AS(parse_profile("wall=1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_profile("min_wall_mm\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_profile("min_wall_mm=thin\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_profile("max_bbox_mm=0\n"), std::invalid_argument);
  PrintProfile base;
  base.cost_per_cm3 = 9;
  CHECK(parse_profile("", base).cost_per_cm3 == 9);
}

TEST_CASE("report json has stable keys") {
  const auto j = nlohmann::json::parse(to_json(validate(thin_shell_fixture())));
  for (const char* key : {"watertight", "minWallMm", "bboxOk", "shellCount", "materialCm3", "cost",
                          "verdict"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["verdict"] == "warn");
  CHECK(j["shellCount"] == 2);
  CHECK(j["thinRegions"].size() > 0);
}

TEST_CASE("validation is deterministic") {
  const auto mesh = tessellate(make_solid("torus", {{"R", 20}, {"a", 3}}), 64, 64);
  CHECK(to_json(validate(mesh)) == to_json(validate(mesh)));
}
