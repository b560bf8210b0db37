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
#include <cmath>
#include <stdexcept>

#include "archimesh/mesh.hpp"
#include "archimesh/printcheck.hpp"
#include "archimesh/stl_io.hpp"

using namespace archimesh;

namespace {

TriangleMesh unit_cube() { return box_mesh({0, 0, 0}, {1, 1, 1}); }

double rel(double v, double exact) { return std::abs(v - exact) / exact; }

}  // namespace

TEST_CASE("unit cube statistics") {
  const auto st = mesh_stats(unit_cube());
  CHECK(st.triangle_count == 12);
  CHECK(st.signed_volume == doctest::Approx(1));
  CHECK(st.surface_area == doctest::Approx(6));
  CHECK(st.watertight);
  CHECK(st.euler_characteristic == 2);
  CHECK(st.shell_count == 1);
  CHECK(st.degenerate_triangles == 0);
}

TEST_CASE("removing or flipping faces breaks closure") {
  for (std::size_t i = 0; i < 12; ++i) {
    auto m = unit_cube();
    m.triangles.erase(m.triangles.begin() + static_cast<long>(i));
    CHECK_FALSE(mesh_stats(m).watertight);
  }
  auto flipped = unit_cube();
  for (std::size_t i : {0, 1}) std::swap(flipped.triangles[i][1], flipped.triangles[i][2]);
  CHECK_FALSE(mesh_stats(flipped).watertight);
}

TEST_CASE("bad index and empty mesh") {
  auto m = unit_cube();
  m.triangles.push_back({0, 1, 99});
  CHECK_THROWS_AS(mesh_stats(m), std::out_of_range);
  CHECK_FALSE(mesh_stats(TriangleMesh{}).watertight);
}

TEST_CASE("inward box has negative volume") {
  CHECK(mesh_stats(box_mesh({0, 0, 0}, {2, 2, 2}, true)).signed_volume == doctest::Approx(-8));
}

TEST_CASE("property: scaling multiplies volume by the cube") {
  const auto mesh = tessellate(make_solid("torus"), 32, 32);
  const double v = mesh_stats(mesh).signed_volume;
  for (double lambda : {0.1, 0.5, 2.0, 7.25}) {
    CHECK(mesh_stats(stl::scale_mesh(mesh, lambda)).signed_volume ==
          doctest::Approx(lambda * lambda * lambda * v).epsilon(1e-12));
  }
}

TEST_CASE("tessellation examples") {
  const auto sphere = mesh_stats(tessellate(make_solid("sphere", {{"r", 1}}), 64, 64));
  CHECK(sphere.watertight);
  CHECK(rel(sphere.signed_volume, 4 * kPi / 3) < 0.005);

  const auto bi = mesh_stats(tessellate(make_solid("bicylinder", {{"r", 1}}), 200, 4));
  CHECK(bi.watertight);
  CHECK(std::abs(bi.signed_volume - 16.0 / 3) < 1e-3);

  const auto cork = mesh_stats(tessellate(make_solid("cork", {{"r", 1}, {"h", 1}}), 64, 64));
  CHECK(cork.watertight);
  CHECK(rel(cork.signed_volume, kPi / 2) < 0.01);

  CHECK_THROWS_AS(tessellate(make_solid("sphere"), 1, 8), std::invalid_argument);
  CHECK_THROWS_AS(tessellate(make_solid("sphere"), 8, 2), std::invalid_argument);
  CHECK_THROWS_AS(tessellate(make_solid("steiner_pack"), 8, 8), std::invalid_argument);
}

TEST_CASE("property: every catalog mesh is closed and accurate") {
  for (SolidKind kind : all_kinds()) {
    if (kind == SolidKind::steiner_pack) continue;
    const auto spec = make_solid(kind);
    CAPTURE(kind_name(kind));
    double previous = 1;
    for (int res : {64, 128, 256}) {
      CAPTURE(res);
      const auto st = mesh_stats(tessellate(spec, res, res));
      CHECK(st.watertight);
      CHECK(st.degenerate_triangles == 0);
      CHECK(st.signed_volume > 0);
      CHECK(st.euler_characteristic == (kind == SolidKind::torus ? 0 : 2));
      const double err = rel(st.signed_volume, *spec.exact_volume);
      CHECK(err < 0.02);
      CHECK(err <= previous + 1e-12);
      previous = err;
    }
  }
}

TEST_CASE("smooth kinds converge at the stated rates") {
  for (SolidKind kind : {SolidKind::sphere, SolidKind::torus}) {
    const auto spec = make_solid(kind);
    CAPTURE(kind_name(kind));
    const double limits[] = {0.02, 0.005, 0.0015};
    double previous = 0;
    int i = 0;
    for (int res : {64, 128, 256}) {
      const double v = mesh_stats(tessellate(spec, res, res)).signed_volume;
      CHECK(v < *spec.exact_volume);  // inscribed
      CHECK(v > previous);
      CHECK(rel(v, *spec.exact_volume) < limits[i++]);
      previous = v;
    }
  }
}

TEST_CASE("globe surface approaches 2/3 of the prism") {
  for (int n : {4, 6}) {
    const auto g = make_solid(SolidKind::globe, {{"n", double(n)}});
    const double ratio =
        mesh_stats(tessellate(g, 256, 256)).surface_area / circumscribing_prism(g).surface;
    CHECK(ratio == doctest::Approx(2.0 / 3).epsilon(0.01));
  }
  const auto s = make_solid("sphere");
  CHECK(*s.exact_surface / circumscribing_prism(s).surface == doctest::Approx(2.0 / 3));
}

TEST_CASE("tricylinder mesh surface matches 24(2 - sqrt 2)") {
  const auto st = mesh_stats(tessellate(make_solid("tricylinder"), 256, 256));
  CHECK(st.surface_area == doctest::Approx(24 * (2 - std::sqrt(2.0))).epsilon(0.01));
}

TEST_CASE("screw") {
  ScrewParams p;
  p.turns = 3;
  p.pitch = 20;
  const auto screw = make_screw(p);
  REQUIRE(screw.parts.size() == 2);
  CHECK(screw.height == doctest::Approx(60));
  const Box blade = screw.parts[1].bounds();
  CHECK(blade.hi.z - blade.lo.z == doctest::Approx(60));
  for (const auto& part : screw.parts) {
    const auto st = mesh_stats(part);
    CHECK(st.watertight);
    CHECK(st.degenerate_triangles == 0);
    CHECK(st.signed_volume > 0);
  }
  CHECK(mesh_stats(screw.parts[0]).euler_characteristic == 0);

  ScrewParams bad;
  bad.tube_inner_radius = bad.blade_radius - 1;
  CHECK_THROWS_AS(make_screw(bad), std::invalid_argument);
  bad = {};
  bad.shaft_radius = bad.blade_radius;
  CHECK_THROWS_AS(make_screw(bad), std::invalid_argument);

  ScrewParams thin;
  thin.blade_thickness = 0.5;
  CHECK_FALSE(make_screw(thin).warnings.empty());
  CHECK(make_screw({}).warnings.empty());
}

TEST_CASE("struts between parts") {
  const TriangleMesh parts[] = {unit_cube(), translated(unit_cube(), {6, 0, 0})};
  const Contact contact[] = {{{1, 0.5, 0.5}, {6, 0.5, 0.5}}};
  const auto strut = cylinder_between(contact[0].first, contact[0].second, 1, 48);
  const auto combined = add_struts(parts, contact, 1);
  const auto st = mesh_stats(combined);
  CHECK(st.triangle_count == 24 + strut.triangles.size());
  CHECK(st.signed_volume == doctest::Approx(2 + kPi * 5).epsilon(0.02));
  CHECK(st.shell_count == 3);
  CHECK(st.watertight);

  CHECK_THROWS_AS(add_struts(parts, {}, 1), std::invalid_argument);
  const Contact zero[] = {{{1, 1, 1}, {1, 1, 1}}};
  CHECK_THROWS_AS(add_struts(parts, zero, 1), std::invalid_argument);
  CHECK_THROWS_AS(add_struts(parts, contact, 0), std::invalid_argument);

  // A narrow strut is built; the print check flags it.
  CHECK(mesh_stats(add_struts(parts, contact, 0.3)).watertight);
  const double radii[] = {0.3};
  CHECK(check_struts(radii).front().verdict == Verdict::warn);
}

TEST_CASE("screw contacts run from shaft to tube wall") {
  const ScrewParams p;
  const auto screw = make_screw(p);
  const auto contacts = screw_contacts(p, 5);
  REQUIRE(contacts.size() == 5);
  for (const auto& [a, b] : contacts) {
    CHECK(std::hypot(a.x, a.y) < p.shaft_radius);
    CHECK(std::hypot(b.x, b.y) > screw.tube_inner_radius);
    CHECK(std::hypot(b.x, b.y) < screw.tube_outer_radius);
    CHECK(a.z > 0);
    CHECK(a.z < screw.height);
  }
  const auto all = add_struts(screw.parts, contacts, 1.5);
  const auto st = mesh_stats(all);
  CHECK(st.watertight);
  CHECK(st.shell_count == 7);
  CHECK_THROWS_AS(screw_contacts(p, 0), std::invalid_argument);
}
