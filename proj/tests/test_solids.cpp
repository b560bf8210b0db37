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

#include <cmath>
#include <random>
#include <stdexcept>

#include "archimesh/exhaustion.hpp"
#include "archimesh/solids.hpp"

using namespace archimesh;

namespace {

constexpr double kEps = 1e-15;

double grid_area(const SolidSpec& spec, double z, int n) {
  // Midpoint grid over the bbox footprint, counting points the predicate accepts.
  const Box b = spec.bbox;
  const double dx = (b.hi.x - b.lo.x) / n, dy = (b.hi.y - b.lo.y) / n;
  long hits = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (spec.contains({b.lo.x + (i + 0.5) * dx, b.lo.y + (j + 0.5) * dy, z})) ++hits;
    }
  }
  return hits * dx * dy;
}

}  // namespace

TEST_CASE("sphere and cylinder give the 2/3 laws") {
  const auto sphere = make_solid("sphere", {{"r", 1}});
  const auto cylinder = make_solid("cylinder", {{"r", 1}, {"h", 2}});
  CHECK(*sphere.exact_volume == doctest::Approx(4 * kPi / 3).epsilon(kEps));
  CHECK(*sphere.exact_surface == doctest::Approx(4 * kPi).epsilon(kEps));
  CHECK(*sphere.exact_volume / *cylinder.exact_volume == doctest::Approx(2.0 / 3).epsilon(kEps));
  CHECK(*sphere.exact_surface / *cylinder.exact_surface == doctest::Approx(2.0 / 3).epsilon(kEps));
}

TEST_CASE("hoof and cork volumes") {
  CHECK(*make_solid("hoof", {{"r", 1}, {"s", 2}}).exact_volume ==
        doctest::Approx(8.0 / 6).epsilon(kEps));
  CHECK(*make_solid("cork", {{"r", 1}, {"h", 1}}).exact_volume ==
        doctest::Approx(kPi / 2).epsilon(kEps));
}

TEST_CASE("tricylinder closed form agrees with an independent slice integration") {
  const double exact = *make_solid("tricylinder", {{"r", 1}}).exact_volume;
  CHECK(exact == doctest::Approx(8 * (2 - std::sqrt(2.0))));
  // Square of half-side s clipped by the unit disc, area by a fine grid, then
  // Simpson over z.
  auto slice = [](double z) {
    const double s = std::sqrt(std::max(0.0, 1 - z * z));
    const int n = 600;
    const double d = 2 * s / n;
    long hits = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const double x = -s + (i + 0.5) * d, y = -s + (j + 0.5) * d;
        if (x * x + y * y <= 1) ++hits;
      }
    }
    return hits * d * d;
  };
  const int m = 100;
  double simpson = slice(-1) + slice(1);
  for (int k = 1; k < m; ++k) simpson += (k % 2 ? 4 : 2) * slice(-1 + 2.0 * k / m);
  simpson *= 2.0 / m / 3;
  CHECK(simpson == doctest::Approx(exact).epsilon(2e-4));
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(make_solid("cone", {{"r", 1}, {"h", 0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_solid("sphere", {{"r", -1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_solid("octahedron"), std::invalid_argument);
  CHECK_THROWS_AS(make_solid("dome", {{"n", 2}}), std::invalid_argument);
  CHECK_THROWS_AS(make_solid("globe", {{"n", 4.5}}), std::invalid_argument);
  CHECK_THROWS_AS(make_solid("bicylinder", {{"r", 1}, {"h", 2}}), std::invalid_argument);
  CHECK_THROWS_AS(make_solid("tricylinder", {{"r2", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_solid("torus", {{"R", 1}, {"a", 1}}), std::invalid_argument);
}

TEST_CASE("kind names round trip") {
  for (SolidKind k : all_kinds()) {
    REQUIRE(parse_kind(kind_name(k)).has_value());
    CHECK(*parse_kind(kind_name(k)) == k);
  }
  CHECK_FALSE(parse_kind("cube").has_value());
}

TEST_CASE("cross-section examples") {
  CHECK(cross_section_area(make_solid("sphere", {{"r", 1}}), 0) == doctest::Approx(kPi));
  const auto hoof = make_solid("hoof", {{"r", 1}, {"s", 2}});
  CHECK(hoof.axis == Axis::y);
  CHECK(hoof.cross_section(0) == doctest::Approx(1.0));
  CHECK(cross_section_area(make_solid("sphere"), 1.5) == 0);
  CHECK(cross_section_area(make_solid("cone"), -0.1) == 0);
}

TEST_CASE("bicylinder slice at z = 0.6 matches a containment grid") {
  const auto bi = make_solid("bicylinder", {{"r", 1}});
  CHECK(bi.cross_section(0.6) == doctest::Approx(2.56).epsilon(1e-14));
  CHECK(grid_area(bi, 0.6, 2000) == doctest::Approx(2.56).epsilon(2e-3));
}

TEST_CASE("pyramid slices scale quadratically") {
  const auto p = make_solid("pyramid", {{"base_area", 9}, {"h", 3}});
  CHECK(p.cross_section(0) == doctest::Approx(9));
  CHECK(p.cross_section(1.5) == doctest::Approx(9 * 0.25));
  CHECK(*p.exact_volume == doctest::Approx(9.0));
}

TEST_CASE("dome and globe use the scaled polygon reading") {
  for (int n = 3; n <= 12; ++n) {
    const double base = n * std::tan(kPi / n);
    const auto globe = make_solid(SolidKind::globe, {{"n", double(n)}, {"r", 1}});
    const auto dome = make_solid(SolidKind::dome, {{"n", double(n)}, {"r", 1}});
    CHECK(*globe.exact_volume == doctest::Approx(2.0 / 3 * base * 2));
    CHECK(*dome.exact_volume == doctest::Approx(2.0 / 3 * base));
    CHECK(*globe.exact_volume / circumscribing_prism(globe).volume ==
          doctest::Approx(2.0 / 3).epsilon(kEps));
    CHECK(dome.cross_section(0.6) == doctest::Approx(base * 0.64));
  }
}

TEST_CASE("hemisphere slab halves the sphere") {
  const auto hemi = upper_hemisphere(2);
  CHECK(*hemi.exact_volume == doctest::Approx(16 * kPi / 3));
  CHECK(hemi.support.lo == 0);
  CHECK(hemi.support.hi == 2);
  CHECK(hemi.cross_section(-0.5) == 0);
  CHECK(hemi.contains({0, 0, 1}));
  CHECK_FALSE(hemi.contains({0, 0, -1}));
}

TEST_CASE("property: cross-sections nonnegative and contained points inside bbox") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1, 1);
  for (SolidKind kind : all_kinds()) {
    const auto spec = make_solid(kind);
    CAPTURE(kind_name(kind));
    CHECK(spec.support.lo < spec.support.hi);
    for (int i = 0; i <= 200; ++i) {
      CHECK(spec.cross_section(spec.support.lo + spec.support.length() * i / 200) >= 0);
    }
    const Vec3 mid = (spec.bbox.lo + spec.bbox.hi) * 0.5;
    const Vec3 size = spec.bbox.size();
    int escaped = 0;
    for (int i = 0; i < 5000; ++i) {
      const Vec3 p{mid.x + size.x * u(rng), mid.y + size.y * u(rng), mid.z + size.z * u(rng)};
      if (spec.contains(p) && !spec.bbox.contains(p)) ++escaped;
    }
    CHECK(escaped == 0);
  }
}

TEST_CASE("property: slice sums reproduce every closed form") {
  for (SolidKind kind : all_kinds()) {
    const auto spec = make_solid(kind);
    if (!spec.exact_volume) continue;
    CAPTURE(kind_name(kind));
    const double sum =
        archimedes_sum([&](double t) { return spec.cross_section(t); }, spec.support, 10000);
    CHECK(std::abs(sum - *spec.exact_volume) / *spec.exact_volume < 1e-3);
  }
}

TEST_CASE("property: volume scales with the cube of length") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> lambda_dist(0.1, 10);
  for (SolidKind kind : all_kinds()) {
    const auto spec = make_solid(kind);
    if (!spec.exact_volume) continue;
    CAPTURE(kind_name(kind));
    for (int trial = 0; trial < 5; ++trial) {
      const double lambda = lambda_dist(rng);
      Params scaled;
      for (const auto& info : param_schema(kind)) {
        double v = spec.param(info.name);
        if (info.length) v *= lambda;
        if (info.name == "base_area") v *= lambda * lambda;
        scaled[info.name] = v;
      }
      CHECK(*make_solid(kind, scaled).exact_volume ==
            doctest::Approx(lambda * lambda * lambda * *spec.exact_volume).epsilon(1e-13));
    }
  }
}

TEST_CASE("steiner_pack has no closed-form volume") {
  const auto pack = make_solid("steiner_pack");
  CHECK_FALSE(pack.exact_volume.has_value());
  CHECK(pack.cross_section(0) > 0);
}
