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

using namespace archimesh;

namespace {

Profile profile_of(const SolidSpec& spec) {
  return [spec](double t) { return spec.cross_section(t); };
}

}  // namespace

TEST_CASE("archimedes_sum") {
  CHECK(archimedes_sum([](double) { return 1.0; }, {0, 1}, 7) == doctest::Approx(1.0).epsilon(1e-15));
  const double ball = archimedes_sum([](double z) { return kPi * (1 - z * z); }, {-1, 1}, 1000);
  CHECK(std::abs(ball - 4 * kPi / 3) / (4 * kPi / 3) < 5e-3);
  const auto bi = make_solid("bicylinder", {{"r", 1}});
  CHECK(archimedes_sum(profile_of(bi), bi.support, 10000) == doctest::Approx(16.0 / 3).epsilon(1e-3));
  CHECK_THROWS_AS(archimedes_sum([](double) { return 1.0; }, {0, 1}, 0), std::invalid_argument);
}

TEST_CASE("archimedes_sum uses right endpoints") {
  // f(z) = z on [0, 1] with n = 4: (1/4)(1/4 + 2/4 + 3/4 + 1) = 5/8.
  CHECK(archimedes_sum([](double z) { return z; }, {0, 1}, 4) == doctest::Approx(0.625));
}

TEST_CASE("riemann_bounds") {
  const auto c = riemann_bounds([](double) { return 2.0; }, {0, 3}, 17);
  CHECK(c.lower == doctest::Approx(6));
  CHECK(c.upper == doctest::Approx(6));
  const auto sphere = make_solid("sphere", {{"r", 1}});
  const auto b100 = riemann_bounds(profile_of(sphere), sphere.support, 100, 8);
  CHECK(b100.lower < 4 * kPi / 3);
  CHECK(4 * kPi / 3 < b100.upper);
  CHECK(b100.gap() < 0.15);
  const auto b200 = riemann_bounds(profile_of(sphere), sphere.support, 200, 8);
  CHECK(b200.gap() < b100.gap());
  CHECK_THROWS_AS(riemann_bounds(profile_of(sphere), sphere.support, 0), std::invalid_argument);
  CHECK_THROWS_AS(riemann_bounds(profile_of(sphere), sphere.support, 10, 1), std::invalid_argument);
}

TEST_CASE("property: bounds contain every closed form and shrink") {
  for (SolidKind kind : all_kinds()) {
    const auto spec = make_solid(kind);
    if (!spec.exact_volume) continue;
    CAPTURE(kind_name(kind));
    const double exact = *spec.exact_volume;
    for (std::size_t n : {10, 50, 100, 200, 400, 1000}) {
      const auto b = riemann_bounds(profile_of(spec), spec.support, n);
      CHECK(b.lower <= b.upper);
      CHECK(b.lower <= exact * (1 + 1e-12));
      CHECK(exact * (1 - 1e-12) <= b.upper);
    }
  }
}

TEST_CASE("property: right-endpoint sums converge at least linearly") {
  for (SolidKind kind : all_kinds()) {
    const auto spec = make_solid(kind);
    if (!spec.exact_volume) continue;
    CAPTURE(kind_name(kind));
    const double exact = *spec.exact_volume;
    for (std::size_t n : {100, 200, 400, 800}) {
      const double e1 = std::abs(archimedes_sum(profile_of(spec), spec.support, n) - exact);
      const double e2 = std::abs(archimedes_sum(profile_of(spec), spec.support, 2 * n) - exact);
      if (e1 < 1e-12 * exact) continue;  // constant profile: exact already
      CHECK(e2 <= 0.6 * e1);
    }
  }
}

TEST_CASE("polygon sandwich") {
  CHECK(polygon_sandwich(6, 1).inner_circumference == doctest::Approx(3.0).epsilon(1e-15));
  // n r tan(pi/n) = 4 * 2 * 1; the full square perimeter 16 is twice this.
  CHECK(polygon_sandwich(4, 2).outer_circumference == doctest::Approx(8.0).epsilon(1e-15));
  const auto p96 = polygon_sandwich(96, 1);
  CHECK(p96.inner_circumference == doctest::Approx(3.14103).epsilon(2e-6));
  CHECK(p96.outer_circumference == doctest::Approx(3.14271).epsilon(2e-6));
  CHECK(p96.inner_circumference < kPi);
  CHECK(kPi < p96.outer_circumference);
  CHECK(p96.inner_area_bound == doctest::Approx(p96.inner_circumference));
  CHECK_THROWS_AS(polygon_sandwich(2, 1), std::invalid_argument);
}

TEST_CASE("property: sandwich ordering under doubling") {
  for (double r : {0.5, 1.0, 3.0, 40.0}) {
    for (int n = 3; n <= 300; ++n) {
      const auto a = polygon_sandwich(n, r);
      const auto b = polygon_sandwich(2 * n, r);
      CAPTURE(n);
      CHECK(a.inner_circumference < b.inner_circumference);
      CHECK(b.inner_circumference < kPi * r);
      CHECK(kPi * r < b.outer_circumference);
      CHECK(b.outer_circumference < a.outer_circumference);
      CHECK(a.inner_area_bound <= kPi * r * r);
      CHECK(kPi * r * r <= a.outer_area_bound);
      CHECK(b.gap() < a.gap());
    }
  }
}

TEST_CASE("disc, cone and sphere identities") {
  CHECK(disc_area(1, 2 * kPi) == doctest::Approx(kPi));
  CHECK(disc_area(2, 4 * kPi) == doctest::Approx(4 * kPi));
  const double lower = disc_area(1, polygon_sandwich(96, 1).inner_circumference);
  CHECK(lower == doctest::Approx(1.57052).epsilon(1e-5));
  CHECK(lower < kPi);
  CHECK(cone_volume(kPi, 3) == doctest::Approx(kPi));
  CHECK(cone_volume(1, 1) == doctest::Approx(1.0 / 3));
  const auto cone = make_solid("cone", {{"r", 1}, {"h", 1}});
  CHECK(archimedes_sum(profile_of(cone), cone.support, 10000) ==
        doctest::Approx(cone_volume(kPi, 1)).epsilon(1e-3));
  CHECK(sphere_volume_from_surface(1, 4 * kPi) == doctest::Approx(4 * kPi / 3));
  CHECK(sphere_volume_from_surface(2, 16 * kPi) == doctest::Approx(32 * kPi / 3));
  CHECK(sphere_volume_from_surface(2, 16 * kPi) ==
        doctest::Approx(*make_solid("sphere", {{"r", 2}}).exact_volume));
}

TEST_CASE("cavalieri_compare") {
  const auto hemi = upper_hemisphere(1);
  const auto cmc = make_solid("cylinder_minus_cone", {{"r", 1}});
  CHECK(cavalieri_compare(hemi, cmc, 10000) < 1e-12);
  const auto sphere = make_solid("sphere", {{"r", 1}});
  CHECK(cavalieri_compare(sphere, sphere, 1000) == 0);
  CHECK(cavalieri_compare(make_solid("bicylinder", {{"r", 1}}), sphere, 10001) ==
        doctest::Approx(4 - kPi));
  CHECK_THROWS_AS(cavalieri_compare(sphere, make_solid("sphere", {{"r", 2}}), 100),
                  std::invalid_argument);
  CHECK_THROWS_AS(cavalieri_compare(sphere, sphere, 1), std::invalid_argument);
}

TEST_CASE("pappus") {
  CHECK(pappus_volume(kPi, 3) == doctest::Approx(6 * kPi * kPi));
  CHECK(pappus_volume(kPi, 3) == doctest::Approx(*make_solid("torus", {{"R", 3}, {"a", 1}}).exact_volume));
  CHECK(pappus_volume(1, 1) == doctest::Approx(2 * kPi));
  CHECK_THROWS_AS(pappus_volume(1, 0), std::invalid_argument);
}

TEST_CASE("property: pappus matches the torus for random pairs") {
  std::mt19937_64 rng(314);
  std::uniform_real_distribution<double> big(0.1, 100), frac(0.01, 0.99);
  for (int i = 0; i < 10; ++i) {
    const double R = big(rng), a = R * frac(rng);
    const double torus = *make_solid("torus", {{"R", R}, {"a", a}}).exact_volume;
    CHECK(pappus_volume(kPi * a * a, R) == doctest::Approx(torus).epsilon(1e-15));
  }
}

TEST_CASE("counter generator is a pure function of seed and counter") {
  const CounterRng a(42), b(42), c(43);
  for (std::uint64_t i = 0; i < 100; ++i) {
    CHECK(a.bits(i) == b.bits(i));
    CHECK(a.bits(i) != c.bits(i));
    const double u = a.uniform(i);
    CHECK(u >= 0);
    CHECK(u < 1);
  }
}

TEST_CASE("monte carlo") {
  const auto sphere = make_solid("sphere", {{"r", 1}});
  const auto mc = monte_carlo_volume(sphere, 1000000, 3);
  CHECK(std::abs(mc.estimate - 4 * kPi / 3) <= 4 * mc.std_error);
  CHECK(mc.samples == 1000000);

  const auto again = monte_carlo_volume(sphere, 1000000, 3);
  CHECK(again.estimate == mc.estimate);
  CHECK(again.std_error == mc.std_error);
  CHECK(monte_carlo_volume(sphere, 1000000, 4).estimate != mc.estimate);

  auto full = make_solid("cylinder", {{"r", 1}, {"h", 2}});
  full.inside = [](Vec3) { return true; };
  const auto f = monte_carlo_volume(full, 1000, 9);
  CHECK(f.estimate == doctest::Approx(full.bbox.volume()));
  CHECK(f.std_error == 0);

  const auto tri = monte_carlo_volume(make_solid("tricylinder", {{"r", 1}}), 10000000, 7);
  CHECK(std::abs(tri.estimate - 8 * (2 - std::sqrt(2.0))) <= 4 * tri.std_error);
}

TEST_CASE("monte carlo sample streams are prefix-stable") {
  // 99999 samples run inline, 100000 run threaded; sample i is the same point
  // either way, so the hit counts differ by the last sample at most.
  const auto cone = make_solid("cone");
  const auto small = monte_carlo_volume(cone, 99999, 1);
  const auto big = monte_carlo_volume(cone, 100000, 1);
  CHECK(big.hits - small.hits <= 1);
  CHECK(monte_carlo_volume(cone, 100000, 1).hits == big.hits);
}

TEST_CASE("property: monte carlo agrees with every closed form") {
  for (SolidKind kind : all_kinds()) {
    const auto spec = make_solid(kind);
    if (!spec.exact_volume) continue;
    CAPTURE(kind_name(kind));
    const auto mc = monte_carlo_volume(spec, 1000000, 77);
    CHECK(std::abs(mc.estimate - *spec.exact_volume) <= 4 * mc.std_error);
  }
}
