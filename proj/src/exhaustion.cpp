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

#include "archimesh/exhaustion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace archimesh {
namespace {

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// Fixed shard count: results never depend on the machine's thread count.
constexpr std::uint64_t kShards = 64;

}  // namespace

double archimedes_sum(const Profile& profile, Interval interval, std::size_t n) {
  if (n == 0) throw std::invalid_argument("archimedes_sum needs n >= 1");
  const double width = interval.length();
  double sum = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    sum += profile(interval.lo + width * static_cast<double>(k) / static_cast<double>(n));
  }
  return width / static_cast<double>(n) * sum;
}

BoundPair riemann_bounds(const Profile& profile, Interval interval, std::size_t n,
                         std::size_t probes_per_cell) {
  if (n == 0) throw std::invalid_argument("riemann_bounds needs n >= 1");
  if (probes_per_cell < 2) throw std::invalid_argument("riemann_bounds needs >= 2 probes");
  const double width = interval.length();
  const double cell = width / static_cast<double>(n);
  double lower = 0;
  double upper = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double a = interval.lo + width * static_cast<double>(k) / static_cast<double>(n);
    const double b = interval.lo + width * static_cast<double>(k + 1) / static_cast<double>(n);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t j = 0; j < probes_per_cell; ++j) {
      const double t = j + 1 == probes_per_cell
                           ? b
                           : a + (b - a) * static_cast<double>(j) /
                                     static_cast<double>(probes_per_cell - 1);
      const double v = profile(t);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    lower += lo;
    upper += hi;
  }
  return {lower * cell, upper * cell, n};
}

PolygonSandwich polygon_sandwich(int n, double r) {
  if (n < 3) throw std::invalid_argument("polygon needs n >= 3 sides");
  if (!(r >= 0)) throw std::invalid_argument("radius must be nonnegative");
  PolygonSandwich p;
  p.n = n;
  p.r = r;
  p.inner_circumference = n * r * std::sin(kPi / n);
  p.outer_circumference = n * r * std::tan(kPi / n);
  p.inner_area_bound = r * p.inner_circumference;
  p.outer_area_bound = r * p.outer_circumference;
  return p;
}

double disc_area(double r, double circumference) {
  if (r < 0 || circumference < 0) throw std::invalid_argument("disc_area needs nonnegative inputs");
  return r * circumference / 2;
}

double cone_volume(double base_area, double h) {
  if (base_area < 0 || h < 0) throw std::invalid_argument("cone_volume needs nonnegative inputs");
  return base_area * h / 3;
}

double sphere_volume_from_surface(double r, double surface) {
  if (r < 0 || surface < 0) {
    throw std::invalid_argument("sphere_volume_from_surface needs nonnegative inputs");
  }
  return surface * r / 3;
}

double cavalieri_compare(const Profile& a, Interval support_a, const Profile& b,
                         Interval support_b, std::size_t samples) {
  if (samples < 2) throw std::invalid_argument("cavalieri_compare needs >= 2 samples");
  const double len = support_a.length();
  if (std::abs(len - support_b.length()) > kAlignmentTolerance) {
    throw std::invalid_argument("supports differ in length; solids are not comparable");
  }
  double worst = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double s = len * static_cast<double>(i) / static_cast<double>(samples - 1);
    worst = std::max(worst, std::abs(a(support_a.lo + s) - b(support_b.lo + s)));
  }
  return worst;
}

double cavalieri_compare(const SolidSpec& a, const SolidSpec& b, std::size_t samples) {
  auto pa = [&a](double t) { return a.cross_section(t); };
  auto pb = [&b](double t) { return b.cross_section(t); };
  return cavalieri_compare(pa, a.support, pb, b.support, samples);
}

double pappus_volume(double region_area, double centroid_distance) {
  if (!(centroid_distance > 0)) throw std::invalid_argument("centroid distance must be positive");
  if (region_area < 0) throw std::invalid_argument("region area must be nonnegative");
  return 2 * kPi * centroid_distance * region_area;
}

CounterRng::CounterRng(std::uint64_t seed) : key_(mix(seed + kGolden)) {}

std::uint64_t CounterRng::bits(std::uint64_t counter) const {
  return mix(key_ + (counter + 1) * kGolden);
}

double CounterRng::uniform(std::uint64_t counter) const {
  return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
}

MonteCarloEstimate monte_carlo_volume(const SolidSpec& spec, std::uint64_t samples,
                                      std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("monte_carlo_volume needs >= 1 sample");
  const Box box = spec.bbox;
  const Vec3 size = box.size();
  const double box_volume = box.volume();
  if (!std::isfinite(box_volume)) throw std::invalid_argument("bounding box must be finite");

  const CounterRng rng(seed);
  std::vector<std::uint64_t> hits(kShards, 0);
  auto run_shard = [&](std::uint64_t shard) {
    const std::uint64_t begin = samples * shard / kShards;
    const std::uint64_t end = samples * (shard + 1) / kShards;
    std::uint64_t count = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      const Vec3 q{box.lo.x + size.x * rng.uniform(3 * i),
                   box.lo.y + size.y * rng.uniform(3 * i + 1),
                   box.lo.z + size.z * rng.uniform(3 * i + 2)};
      if (spec.contains(q)) ++count;
    }
    hits[shard] = count;
  };

  const unsigned workers =
      samples < 100000 ? 1u : std::clamp(std::thread::hardware_concurrency(), 1u, 16u);
  if (workers == 1) {
    for (std::uint64_t s = 0; s < kShards; ++s) run_shard(s);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t s = w; s < kShards; s += workers) run_shard(s);
      });
    }
  }

  MonteCarloEstimate out;
  out.samples = samples;
  for (auto h : hits) out.hits += h;
  const double p = static_cast<double>(out.hits) / static_cast<double>(samples);
  out.estimate = box_volume * p;
  out.std_error = box_volume * std::sqrt(p * (1 - p) / static_cast<double>(samples));
  return out;
}

}  // namespace archimesh
