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

#include <cstddef>
#include <cstdint>
#include <functional>

#include "archimesh/solids.hpp"

namespace archimesh {

using Profile = std::function<double(double)>;

/// Certified bracket of an integral from n cells.
struct BoundPair {
  double lower = 0;
  double upper = 0;
  std::size_t n = 0;

  double gap() const { return upper - lower; }
  bool brackets(double value) const { return lower <= value && value <= upper; }
};

/// Inscribed and circumscribed regular n-gon measures for a circle of
/// radius r. The "circumferences" are n r sin(pi/n) and n r tan(pi/n),
/// which bracket pi r; the area bounds are r times those.
struct PolygonSandwich {
  int n = 0;
  double r = 0;
  double inner_circumference = 0;
  double outer_circumference = 0;
  double inner_area_bound = 0;
  double outer_area_bound = 0;

  double gap() const { return outer_circumference - inner_circumference; }
};

/// Right-endpoint equal-spacing sum ((b-a)/n) * sum_{k=1..n} f(a + k(b-a)/n).
double archimedes_sum(const Profile& profile, Interval interval, std::size_t n);

/// Lower/upper sums from the min/max of `probes_per_cell` equally spaced
/// probes (both cell ends included) in each of n cells. Rigorous for
/// profiles that are monotone on every cell.
BoundPair riemann_bounds(const Profile& profile, Interval interval, std::size_t n,
                         std::size_t probes_per_cell = 8);

PolygonSandwich polygon_sandwich(int n, double r);

double disc_area(double r, double circumference);
double cone_volume(double base_area, double h);
double sphere_volume_from_surface(double r, double surface);

/// Tolerance on support lengths when aligning two solids for comparison (mm).
inline constexpr double kAlignmentTolerance = 1e-9;

/// Max |A_a - A_b| over `samples` evenly spaced stations after translating
/// both supports to [0, L]. Throws if the support lengths differ.
double cavalieri_compare(const SolidSpec& a, const SolidSpec& b, std::size_t samples);
double cavalieri_compare(const Profile& a, Interval support_a, const Profile& b,
                         Interval support_b, std::size_t samples);

double pappus_volume(double region_area, double centroid_distance);

/// Counter-based generator: the value at (seed, counter) does not depend on
/// how a stream is partitioned, so sharded sampling stays reproducible.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed);
  std::uint64_t bits(std::uint64_t counter) const;
  /// Uniform double in [0, 1).
  double uniform(std::uint64_t counter) const;

 private:
  std::uint64_t key_;
};

struct MonteCarloEstimate {
  double estimate = 0;
  double std_error = 0;
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
};

MonteCarloEstimate monte_carlo_volume(const SolidSpec& spec, std::uint64_t samples,
                                      std::uint64_t seed);

}  // namespace archimesh
