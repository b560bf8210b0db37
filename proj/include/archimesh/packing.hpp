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
#include <vector>

#include "archimesh/geometry.hpp"

namespace archimesh {

struct Sphere {
  Vec3 center;
  double radius = 0;
};

/// A declared contact between spheres `a` and `b`. Internal tangency means
/// `a` sits inside `b` and touches it from within.
struct Tangency {
  std::size_t a = 0;
  std::size_t b = 0;
  bool internal = false;
};

struct SpherePack {
  std::vector<Sphere> spheres;
  std::vector<Tangency> tangencies;
};

/// Steiner chain of `n` circles between a fixed outer circle of radius
/// `outer_radius` (centered at the origin) and the inner circle forced by
/// sin(pi/n) = (R - r) / (R + r). The disc automorphism
/// w -> (w - a) / (1 - a w), scaled to the outer radius, is applied to every
/// circle, and circles are lifted to spheres in the plane z = 0.
///
/// Sphere order: chain[0..n), inner, outer. Tangencies: ring neighbours,
/// each chain sphere to the inner sphere, each chain sphere to the outer
/// sphere (internal).
SpherePack steiner_chain(int n, double outer_radius, double mobius_a);

/// Largest |distance - expected| / max(r_a, r_b) over declared tangencies.
double max_tangency_residual(const SpherePack& pack);

}  // namespace archimesh
