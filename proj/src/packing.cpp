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

#include "archimesh/packing.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace archimesh {
namespace {

using Complex = std::complex<double>;

struct Circle {
  Complex center;
  double radius;
};

// Circle through three points.
Circle circumcircle(Complex a, Complex b, Complex c) {
  const Complex ab = b - a;
  const Complex ac = c - a;
  const double d = 2 * (ab.real() * ac.imag() - ab.imag() * ac.real());
  const double ab2 = std::norm(ab);
  const double ac2 = std::norm(ac);
  const Complex offset((ac.imag() * ab2 - ab.imag() * ac2) / d,
                       (ab.real() * ac2 - ac.real() * ab2) / d);
  const Complex center = a + offset;
  const double radius = (std::abs(a - center) + std::abs(b - center) + std::abs(c - center)) / 3;
  return {center, radius};
}

}  // namespace

SpherePack steiner_chain(int n, double outer_radius, double mobius_a) {
  if (n < 3) throw std::invalid_argument("steiner chain needs n >= 3");
  if (!(outer_radius > 0)) throw std::invalid_argument("outer radius must be positive");
  if (!(mobius_a >= 0 && mobius_a < 1)) {
    throw std::invalid_argument("mobius_a must lie in [0, 1)");
  }

  // Concentric configuration in the unit disc.
  const double s = std::sin(kPi / n);
  const double inner = (1 - s) / (1 + s);
  const double chain_r = (1 - inner) / 2;
  const double chain_d = (1 + inner) / 2;

  std::vector<Circle> circles;
  circles.reserve(n + 2);
  for (int k = 0; k < n; ++k) {
    circles.push_back({std::polar(chain_d, 2 * kPi * k / n), chain_r});
  }
  circles.push_back({0.0, inner});
  circles.push_back({0.0, 1.0});

  if (mobius_a != 0) {
    auto f = [a = mobius_a](Complex w) { return (w - a) / (1.0 - a * w); };
    for (Circle& c : circles) {
      const Complex p0 = c.center + std::polar(c.radius, 0.0);
      const Complex p1 = c.center + std::polar(c.radius, 2 * kPi / 3);
      const Complex p2 = c.center + std::polar(c.radius, 4 * kPi / 3);
      c = circumcircle(f(p0), f(p1), f(p2));
    }
    // The unit circle is invariant; pin it exactly.
    circles.back() = {0.0, 1.0};
  }

  SpherePack pack;
  pack.spheres.reserve(circles.size());
  for (const Circle& c : circles) {
    pack.spheres.push_back(
        {{outer_radius * c.center.real(), outer_radius * c.center.imag(), 0.0},
         outer_radius * c.radius});
  }
  const std::size_t inner_idx = n;
  const std::size_t outer_idx = n + 1;
  for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
    pack.tangencies.push_back({k, (k + 1) % n, false});
    pack.tangencies.push_back({k, inner_idx, false});
    pack.tangencies.push_back({k, outer_idx, true});
  }
  return pack;
}

double max_tangency_residual(const SpherePack& pack) {
  double worst = 0;
  for (const Tangency& t : pack.tangencies) {
    const Sphere& a = pack.spheres.at(t.a);
    const Sphere& b = pack.spheres.at(t.b);
    const double dist = length(a.center - b.center);
    const double expected = t.internal ? b.radius - a.radius : a.radius + b.radius;
    worst = std::max(worst, std::abs(dist - expected) / std::max(a.radius, b.radius));
  }
  return worst;
}

}  // namespace archimesh
