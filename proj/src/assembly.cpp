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

#include <cmath>
#include <stdexcept>
#include <string>

#include "archimesh/mesh.hpp"
#include "shape_builders.hpp"

namespace archimesh {
namespace {

Vec2 polar(double r, double theta) { return {r * std::cos(theta), r * std::sin(theta)}; }

double tube_inner(const ScrewParams& p) {
  return p.tube_inner_radius > 0 ? p.tube_inner_radius : p.blade_radius + 1.0;
}

void validate(const ScrewParams& p) {
  if (!(p.shaft_radius > 0)) throw std::invalid_argument("shaft radius must be positive");
  if (!(p.blade_radius > p.shaft_radius)) {
    throw std::invalid_argument("blade radius must exceed shaft radius");
  }
  if (!(p.pitch > 0) || !(p.turns > 0)) throw std::invalid_argument("pitch and turns must be positive");
  if (!(p.blade_thickness > 0) || !(p.blade_thickness < p.pitch)) {
    throw std::invalid_argument("blade thickness must lie in (0, pitch)");
  }
  if (!(p.tube_wall > 0)) throw std::invalid_argument("tube wall must be positive");
  if (p.resolution < 8) throw std::invalid_argument("screw resolution must be >= 8");
  if (p.blade_radius >= tube_inner(p)) {
    throw std::invalid_argument("blade radius reaches the tube wall");
  }
}

}  // namespace

ScrewAssembly make_screw(const ScrewParams& p) {
  validate(p);
  ScrewAssembly out;
  out.height = p.turns * p.pitch;
  out.tube_inner_radius = tube_inner(p);
  out.tube_outer_radius = out.tube_inner_radius + p.tube_wall;

  const Vec2 tube_profile[] = {{out.tube_inner_radius, 0},
                               {out.tube_outer_radius, 0},
                               {out.tube_outer_radius, out.height},
                               {out.tube_inner_radius, out.height}};
  out.parts.push_back(detail::lathe(tube_profile, 2 * p.resolution));

  // Every horizontal slice of shaft + blade is the shaft disc plus an
  // annular sector; the sector turns by 2 pi per pitch.
  const double sector = 2 * kPi * p.blade_thickness / p.pitch;
  const int ring_points = p.resolution + 8;
  const int steps = std::max(2, static_cast<int>(std::ceil(p.turns * p.resolution)));
  const auto stations = detail::linear_stations(0, out.height, steps + 1);
  auto ring_at = [&](double z) {
    const double phi = 2 * kPi * z / p.pitch;
    const double lo = phi - sector / 2;
    const double hi = phi + sector / 2;
    const detail::Piece pieces[] = {
        detail::Piece::line(polar(p.shaft_radius, lo), polar(p.blade_radius, lo)),
        detail::Piece::arc_of({}, p.blade_radius, lo, hi),
        detail::Piece::line(polar(p.blade_radius, hi), polar(p.shaft_radius, hi)),
        detail::Piece::arc_of({}, p.shaft_radius, hi, lo + 2 * kPi),
    };
    // Fan centre off the axis: the blade's radial edges point at the axis.
    return detail::Ring{detail::sample_closed(pieces, ring_points, {}),
                        polar(p.shaft_radius / 2, phi)};
  };
  out.parts.push_back(detail::loft(stations, ring_at, Axis::z));

  // Thickness normal to the helicoid is thinnest at the blade tip.
  const double slope = 2 * kPi * p.blade_radius / p.pitch;
  const double tip_thickness = p.blade_thickness / std::sqrt(1 + slope * slope);
  if (tip_thickness < 1.0) {
    out.warnings.push_back("blade is " + std::to_string(tip_thickness) +
                           " mm thick at the tip, below the 1 mm printable minimum");
  }
  return out;
}

std::vector<Contact> screw_contacts(const ScrewParams& p, int count) {
  validate(p);
  if (count < 1) throw std::invalid_argument("need at least one connector");
  const double height = p.turns * p.pitch;
  const double inner = tube_inner(p);
  std::vector<Contact> out;
  for (int k = 0; k < count; ++k) {
    const double z = height * (k + 0.5) / count;
    // Opposite the blade: the nearest blade turns are half a pitch away.
    const double theta = 2 * kPi * z / p.pitch + kPi;
    const Vec2 from = polar(p.shaft_radius / 2, theta);
    const Vec2 to = polar(inner + p.tube_wall / 2, theta);
    out.push_back({{from.x, from.y, z}, {to.x, to.y, z}});
  }
  return out;
}

TriangleMesh add_struts(std::span<const TriangleMesh> parts, std::span<const Contact> contacts,
                        double strut_radius, int segments) {
  if (contacts.empty()) throw std::invalid_argument("add_struts needs at least one contact");
  if (!(strut_radius > 0)) throw std::invalid_argument("strut radius must be positive");
  TriangleMesh out;
  for (const auto& part : parts) out.append(part);
  for (const auto& [a, b] : contacts) {
    if (length(b - a) < 1e-12) throw std::invalid_argument("strut has zero length");
    out.append(cylinder_between(a, b, strut_radius, segments));
  }
  return out;
}

TriangleMesh pack_mesh(const SpherePack& pack, int resolution) {
  if (pack.spheres.empty()) throw std::invalid_argument("sphere pack is empty");
  TriangleMesh out;
  for (const auto& s : pack.spheres) out.append(uv_sphere(s.center, s.radius, resolution, resolution));
  return out;
}

}  // namespace archimesh
