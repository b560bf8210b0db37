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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "archimesh/mesh.hpp"
#include "shape_builders.hpp"

namespace archimesh {
namespace detail {

Piece Piece::arc_of(Vec2 c, double r, double from, double to) {
  Piece p;
  p.arc = true;
  p.center = c;
  p.radius = r;
  p.theta0 = from;
  p.theta1 = to;
  p.a = c + r * Vec2{std::cos(from), std::sin(from)};
  p.b = c + r * Vec2{std::cos(to), std::sin(to)};
  return p;
}

double Piece::length() const {
  return arc ? radius * std::abs(theta1 - theta0) : archimesh::length(b - a);
}

Vec2 Piece::at(double f) const {
  if (!arc) return a + f * (b - a);
  const double theta = theta0 + f * (theta1 - theta0);
  return center + radius * Vec2{std::cos(theta), std::sin(theta)};
}

std::vector<Vec2> sample_closed(std::span<const Piece> pieces, int count, Vec2 fallback) {
  double total = 0;
  for (const auto& p : pieces) total += p.length();
  if (total <= 0) return std::vector<Vec2>(static_cast<std::size_t>(count), fallback);

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].length() > 1e-4 * total) kept.push_back(i);
  }
  double kept_total = 0;
  for (auto i : kept) kept_total += pieces[i].length();

  // Largest-remainder apportionment of `count` intervals.
  const int floor_each = count >= static_cast<int>(kept.size()) ? 1 : 0;
  const int spare = count - floor_each * static_cast<int>(kept.size());
  std::vector<int> alloc(kept.size(), floor_each);
  std::vector<double> remainder(kept.size());
  int given = 0;
  for (std::size_t k = 0; k < kept.size(); ++k) {
    const double share = spare * pieces[kept[k]].length() / kept_total;
    const int whole = static_cast<int>(std::floor(share));
    alloc[k] += whole;
    given += whole;
    remainder[k] = share - whole;
  }
  std::vector<std::size_t> order(kept.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return remainder[x] > remainder[y]; });
  for (std::size_t k = 0; given < spare; ++k, ++given) ++alloc[order[k % order.size()]];

  std::vector<Vec2> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::size_t k = 0; k < kept.size(); ++k) {
    for (int j = 0; j < alloc[k]; ++j) out.push_back(pieces[kept[k]].at(double(j) / alloc[k]));
  }
  return out;
}

namespace {

Vec3 to_world(Vec2 uv, double t, Axis axis) {
  switch (axis) {
    case Axis::x: return {t, uv.x, uv.y};  // (u, v, t) = (y, z, x)
    case Axis::y: return {uv.y, t, uv.x};  // (u, v, t) = (z, x, y)
    case Axis::z: break;
  }
  return {uv.x, uv.y, t};
}

double signed_area(std::span<const Vec2> pts) {
  double a = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) a += cross(pts[i], pts[(i + 1) % pts.size()]);
  return a / 2;
}

bool collapsed(const Ring& ring) {
  return std::all_of(ring.points.begin(), ring.points.end(),
                     [&](Vec2 p) { return length(p - ring.center) < 1e-12; });
}

}  // namespace

TriangleMesh loft(std::span<const double> stations, const std::function<Ring(double)>& ring_at,
                  Axis axis) {
  if (stations.size() < 2) throw std::invalid_argument("loft needs at least two stations");
  std::vector<Ring> rings;
  rings.reserve(stations.size());
  for (double t : stations) rings.push_back(ring_at(t));

  std::size_t m = 0;
  for (const auto& r : rings) {
    if (collapsed(r)) continue;
    if (m != 0 && r.points.size() != m) throw std::logic_error("loft rings differ in size");
    m = r.points.size();
  }
  if (m < 3) throw std::invalid_argument("loft has no ring with three or more points");

  TriangleMesh mesh;
  std::vector<std::uint32_t> start(rings.size());
  std::vector<bool> apex(rings.size());
  for (std::size_t i = 0; i < rings.size(); ++i) {
    Ring& r = rings[i];
    apex[i] = collapsed(r);
    if (apex[i]) {
      start[i] = mesh.add_vertex(to_world(r.center, stations[i], axis));
      continue;
    }
    if (signed_area(r.points) < 0) std::reverse(r.points.begin() + 1, r.points.end());
    start[i] = static_cast<std::uint32_t>(mesh.vertices.size());
    for (Vec2 p : r.points) mesh.add_vertex(to_world(p, stations[i], axis));
  }
  auto at = [&](std::size_t i, std::size_t j) {
    return apex[i] ? start[i] : start[i] + static_cast<std::uint32_t>(j % m);
  };

  if (!apex.front()) {
    const auto c = mesh.add_vertex(to_world(rings.front().center, stations.front(), axis));
    for (std::size_t j = 0; j < m; ++j) mesh.add_triangle(c, at(0, j + 1), at(0, j));
  }
  for (std::size_t i = 0; i + 1 < rings.size(); ++i) {
    if (apex[i] && apex[i + 1]) throw std::invalid_argument("solid has an empty stretch");
    for (std::size_t j = 0; j < m; ++j) {
      const auto a = at(i, j), b = at(i, j + 1), c = at(i + 1, j + 1), d = at(i + 1, j);
      if (!apex[i]) mesh.add_triangle(a, b, c);
      if (!apex[i + 1]) mesh.add_triangle(a, c, d);
    }
  }
  if (!apex.back()) {
    const std::size_t last = rings.size() - 1;
    const auto c = mesh.add_vertex(to_world(rings.back().center, stations.back(), axis));
    for (std::size_t j = 0; j < m; ++j) mesh.add_triangle(c, at(last, j), at(last, j + 1));
  }
  return mesh;
}

TriangleMesh lathe(std::span<const Vec2> profile, int segments) {
  if (segments < 3) throw std::invalid_argument("lathe needs >= 3 segments");
  const std::size_t count = profile.size();
  const auto m = static_cast<std::uint32_t>(segments);
  TriangleMesh mesh;
  std::vector<std::uint32_t> start(count);
  auto on_axis = [&](std::size_t k) { return profile[k].x == 0.0; };
  for (std::size_t k = 0; k < count; ++k) {
    const Vec2 p = profile[k];
    if (on_axis(k)) {
      start[k] = mesh.add_vertex({0, 0, p.y});
      continue;
    }
    start[k] = static_cast<std::uint32_t>(mesh.vertices.size());
    for (std::uint32_t j = 0; j < m; ++j) {
      const double phi = 2 * kPi * j / m;
      mesh.add_vertex({p.x * std::cos(phi), p.x * std::sin(phi), p.y});
    }
  }
  auto at = [&](std::size_t k, std::uint32_t j) { return on_axis(k) ? start[k] : start[k] + j % m; };
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t k2 = (k + 1) % count;
    if (on_axis(k) && on_axis(k2)) continue;
    for (std::uint32_t j = 0; j < m; ++j) {
      const auto a = at(k, j), b = at(k, j + 1), c = at(k2, j + 1), d = at(k2, j);
      if (!on_axis(k)) mesh.add_triangle(a, b, c);
      if (!on_axis(k2)) mesh.add_triangle(a, c, d);
    }
  }
  return mesh;
}

std::vector<double> cosine_stations(double lo, double hi, int count) {
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double f = (1 - std::cos(kPi * i / (count - 1))) / 2;
    out[i] = i == 0 ? lo : i == count - 1 ? hi : lo + (hi - lo) * f;
  }
  return out;
}

std::vector<double> linear_stations(double lo, double hi, int count) {
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out[i] = i == count - 1 ? hi : lo + (hi - lo) * i / (count - 1);
  }
  return out;
}

}  // namespace detail

namespace {

using detail::Piece;
using detail::Ring;

double chord_half(double r, double t) { return std::sqrt(std::max(0.0, r * r - t * t)); }

Vec2 centroid(std::span<const Vec2> corners) {
  Vec2 c;
  for (Vec2 p : corners) c = c + p;
  return (1.0 / corners.size()) * c;
}

Ring polygon_ring(std::span<const Vec2> corners, int samples) {
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < corners.size(); ++i) {
    pieces.push_back(Piece::line(corners[i], corners[(i + 1) % corners.size()]));
  }
  const Vec2 c = centroid(corners);
  return {detail::sample_closed(pieces, samples, c), c};
}

Ring square_ring(double half, int samples) {
  const Vec2 corners[] = {{half, half}, {-half, half}, {-half, -half}, {half, -half}};
  return polygon_ring(corners, samples);
}

Ring ngon_ring(int n, double apothem, int samples) {
  const double circum = apothem / std::cos(kPi / n);
  std::vector<Vec2> corners;
  for (int k = 0; k < n; ++k) {
    const double theta = (2 * k + 1) * kPi / n;
    corners.push_back({circum * std::cos(theta), circum * std::sin(theta)});
  }
  Ring ring = polygon_ring(corners, samples);
  ring.center = {};
  return ring;
}

// Boundary of the square [-w, w]^2 clipped to the disc of radius r, starting
// on the 45 degree diagonal.
Ring square_disc_ring(double r, double w, int samples) {
  if (2 * w * w <= r * r) return square_ring(w, samples);
  const double c = chord_half(r, w);
  std::vector<Piece> pieces;
  for (int q = 0; q < 4; ++q) {
    const double turn = q * kPi / 2;
    auto rot = [turn](Vec2 p) {
      return Vec2{p.x * std::cos(turn) - p.y * std::sin(turn),
                  p.x * std::sin(turn) + p.y * std::cos(turn)};
    };
    pieces.push_back(Piece::arc_of({}, r, turn + kPi / 4, turn + std::atan2(w, c)));
    pieces.push_back(Piece::line(rot({c, w}), rot({-c, w})));
    pieces.push_back(Piece::arc_of({}, r, turn + std::atan2(w, -c), turn + 3 * kPi / 4));
  }
  return {detail::sample_closed(pieces, samples, {}), {}};
}

// Ruled mesh for the cork: rulings join the base circle point at angle
// theta to the ridge point above its x coordinate. Ridge points for theta
// and -theta coincide and are shared.
TriangleMesh cork_mesh(double r, double h, int rows, int around) {
  if (around % 2) ++around;
  const int half = around / 2;
  TriangleMesh mesh;
  const auto bottom_center = mesh.add_vertex({0, 0, 0});
  // grid[j][k] for k < rows; ridge vertex per j in [0, half].
  std::vector<std::vector<std::uint32_t>> grid(static_cast<std::size_t>(around));
  std::vector<std::uint32_t> ridge(static_cast<std::size_t>(half + 1));
  for (int j = 0; j <= half; ++j) {
    ridge[j] = mesh.add_vertex({r * std::cos(2 * kPi * j / around), 0, h});
  }
  for (int j = 0; j < around; ++j) {
    const double theta = 2 * kPi * j / around;
    const double x = r * std::cos(theta);
    const double y = j == 0 || j == half ? 0.0 : r * std::sin(theta);
    for (int k = 0; k < rows; ++k) {
      const double lambda = static_cast<double>(k) / rows;
      grid[j].push_back(mesh.add_vertex({x, y * (1 - lambda), h * lambda}));
    }
  }
  auto vert = [&](int j, int k) {
    j %= around;
    return k == rows ? ridge[j <= half ? j : around - j] : grid[j][k];
  };
  for (int j = 0; j < around; ++j) {
    mesh.add_triangle(bottom_center, vert(j + 1, 0), vert(j, 0));
    for (int k = 0; k < rows; ++k) {
      const auto a = vert(j, k), b = vert(j + 1, k), c = vert(j + 1, k + 1), d = vert(j, k + 1);
      mesh.add_triangle(a, b, c);
      mesh.add_triangle(a, c, d);
    }
  }
  return mesh;
}

}  // namespace

TriangleMesh uv_sphere(Vec3 center, double radius, int stacks, int segments) {
  if (stacks < 2 || segments < 3) throw std::invalid_argument("uv_sphere resolution too low");
  if (!(radius > 0)) throw std::invalid_argument("sphere radius must be positive");
  std::vector<Vec2> profile;
  for (int k = 0; k <= stacks; ++k) {
    const double phi = -kPi / 2 + kPi * k / stacks;
    const bool pole = k == 0 || k == stacks;
    profile.push_back({pole ? 0.0 : radius * std::cos(phi),
                       k == 0 ? -radius : k == stacks ? radius : radius * std::sin(phi)});
  }
  return translated(detail::lathe(profile, segments), center);
}

TriangleMesh cylinder_between(Vec3 a, Vec3 b, double radius, int segments) {
  if (!(radius > 0)) throw std::invalid_argument("cylinder radius must be positive");
  const Vec3 d = b - a;
  const double len = length(d);
  if (len < 1e-12) throw std::invalid_argument("cylinder has zero length");
  const Vec3 axis = (1 / len) * d;
  const Vec3 helper = std::abs(axis.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const Vec3 e1 = (1 / length(cross(axis, helper))) * cross(axis, helper);
  const Vec3 e2 = cross(axis, e1);
  const Vec2 profile[] = {{0, 0}, {radius, 0}, {radius, len}, {0, len}};
  TriangleMesh mesh = detail::lathe(profile, segments);
  for (auto& v : mesh.vertices) v = a + v.x * e1 + v.y * e2 + v.z * axis;
  return mesh;
}

TriangleMesh tessellate(const SolidSpec& spec, int slices, int boundary_samples) {
  if (slices < 2) throw std::invalid_argument("tessellate needs slices >= 2");
  if (boundary_samples < 3) throw std::invalid_argument("tessellate needs boundary_samples >= 3");
  const int m = boundary_samples;
  const Interval sup = spec.support;

  switch (spec.kind) {
    case SolidKind::sphere:
      return uv_sphere({}, spec.param("r"), slices, m);
    case SolidKind::torus: {
      const double big = spec.param("R"), a = spec.param("a");
      std::vector<Vec2> profile;
      for (int k = 0; k < slices; ++k) {
        const double t = 2 * kPi * k / slices;
        profile.push_back({big + a * std::cos(t), a * std::sin(t)});
      }
      return detail::lathe(profile, m);
    }
    case SolidKind::cylinder: {
      const double r = spec.param("r"), h = spec.param("h");
      std::vector<Vec2> profile{{0, 0}, {r, 0}};
      for (double z : detail::linear_stations(0, h, slices)) {
        if (z > 0) profile.push_back({r, z});
      }
      profile.push_back({0, h});
      return detail::lathe(profile, m);
    }
    case SolidKind::cone: {
      const double r = spec.param("r"), h = spec.param("h");
      std::vector<Vec2> profile{{0, 0}};
      for (double z : detail::linear_stations(0, h, slices)) {
        profile.push_back({z == h ? 0.0 : r * (1 - z / h), z});
      }
      return detail::lathe(profile, m);
    }
    case SolidKind::cylinder_minus_cone: {
      // The cavity tip is blunted at height r/1024 so the boundary stays a
      // 2-manifold instead of pinching at the origin.
      const double r = spec.param("r");
      const double tip = r / 1024;
      std::vector<Vec2> profile{{0, 0}};
      for (double z : detail::linear_stations(0, r, slices)) profile.push_back({r, z});
      for (double z : detail::linear_stations(r, tip, slices)) {
        if (z < r) profile.push_back({z, z});
      }
      profile.push_back({0, tip});
      return detail::lathe(profile, m);
    }
    case SolidKind::pyramid: {
      const double half = std::sqrt(spec.param("base_area")) / 2, h = spec.param("h");
      auto stations = detail::linear_stations(0, h, slices);
      return detail::loft(
          stations, [&](double z) { return square_ring(half * (1 - z / h), m); }, spec.axis);
    }
    case SolidKind::dome:
    case SolidKind::globe: {
      const int n = static_cast<int>(spec.param("n"));
      const double r = spec.param("r");
      std::vector<double> stations;
      if (spec.kind == SolidKind::globe) {
        stations = detail::cosine_stations(-r, r, slices);
      } else {
        for (int i = 0; i < slices; ++i) {
          stations.push_back(i == slices - 1 ? r : r * std::sin(kPi * i / (2 * (slices - 1))));
        }
      }
      return detail::loft(
          stations, [&](double z) { return ngon_ring(n, chord_half(r, z), m); }, spec.axis);
    }
    case SolidKind::bicylinder: {
      const double r = spec.param("r");
      auto stations = detail::cosine_stations(sup.lo, sup.hi, slices);
      return detail::loft(
          stations, [&](double z) { return square_ring(chord_half(r, z), m); }, spec.axis);
    }
    case SolidKind::tricylinder: {
      const double r = spec.param("r");
      auto stations = detail::cosine_stations(sup.lo, sup.hi, slices);
      return detail::loft(
          stations, [&](double z) { return square_disc_ring(r, chord_half(r, z), m); },
          spec.axis);
    }
    case SolidKind::hoof: {
      // Local (u, v) = (z, x); legs L along x and sL along z.
      const double r = spec.param("r"), slope = spec.param("s");
      auto stations = detail::cosine_stations(sup.lo, sup.hi, slices);
      return detail::loft(
          stations,
          [&](double y) {
            const double leg = chord_half(r, y);
            const Vec2 corners[] = {{0, 0}, {slope * leg, leg}, {0, leg}};
            return polygon_ring(corners, m);
          },
          spec.axis);
    }
    case SolidKind::cork:
      return cork_mesh(spec.param("r"), spec.param("h"), slices, m);
    case SolidKind::steiner_pack:
      throw std::invalid_argument("steiner_pack is meshed with pack_mesh, not tessellate");
  }
  throw std::logic_error("unhandled solid kind");
}

}  // namespace archimesh
