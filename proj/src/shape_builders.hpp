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

// Building blocks shared by the catalog tessellator and the assembly models.

#include <functional>
#include <span>
#include <vector>

#include "archimesh/mesh.hpp"

namespace archimesh::detail {

/// Straight segment or circular arc on a cross-section boundary.
struct Piece {
  Vec2 a, b;
  bool arc = false;
  Vec2 center;
  double radius = 0;
  double theta0 = 0, theta1 = 0;

  static Piece line(Vec2 from, Vec2 to) {
    Piece p;
    p.a = from;
    p.b = to;
    return p;
  }
  static Piece arc_of(Vec2 c, double r, double from, double to);

  double length() const;
  Vec2 at(double f) const;
};

/// Exactly `count` points along a closed chain of pieces. Every piece with
/// a share of the length gets at least one interval when count allows, so
/// corners where pieces meet are always sampled. Pieces shorter than 1e-4
/// of the total are replaced by the chord to the next piece.
std::vector<Vec2> sample_closed(std::span<const Piece> pieces, int count, Vec2 fallback);

/// Cross-section ring in the slicing plane, counter-clockwise seen from the
/// positive slicing direction. A ring whose points all coincide with
/// `center` is a collapsed apex.
struct Ring {
  std::vector<Vec2> points;
  Vec2 center;
};

/// Stitches rings at increasing stations into a closed mesh. Full end rings
/// are capped by a fan around their centre; collapsed rings become a single
/// apex vertex.
TriangleMesh loft(std::span<const double> stations, const std::function<Ring(double)>& ring_at,
                  Axis axis);

/// Revolves a closed counter-clockwise profile in the (rho, z) half-plane
/// around the z axis. Profile points with rho == 0 map to one axis vertex.
TriangleMesh lathe(std::span<const Vec2> profile, int segments);

/// Stations lo..hi clustered toward both ends (cosine spacing).
std::vector<double> cosine_stations(double lo, double hi, int count);
std::vector<double> linear_stations(double lo, double hi, int count);

}  // namespace archimesh::detail
