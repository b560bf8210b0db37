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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "archimesh/geometry.hpp"
#include "archimesh/packing.hpp"
#include "archimesh/solids.hpp"

namespace archimesh {

/// Triangles smaller than this (mm^2) count as degenerate.
inline constexpr double kDegenerateArea = 1e-9;

using Triangle = std::array<std::uint32_t, 3>;

/// Indexed triangle mesh in mm. Triangles wind counter-clockwise seen from
/// outside. A mesh may hold several closed shells.
struct TriangleMesh {
  std::vector<Vec3> vertices;
  std::vector<Triangle> triangles;

  std::uint32_t add_vertex(Vec3 p);
  void add_triangle(std::uint32_t a, std::uint32_t b, std::uint32_t c);
  /// Appends `other` as additional shells.
  void append(const TriangleMesh& other);
  Box bounds() const;
  std::array<Vec3, 3> corners(std::size_t tri) const;
};

struct MeshStats {
  std::size_t triangle_count = 0;
  double signed_volume = 0;
  double surface_area = 0;
  bool watertight = false;
  long euler_characteristic = 0;
  std::size_t shell_count = 0;
  std::size_t degenerate_triangles = 0;
};

/// Throws std::out_of_range on an index past the vertex list.
MeshStats mesh_stats(const TriangleMesh& mesh);

/// Triangle indices grouped by connected component (shared vertices).
std::vector<std::vector<std::uint32_t>> shells(const TriangleMesh& mesh);

/// Loft (or, for solids of revolution, lathe) mesh of a catalog solid.
/// `slices` counts stations along the slicing axis (stacks for the sphere,
/// tube samples for the torus); `boundary_samples` counts points per ring.
TriangleMesh tessellate(const SolidSpec& spec, int slices, int boundary_samples);

/// Closed UV sphere: `stacks` latitude bands, `segments` longitude steps.
TriangleMesh uv_sphere(Vec3 center, double radius, int stacks, int segments);

/// Closed circular cylinder from a to b.
TriangleMesh cylinder_between(Vec3 a, Vec3 b, double radius, int segments);

TriangleMesh translated(TriangleMesh mesh, Vec3 offset);

/// Axis-aligned box, 12 triangles. `inward` flips the winding, which turns
/// the box into a cavity when nested inside another shell.
TriangleMesh box_mesh(Vec3 lo, Vec3 hi, bool inward = false);

/// Parameters for the two-part Archimedes screw. Lengths in mm.
struct ScrewParams {
  double shaft_radius = 4.0;
  double blade_radius = 12.0;
  double pitch = 30.0;
  double turns = 3.0;
  int resolution = 48;
  /// Blade thickness measured along the screw axis.
  double blade_thickness = 4.0;
  /// Inner radius of the tube; 0 means blade_radius + 1 mm clearance.
  double tube_inner_radius = 0.0;
  double tube_wall = 2.0;
};

struct ScrewAssembly {
  /// [0] tube, [1] shaft with helical blade.
  std::vector<TriangleMesh> parts;
  double tube_inner_radius = 0;
  double tube_outer_radius = 0;
  double height = 0;
  /// Non-fatal printability notes (e.g. a thin blade).
  std::vector<std::string> warnings;
};

ScrewAssembly make_screw(const ScrewParams& params);

using Contact = std::pair<Vec3, Vec3>;

/// `count` radial connector segments between shaft and tube, placed away
/// from the blade. Each segment starts inside the shaft and ends inside the
/// tube wall.
std::vector<Contact> screw_contacts(const ScrewParams& params, int count);

/// All parts plus one closed cylinder per contact, as separate shells.
TriangleMesh add_struts(std::span<const TriangleMesh> parts, std::span<const Contact> contacts,
                        double strut_radius, int segments = 48);

/// One UV sphere shell per pack element (no boolean union).
TriangleMesh pack_mesh(const SpherePack& pack, int resolution);

}  // namespace archimesh
