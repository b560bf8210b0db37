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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "archimesh/mesh.hpp"

namespace archimesh {

/// Printer/material limits. Lengths in mm, cost in arbitrary currency.
struct PrintProfile {
  double min_wall_mm = 1.0;
  double strict_wall_mm = 3.0;
  double min_strut_radius_mm = 1.0;
  double max_bbox_mm = 140.0;
  double cost_base = 0.0;
  double cost_per_cm3 = 1.0;

  /// Throws std::invalid_argument unless 0 < min_wall <= strict_wall and
  /// the other limits are positive (cost_base may be zero).
  void validate() const;
};

/// Applies `key = value` lines (blank lines and '#' comments ignored) on top
/// of `base`. Unknown keys throw.
PrintProfile parse_profile(std::string_view text, PrintProfile base = {});

enum class Verdict { pass, warn, fail };
std::string_view verdict_name(Verdict v);

struct PrintReport {
  bool watertight = false;
  std::size_t triangle_count = 0;
  /// Smallest ray-cast wall thickness; empty when no ray found a wall.
  std::optional<double> min_wall_estimate_mm;
  bool meets_strict_wall = false;
  std::vector<Vec3> thin_regions;
  Vec3 bbox_size;
  bool bbox_ok = false;
  std::size_t shell_count = 0;
  std::size_t wall_samples = 0;
  double est_material_cm3 = 0;
  double est_cost = 0;
  Verdict verdict = Verdict::fail;
  std::vector<std::string> warnings;
};

/// Watertightness, ray-cast wall thickness, build-volume and cost checks.
/// Throws std::invalid_argument for an empty mesh.
PrintReport validate(const TriangleMesh& mesh, const PrintProfile& profile = {});

struct StrutCheck {
  double radius = 0;
  Verdict verdict = Verdict::pass;
};

std::vector<StrutCheck> check_struts(std::span<const double> strut_radii,
                                     const PrintProfile& profile = {});

/// JSON document with stable keys: watertight, minWallMm, bboxOk,
/// shellCount, materialCm3, cost, verdict (plus diagnostic extras).
std::string to_json(const PrintReport& report, int indent = 2);

}  // namespace archimesh
