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

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "archimesh/geometry.hpp"

namespace archimesh {

enum class SolidKind {
  sphere,
  cylinder,
  cone,
  pyramid,
  cylinder_minus_cone,
  dome,
  globe,
  bicylinder,
  tricylinder,
  hoof,
  cork,
  torus,
  steiner_pack,
};

enum class Axis { x, y, z };

struct Interval {
  double lo = 0;
  double hi = 0;
  double length() const { return hi - lo; }
};

using Params = std::map<std::string, double, std::less<>>;

struct ParamInfo {
  std::string name;
  double default_value = 0;
  bool integer = false;
  /// True when the parameter carries a length in mm (scales with the solid).
  bool length = false;
  std::string description;
};

std::span<const SolidKind> all_kinds();
std::string_view kind_name(SolidKind kind);
std::optional<SolidKind> parse_kind(std::string_view name);
std::vector<ParamInfo> param_schema(SolidKind kind);

/// Analytic description of one catalog solid. Values are immutable once
/// built by `make_solid`; the callables capture their parameters by value.
struct SolidSpec {
  SolidKind kind = SolidKind::sphere;
  /// Fully resolved parameters (defaults filled in).
  Params params;
  /// Slicing axis; `support` and `cross_section` are measured along it.
  Axis axis = Axis::z;
  Interval support;
  Box bbox;
  std::optional<double> exact_volume;
  std::optional<double> exact_surface;

  std::function<double(double)> area;
  std::function<bool(Vec3)> inside;

  double param(std::string_view name) const;
  /// Cross-section area at slicing coordinate t; 0 outside the support.
  double cross_section(double t) const;
  bool contains(Vec3 p) const { return inside(p); }
};

/// Builds a catalog solid. Missing parameters take the defaults listed by
/// `param_schema`; unknown names, non-positive lengths and non-integer
/// polygon side counts throw std::invalid_argument.
SolidSpec make_solid(SolidKind kind, const Params& params = {});
SolidSpec make_solid(std::string_view kind, const Params& params = {});

double cross_section_area(const SolidSpec& spec, double t);

/// The part of `spec` between lo and hi along its slicing axis. Exact
/// measures are dropped.
SolidSpec slab(const SolidSpec& spec, double lo, double hi);

/// sphere(r) restricted to z >= 0, with its closed-form measures.
SolidSpec upper_hemisphere(double r);

struct PrismMeasure {
  double volume = 0;
  double surface = 0;
};

/// The right prism (or cylinder) a sphere, dome, globe or bicylinder is
/// inscribed in: same base outline as the equatorial section, same height.
PrismMeasure circumscribing_prism(const SolidSpec& spec);

}  // namespace archimesh
