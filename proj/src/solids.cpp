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

#include "archimesh/solids.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "archimesh/packing.hpp"

namespace archimesh {
namespace {

constexpr std::array kKinds = {
    SolidKind::sphere,     SolidKind::cylinder,    SolidKind::cone,
    SolidKind::pyramid,    SolidKind::cylinder_minus_cone,
    SolidKind::dome,       SolidKind::globe,       SolidKind::bicylinder,
    SolidKind::tricylinder, SolidKind::hoof,       SolidKind::cork,
    SolidKind::torus,      SolidKind::steiner_pack,
};

double sq(double v) { return v * v; }

// Half-width of a disc of radius r at offset t, 0 outside.
double chord_half(double r, double t) { return std::sqrt(std::max(0.0, r * r - t * t)); }

// Area of the square [-w, w]^2 clipped to the disc of radius r, with
// c = sqrt(r^2 - w^2) the offset where the square's sides leave the disc.
double square_disc_area(double r, double w) {
  if (2 * w * w <= r * r) return 4 * w * w;
  const double c = chord_half(r, w);
  auto primitive = [r](double x) {
    return 0.5 * (x * chord_half(r, x) + r * r * std::asin(std::clamp(x / r, -1.0, 1.0)));
  };
  return 4 * (w * c + primitive(w) - primitive(c));
}

// Regular n-gon with apothem `apothem`: area and support-function test.
double ngon_area(int n, double apothem) { return n * apothem * apothem * std::tan(kPi / n); }

bool inside_ngon(int n, double apothem, double x, double y) {
  for (int k = 0; k < n; ++k) {
    const double phi = 2 * kPi * k / n;
    if (x * std::cos(phi) + y * std::sin(phi) > apothem) return false;
  }
  return true;
}

void require_positive(const Params& p, std::string_view name) {
  const double v = p.find(name)->second;
  if (!(v > 0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(name) + " must be a positive finite number");
  }
}

Params resolve(SolidKind kind, const Params& given) {
  Params out;
  const auto schema = param_schema(kind);
  for (const auto& info : schema) out[info.name] = info.default_value;
  for (const auto& [name, value] : given) {
    auto it = out.find(name);
    if (it == out.end()) {
      throw std::invalid_argument("unknown parameter '" + name + "' for " +
                                  std::string(kind_name(kind)));
    }
    it->second = value;
  }
  for (const auto& info : schema) {
    const double v = out[info.name];
    if (info.integer && (v != std::floor(v) || !std::isfinite(v))) {
      throw std::invalid_argument(info.name + " must be an integer");
    }
    if (info.name == "mobius_a") {
      if (!(v >= 0 && v < 1)) throw std::invalid_argument("mobius_a must lie in [0, 1)");
    } else if (info.name != "n") {
      require_positive(out, info.name);
    }
  }
  return out;
}

}  // namespace

std::span<const SolidKind> all_kinds() { return kKinds; }

std::string_view kind_name(SolidKind kind) {
  switch (kind) {
    case SolidKind::sphere: return "sphere";
    case SolidKind::cylinder: return "cylinder";
    case SolidKind::cone: return "cone";
    case SolidKind::pyramid: return "pyramid";
    case SolidKind::cylinder_minus_cone: return "cylinder_minus_cone";
    case SolidKind::dome: return "dome";
    case SolidKind::globe: return "globe";
    case SolidKind::bicylinder: return "bicylinder";
    case SolidKind::tricylinder: return "tricylinder";
    case SolidKind::hoof: return "hoof";
    case SolidKind::cork: return "cork";
    case SolidKind::torus: return "torus";
    case SolidKind::steiner_pack: return "steiner_pack";
  }
  return "?";
}

std::optional<SolidKind> parse_kind(std::string_view name) {
  for (SolidKind k : kKinds) {
    if (kind_name(k) == name) return k;
  }
  return std::nullopt;
}

std::vector<ParamInfo> param_schema(SolidKind kind) {
  switch (kind) {
    case SolidKind::sphere:
    case SolidKind::bicylinder:
    case SolidKind::tricylinder:
      return {{"r", 1.0, false, true, "radius"}};
    case SolidKind::cylinder:
      return {{"r", 1.0, false, true, "radius"}, {"h", 2.0, false, true, "height"}};
    case SolidKind::cone:
      return {{"r", 1.0, false, true, "base radius"}, {"h", 1.0, false, true, "height"}};
    case SolidKind::pyramid:
      return {{"base_area", 1.0, false, false, "square base area (mm^2)"},
              {"h", 1.0, false, true, "height"}};
    case SolidKind::cylinder_minus_cone:
      return {{"r", 1.0, false, true, "radius and height"}};
    case SolidKind::dome:
    case SolidKind::globe:
      return {{"n", 6.0, true, false, "polygon sides (>= 3)"},
              {"r", 1.0, false, true, "base apothem and dome height"}};
    case SolidKind::hoof:
      return {{"r", 1.0, false, true, "cylinder radius"},
              {"s", 2.0, false, false, "slope of the cutting plane z = s x"}};
    case SolidKind::cork:
      return {{"r", 1.0, false, true, "base radius"}, {"h", 1.0, false, true, "ridge height"}};
    case SolidKind::torus:
      return {{"R", 3.0, false, true, "distance of tube centre from axis"},
              {"a", 1.0, false, true, "tube radius"}};
    case SolidKind::steiner_pack:
      return {{"n", 6.0, true, false, "chain length (>= 3)"},
              {"R", 1.0, false, true, "outer circle radius"},
              {"mobius_a", 0.0, false, false, "disc automorphism parameter in [0, 1)"}};
  }
  return {};
}

double SolidSpec::param(std::string_view name) const {
  auto it = params.find(name);
  if (it == params.end()) throw std::out_of_range("no parameter " + std::string(name));
  return it->second;
}

double SolidSpec::cross_section(double t) const {
  if (t < support.lo || t > support.hi) return 0.0;
  return area(t);
}

double cross_section_area(const SolidSpec& spec, double t) { return spec.cross_section(t); }

SolidSpec make_solid(std::string_view kind, const Params& params) {
  auto k = parse_kind(kind);
  if (!k) throw std::invalid_argument("unknown solid kind '" + std::string(kind) + "'");
  return make_solid(*k, params);
}

SolidSpec make_solid(SolidKind kind, const Params& given) {
  SolidSpec s;
  s.kind = kind;
  s.params = resolve(kind, given);
  const Params& p = s.params;
  auto get = [&p](const char* name) { return p.find(name)->second; };

  switch (kind) {
    case SolidKind::sphere: {
      const double r = get("r");
      s.support = {-r, r};
      s.bbox = Box({-r, -r, -r}, {r, r, r});
      s.area = [r](double z) { return kPi * (r * r - z * z); };
      s.inside = [r](Vec3 q) { return dot(q, q) <= r * r; };
      s.exact_volume = 4 * kPi * r * r * r / 3;
      s.exact_surface = 4 * kPi * r * r;
      break;
    }
    case SolidKind::cylinder: {
      const double r = get("r"), h = get("h");
      s.support = {0, h};
      s.bbox = Box({-r, -r, 0}, {r, r, h});
      s.area = [r](double) { return kPi * r * r; };
      s.inside = [r, h](Vec3 q) { return q.x * q.x + q.y * q.y <= r * r && q.z >= 0 && q.z <= h; };
      s.exact_volume = kPi * r * r * h;
      s.exact_surface = 2 * kPi * r * r + 2 * kPi * r * h;
      break;
    }
    case SolidKind::cone: {
      const double r = get("r"), h = get("h");
      s.support = {0, h};
      s.bbox = Box({-r, -r, 0}, {r, r, h});
      s.area = [r, h](double z) { return kPi * r * r * sq(1 - z / h); };
      s.inside = [r, h](Vec3 q) {
        if (q.z < 0 || q.z > h) return false;
        return q.x * q.x + q.y * q.y <= sq(r * (1 - q.z / h));
      };
      s.exact_volume = kPi * r * r * h / 3;
      s.exact_surface = kPi * r * r + kPi * r * std::hypot(r, h);
      break;
    }
    case SolidKind::pyramid: {
      // Square base centred under the apex.
      const double base = get("base_area"), h = get("h");
      const double half = std::sqrt(base) / 2;
      s.support = {0, h};
      s.bbox = Box({-half, -half, 0}, {half, half, h});
      s.area = [base, h](double z) { return base * sq(1 - z / h); };
      s.inside = [half, h](Vec3 q) {
        if (q.z < 0 || q.z > h) return false;
        const double w = half * (1 - q.z / h);
        return std::abs(q.x) <= w && std::abs(q.y) <= w;
      };
      s.exact_volume = base * h / 3;
      const double side = 2 * half;
      s.exact_surface = base + 2 * side * std::hypot(h, half);
      break;
    }
    case SolidKind::cylinder_minus_cone: {
      // Cylinder of radius and height r with the cone of apex at the
      // bottom centre (radius r at the top) removed.
      const double r = get("r");
      s.support = {0, r};
      s.bbox = Box({-r, -r, 0}, {r, r, r});
      s.area = [r](double z) { return kPi * r * r - kPi * z * z; };
      s.inside = [r](Vec3 q) {
        const double rho2 = q.x * q.x + q.y * q.y;
        return q.z >= 0 && q.z <= r && rho2 <= r * r && rho2 >= q.z * q.z;
      };
      s.exact_volume = 2 * kPi * r * r * r / 3;
      s.exact_surface = kPi * r * r + 2 * kPi * r * r + std::sqrt(2.0) * kPi * r * r;
      break;
    }
    case SolidKind::dome:
    case SolidKind::globe: {
      const int n = static_cast<int>(get("n"));
      if (n < 3) throw std::invalid_argument("dome/globe need n >= 3");
      const double r = get("r");
      const double base = ngon_area(n, r);
      const double circum = r / std::cos(kPi / n);
      const bool whole = kind == SolidKind::globe;
      s.support = {whole ? -r : 0.0, r};
      s.bbox = Box({-circum, -circum, s.support.lo}, {circum, circum, r});
      s.area = [base, r](double z) { return base * (1 - sq(z / r)); };
      s.inside = [n, r, lo = s.support.lo](Vec3 q) {
        if (q.z < lo || q.z > r) return false;
        return inside_ngon(n, chord_half(r, q.z), q.x, q.y);
      };
      const double curved = 2 * n * r * r * std::tan(kPi / n);
      s.exact_volume = (2.0 / 3.0) * base * s.support.length();
      s.exact_surface = whole ? 2 * curved : curved + base;
      break;
    }
    case SolidKind::bicylinder: {
      const double r = get("r");
      s.support = {-r, r};
      s.bbox = Box({-r, -r, -r}, {r, r, r});
      s.area = [r](double z) { return 4 * (r * r - z * z); };
      s.inside = [r](Vec3 q) {
        return q.x * q.x + q.z * q.z <= r * r && q.y * q.y + q.z * q.z <= r * r;
      };
      s.exact_volume = 16 * r * r * r / 3;
      s.exact_surface = 16 * r * r;
      break;
    }
    case SolidKind::tricylinder: {
      const double r = get("r");
      s.support = {-r, r};
      s.bbox = Box({-r, -r, -r}, {r, r, r});
      s.area = [r](double z) { return square_disc_area(r, chord_half(r, z)); };
      s.inside = [r](Vec3 q) {
        const double r2 = r * r;
        return q.x * q.x + q.y * q.y <= r2 && q.x * q.x + q.z * q.z <= r2 &&
               q.y * q.y + q.z * q.z <= r2;
      };
      s.exact_volume = 8 * (2 - std::sqrt(2.0)) * r * r * r;
      s.exact_surface = 24 * (2 - std::sqrt(2.0)) * r * r;
      break;
    }
    case SolidKind::hoof: {
      // {x^2 + y^2 <= r^2, x >= 0, 0 <= z <= s x}, sliced along y into
      // similar right triangles with legs L and s L.
      const double r = get("r"), slope = get("s");
      s.axis = Axis::y;
      s.support = {-r, r};
      s.bbox = Box({0, -r, 0}, {r, r, slope * r});
      s.area = [r, slope](double y) { return 0.5 * slope * (r * r - y * y); };
      s.inside = [r, slope](Vec3 q) {
        return q.x >= 0 && q.x * q.x + q.y * q.y <= r * r && q.z >= 0 && q.z <= slope * q.x;
      };
      s.exact_volume = (2.0 / 3.0) * slope * r * r * r;
      s.exact_surface =
          0.5 * kPi * r * r * (1 + std::sqrt(1 + slope * slope)) + 2 * slope * r * r;
      break;
    }
    case SolidKind::cork: {
      // Circle from above, a 2r x h rectangle from the side, an isosceles
      // triangle (base 2r, height h) from the front. Slices x = c are
      // triangles over the chord of the base disc.
      const double r = get("r"), h = get("h");
      s.axis = Axis::x;
      s.support = {-r, r};
      s.bbox = Box({-r, -r, 0}, {r, r, h});
      s.area = [r, h](double x) { return chord_half(r, x) * h; };
      s.inside = [r, h](Vec3 q) {
        if (q.z < 0 || q.z > h || q.x * q.x + q.y * q.y > r * r) return false;
        return std::abs(q.y) <= chord_half(r, q.x) * (1 - q.z / h);
      };
      s.exact_volume = kPi * r * r * h / 2;
      break;
    }
    case SolidKind::torus: {
      const double big = get("R"), a = get("a");
      if (big <= a) throw std::invalid_argument("torus needs R > a");
      s.support = {-a, a};
      s.bbox = Box({-(big + a), -(big + a), -a}, {big + a, big + a, a});
      s.area = [big, a](double z) { return 4 * kPi * big * chord_half(a, z); };
      s.inside = [big, a](Vec3 q) {
        return sq(std::hypot(q.x, q.y) - big) + q.z * q.z <= a * a;
      };
      s.exact_volume = 2 * kPi * kPi * big * a * a;
      s.exact_surface = 4 * kPi * kPi * big * a;
      break;
    }
    case SolidKind::steiner_pack: {
      // Chain and inner spheres; the outer sphere is the container.
      const int n = static_cast<int>(get("n"));
      if (n < 3) throw std::invalid_argument("steiner_pack needs n >= 3");
      const double big = get("R");
      SpherePack pack = steiner_chain(n, big, get("mobius_a"));
      pack.spheres.pop_back();
      s.support = {-big, big};
      s.bbox = Box({-big, -big, -big}, {big, big, big});
      s.area = [balls = pack.spheres](double z) {
        double total = 0;
        for (const auto& b : balls) total += kPi * std::max(0.0, b.radius * b.radius - z * z);
        return total;
      };
      s.inside = [balls = std::move(pack.spheres)](Vec3 q) {
        for (const auto& b : balls) {
          const Vec3 d = q - b.center;
          if (dot(d, d) <= b.radius * b.radius) return true;
        }
        return false;
      };
      break;
    }
  }
  return s;
}

SolidSpec slab(const SolidSpec& spec, double lo, double hi) {
  if (!(lo < hi) || lo < spec.support.lo || hi > spec.support.hi) {
    throw std::invalid_argument("slab bounds must lie inside the support");
  }
  SolidSpec out = spec;
  out.support = {lo, hi};
  out.exact_volume.reset();
  out.exact_surface.reset();
  const int axis = static_cast<int>(spec.axis);
  auto coord = [axis](Vec3 q) { return axis == 0 ? q.x : axis == 1 ? q.y : q.z; };
  out.inside = [inner = spec.inside, coord, lo, hi](Vec3 q) {
    const double t = coord(q);
    return t >= lo && t <= hi && inner(q);
  };
  double* bl = axis == 0 ? &out.bbox.lo.x : axis == 1 ? &out.bbox.lo.y : &out.bbox.lo.z;
  double* bh = axis == 0 ? &out.bbox.hi.x : axis == 1 ? &out.bbox.hi.y : &out.bbox.hi.z;
  *bl = std::max(*bl, lo);
  *bh = std::min(*bh, hi);
  return out;
}

SolidSpec upper_hemisphere(double r) {
  SolidSpec s = slab(make_solid(SolidKind::sphere, {{"r", r}}), 0, r);
  s.exact_volume = 2 * kPi * r * r * r / 3;
  s.exact_surface = 3 * kPi * r * r;
  return s;
}

PrismMeasure circumscribing_prism(const SolidSpec& spec) {
  const double height = spec.support.length();
  switch (spec.kind) {
    case SolidKind::sphere: {
      const double r = spec.param("r");
      return {kPi * r * r * height, 2 * kPi * r * r + 2 * kPi * r * height};
    }
    case SolidKind::dome:
    case SolidKind::globe: {
      const int n = static_cast<int>(spec.param("n"));
      const double r = spec.param("r");
      const double base = ngon_area(n, r);
      const double perimeter = 2 * n * r * std::tan(kPi / n);
      return {base * height, 2 * base + perimeter * height};
    }
    case SolidKind::bicylinder: {
      const double r = spec.param("r");
      return {4 * r * r * height, 8 * r * r + 8 * r * height};
    }
    default:
      throw std::invalid_argument("no circumscribing prism for " +
                                  std::string(kind_name(spec.kind)));
  }
}

}  // namespace archimesh
