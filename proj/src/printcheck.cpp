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

#include "archimesh/printcheck.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace archimesh {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Bounding volume hierarchy over triangles for nearest-hit ray queries.
class RayCaster {
 public:
  explicit RayCaster(const TriangleMesh& mesh) : mesh_(mesh) {
    order_.resize(mesh.triangles.size());
    std::iota(order_.begin(), order_.end(), 0u);
    centroids_.reserve(mesh.triangles.size());
    for (std::size_t i = 0; i < mesh.triangles.size(); ++i) {
      const auto [a, b, c] = mesh.corners(i);
      centroids_.push_back((1.0 / 3.0) * (a + b + c));
    }
    if (!order_.empty()) build(0, order_.size());
  }

  /// Distance to the nearest triangle hit beyond `min_t`, skipping `skip`.
  double nearest(Vec3 origin, Vec3 dir, std::uint32_t skip, double min_t) const {
    double best = kInf;
    if (nodes_.empty()) return best;
    const Vec3 inv{1 / dir.x, 1 / dir.y, 1 / dir.z};
    std::vector<std::size_t> stack{0};
    while (!stack.empty()) {
      const Node& node = nodes_[stack.back()];
      stack.pop_back();
      if (!hits_box(node.box, origin, inv, best)) continue;
      if (node.count > 0) {
        for (std::size_t k = node.first; k < node.first + node.count; ++k) {
          const std::uint32_t tri = order_[k];
          if (tri == skip) continue;
          const double t = intersect(tri, origin, dir);
          if (t > min_t && t < best) best = t;
        }
      } else {
        stack.push_back(node.left);
        stack.push_back(node.right);
      }
    }
    return best;
  }

 private:
  struct Node {
    Box box;
    std::size_t first = 0, count = 0;
    std::size_t left = 0, right = 0;
  };

  std::size_t build(std::size_t first, std::size_t last) {
    const std::size_t id = nodes_.size();
    nodes_.emplace_back();
    Box box;
    Box centers;
    for (std::size_t k = first; k < last; ++k) {
      for (const Vec3& p : mesh_.corners(order_[k])) box.extend(p);
      centers.extend(centroids_[order_[k]]);
    }
    nodes_[id].box = box;
    if (last - first <= 4) {
      nodes_[id].first = first;
      nodes_[id].count = last - first;
      return id;
    }
    const Vec3 span = centers.size();
    const int axis = span.x >= span.y && span.x >= span.z ? 0 : span.y >= span.z ? 1 : 2;
    auto key = [axis](Vec3 p) { return axis == 0 ? p.x : axis == 1 ? p.y : p.z; };
    const std::size_t mid = (first + last) / 2;
    std::nth_element(order_.begin() + first, order_.begin() + mid, order_.begin() + last,
                     [&](std::uint32_t a, std::uint32_t b) {
                       return key(centroids_[a]) < key(centroids_[b]);
                     });
    const std::size_t left = build(first, mid);
    const std::size_t right = build(mid, last);
    nodes_[id].left = left;
    nodes_[id].right = right;
    return id;
  }

  static bool hits_box(const Box& b, Vec3 o, Vec3 inv, double limit) {
    double t0 = 0, t1 = limit;
    const double lo[] = {b.lo.x, b.lo.y, b.lo.z}, hi[] = {b.hi.x, b.hi.y, b.hi.z};
    const double org[] = {o.x, o.y, o.z}, iv[] = {inv.x, inv.y, inv.z};
    for (int k = 0; k < 3; ++k) {
      double ta = (lo[k] - org[k]) * iv[k];
      double tb = (hi[k] - org[k]) * iv[k];
      if (std::isnan(ta) || std::isnan(tb)) {
        if (org[k] < lo[k] || org[k] > hi[k]) return false;
        continue;
      }
      if (ta > tb) std::swap(ta, tb);
      t0 = std::max(t0, ta);
      t1 = std::min(t1, tb);
      if (t0 > t1) return false;
    }
    return true;
  }

  // Moller-Trumbore; returns +inf on a miss.
  double intersect(std::uint32_t tri, Vec3 o, Vec3 d) const {
    const auto [a, b, c] = mesh_.corners(tri);
    const Vec3 e1 = b - a, e2 = c - a;
    const Vec3 p = cross(d, e2);
    const double det = dot(e1, p);
    if (std::abs(det) < 1e-300) return kInf;
    const double inv = 1 / det;
    const Vec3 s = o - a;
    const double u = dot(s, p) * inv;
    if (u < 0 || u > 1) return kInf;
    const Vec3 q = cross(s, e1);
    const double v = dot(d, q) * inv;
    if (v < 0 || u + v > 1) return kInf;
    return dot(e2, q) * inv;
  }

  const TriangleMesh& mesh_;
  std::vector<std::uint32_t> order_;
  std::vector<Vec3> centroids_;
  std::vector<Node> nodes_;
};

double fraction(double x) { return x - std::floor(x); }

}  // namespace

void PrintProfile::validate() const {
  if (!(min_wall_mm > 0) || !(min_wall_mm <= strict_wall_mm)) {
    throw std::invalid_argument("profile needs 0 < min_wall_mm <= strict_wall_mm");
  }
  if (!(min_strut_radius_mm > 0) || !(max_bbox_mm > 0) || !(cost_per_cm3 > 0) ||
      !(cost_base >= 0)) {
    throw std::invalid_argument("profile limits must be positive");
  }
}

PrintProfile parse_profile(std::string_view text, PrintProfile base) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto trim = [](std::string_view s) {
      const auto b = s.find_first_not_of(" \t\r");
      if (b == std::string_view::npos) return std::string_view{};
      return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("profile line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view raw = trim(line.substr(eq + 1));
    double value = 0;
    auto [end, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), value);
    if (ec != std::errc() || end != raw.data() + raw.size()) {
      throw std::invalid_argument("profile line " + std::to_string(line_no) + ": bad number '" +
                                  std::string(raw) + "'");
    }
    if (key == "min_wall_mm") base.min_wall_mm = value;
    else if (key == "strict_wall_mm") base.strict_wall_mm = value;
    else if (key == "min_strut_radius_mm") base.min_strut_radius_mm = value;
    else if (key == "max_bbox_mm") base.max_bbox_mm = value;
    else if (key == "cost_base") base.cost_base = value;
    else if (key == "cost_per_cm3") base.cost_per_cm3 = value;
    else {
      throw std::invalid_argument("profile line " + std::to_string(line_no) + ": unknown key '" +
                                  std::string(key) + "'");
    }
  }
  base.validate();
  return base;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::warn: return "warn";
    case Verdict::fail: return "fail";
  }
  return "?";
}

PrintReport validate(const TriangleMesh& mesh, const PrintProfile& profile) {
  if (mesh.triangles.empty()) throw std::invalid_argument("cannot validate an empty mesh");
  profile.validate();
  const MeshStats stats = mesh_stats(mesh);

  PrintReport report;
  report.watertight = stats.watertight;
  report.triangle_count = stats.triangle_count;
  const Box box = mesh.bounds();
  report.bbox_size = box.size();
  report.bbox_ok = report.bbox_size.x <= profile.max_bbox_mm &&
                   report.bbox_size.y <= profile.max_bbox_mm &&
                   report.bbox_size.z <= profile.max_bbox_mm;

  const double scale = std::max(1.0, length(report.bbox_size));
  const double min_t = 1e-9 * scale;
  const RayCaster caster(mesh);
  // R2 low-discrepancy sequence for barycentric sample positions.
  constexpr double kA1 = 0.7548776662466927;
  constexpr double kA2 = 0.5698402909980532;

  double thinnest = kInf;
  const auto groups = shells(mesh);
  report.shell_count = groups.size();
  for (const auto& shell : groups) {
    const std::size_t k = std::max<std::size_t>(64, shell.size() / 50);
    for (std::size_t s = 0; s < k; ++s) {
      const std::uint32_t tri = shell[s * shell.size() / k];
      const auto [a, b, c] = mesh.corners(tri);
      const Vec3 n = cross(b - a, c - a);
      const double len = length(n);
      if (!(len > 0)) continue;
      double u = fraction(0.5 + kA1 * s), v = fraction(0.5 + kA2 * s);
      if (u + v > 1) {
        u = 1 - u;
        v = 1 - v;
      }
      const Vec3 p = a + u * (b - a) + v * (c - a);
      const double t = caster.nearest(p, (-1 / len) * n, tri, min_t);
      ++report.wall_samples;
      if (!std::isfinite(t)) continue;
      thinnest = std::min(thinnest, t);
      if (t < profile.min_wall_mm) report.thin_regions.push_back(p);
    }
  }
  if (std::isfinite(thinnest)) report.min_wall_estimate_mm = thinnest;
  report.meets_strict_wall = std::isfinite(thinnest) && thinnest >= profile.strict_wall_mm;

  report.est_material_cm3 = stats.signed_volume / 1000;
  report.est_cost = profile.cost_base + profile.cost_per_cm3 * report.est_material_cm3;

  if (!report.watertight || !report.bbox_ok) {
    report.verdict = Verdict::fail;
  } else if (report.min_wall_estimate_mm && *report.min_wall_estimate_mm < profile.min_wall_mm) {
    report.verdict = Verdict::warn;
  } else {
    report.verdict = Verdict::pass;
  }
  if (!report.watertight) report.warnings.push_back("mesh is not closed");
  if (!report.bbox_ok) report.warnings.push_back("model exceeds the build volume");
  if (stats.degenerate_triangles > 0) {
    report.warnings.push_back(std::to_string(stats.degenerate_triangles) +
                              " degenerate triangles");
  }
  return report;
}

std::vector<StrutCheck> check_struts(std::span<const double> strut_radii,
                                     const PrintProfile& profile) {
  std::vector<StrutCheck> out;
  out.reserve(strut_radii.size());
  for (double r : strut_radii) {
    out.push_back({r, r < profile.min_strut_radius_mm ? Verdict::warn : Verdict::pass});
  }
  return out;
}

std::string to_json(const PrintReport& report, int indent) {
  nlohmann::ordered_json j;
  j["watertight"] = report.watertight;
  j["minWallMm"] = report.min_wall_estimate_mm ? nlohmann::ordered_json(*report.min_wall_estimate_mm)
                                               : nlohmann::ordered_json(nullptr);
  j["bboxOk"] = report.bbox_ok;
  j["shellCount"] = report.shell_count;
  j["materialCm3"] = report.est_material_cm3;
  j["cost"] = report.est_cost;
  j["verdict"] = verdict_name(report.verdict);
  j["triangleCount"] = report.triangle_count;
  j["meetsStrictWall"] = report.meets_strict_wall;
  j["bboxMm"] = {report.bbox_size.x, report.bbox_size.y, report.bbox_size.z};
  j["wallSamples"] = report.wall_samples;
  auto thin = nlohmann::ordered_json::array();
  for (const Vec3& p : report.thin_regions) thin.push_back({p.x, p.y, p.z});
  j["thinRegions"] = std::move(thin);
  j["warnings"] = report.warnings;
  return j.dump(indent);
}

}  // namespace archimesh
