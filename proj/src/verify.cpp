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

#include "archimesh/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>
#include <random>
#include <string>

#include "archimesh/exhaustion.hpp"
#include "archimesh/packing.hpp"
#include "archimesh/printcheck.hpp"
#include "archimesh/stl_io.hpp"

namespace archimesh {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

double rel_err(double value, double exact) { return std::abs(value - exact) / std::abs(exact); }

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Profile profile_of(const SolidSpec& spec) {
  return [&spec](double t) { return spec.cross_section(t); };
}

bool smooth_kind(SolidKind kind) { return kind == SolidKind::sphere || kind == SolidKind::torus; }

SolidSpec scaled(const SolidSpec& spec, double lambda) {
  Params params;
  for (const auto& info : param_schema(spec.kind)) {
    double v = spec.param(info.name);
    if (info.length) v *= lambda;
    if (info.name == "base_area") v *= lambda * lambda;
    params[info.name] = v;
  }
  return make_solid(spec.kind, params);
}

void check_steiner_kind(const SolidSpec& spec, std::vector<CheckResult>& out) {
  const auto pack = steiner_chain(static_cast<int>(spec.param("n")), spec.param("R"),
                                  spec.param("mobius_a"));
  const double residual = max_tangency_residual(pack);
  out.push_back({"tangency residual", residual < 1e-9, fmt("%.3e", residual)});
  const auto st = mesh_stats(pack_mesh(pack, 32));
  out.push_back({"pack mesh shells", st.watertight && st.shell_count == pack.spheres.size(),
                 fmt("%zu shells, watertight=%d", st.shell_count, st.watertight)});
}

bool write_read_write_identical(const TriangleMesh& mesh) {
  const auto bytes = stl::write_binary(mesh);
  const auto back = stl::to_mesh(stl::read_stl(bytes)).mesh;
  return stl::write_binary(back) == bytes;
}

bool ascii_vertices_identical(const TriangleMesh& mesh) {
  const auto doc = stl::read_stl(stl::write_ascii(mesh));
  const auto expected = stl::to_solid(mesh);
  if (doc.encoding != stl::Encoding::ascii || doc.solids.size() != 1) return false;
  const auto& facets = doc.solids.front().facets;
  if (facets.size() != expected.facets.size()) return false;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (int v = 0; v < 3; ++v) {
      for (int c = 0; c < 3; ++c) {
        if (std::bit_cast<std::uint32_t>(facets[i].vertices[v][c]) !=
            std::bit_cast<std::uint32_t>(expected.facets[i].vertices[v][c])) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<TriangleMesh> catalog_meshes(int resolution) {
  std::vector<TriangleMesh> meshes;
  for (SolidKind kind : all_kinds()) {
    if (kind == SolidKind::steiner_pack) continue;
    meshes.push_back(tessellate(make_solid(kind), resolution, resolution));
  }
  meshes.push_back(pack_mesh(steiner_chain(6, 1, 0), resolution / 2));
  return meshes;
}

CheckResult two_thirds_laws() {
  Stopwatch clock;
  const auto sphere = make_solid(SolidKind::sphere, {{"r", 1}});
  const auto cylinder = make_solid(SolidKind::cylinder, {{"r", 1}, {"h", 2}});
  const double v = *sphere.exact_volume / *cylinder.exact_volume;
  const double s = *sphere.exact_surface / *cylinder.exact_surface;
  const double t = clock.seconds();
  const bool ok = std::abs(v - 2.0 / 3) <= 4 * kEps && std::abs(s - 2.0 / 3) <= 4 * kEps && t < 1;
  return {"sphere/cylinder 2/3 laws", ok,
          fmt("V ratio %.17g, S ratio %.17g, %.3f s", v, s, t)};
}

CheckResult cavalieri_hemisphere() {
  const auto hemi = upper_hemisphere(1);
  const auto cmc = make_solid(SolidKind::cylinder_minus_cone, {{"r", 1}});
  const double residual = cavalieri_compare(hemi, cmc, 10000);
  const double a = archimedes_sum(profile_of(hemi), hemi.support, 10000);
  const double b = archimedes_sum(profile_of(cmc), cmc.support, 10000);
  const bool ok = residual < 1e-12 && std::abs(a - b) < 1e-12;
  return {"Cavalieri hemisphere vs cylinder minus cone", ok,
          fmt("residual %.3e, sums differ by %.3e", residual, std::abs(a - b))};
}

CheckResult polygon_bracket() {
  const auto p96 = polygon_sandwich(96, 1);
  bool ok = p96.inner_circumference < kPi && kPi < p96.outer_circumference && p96.gap() < 0.002;
  double worst_lo = 1e300, worst_hi = 0;
  for (int k = 0; k <= 6; ++k) {
    const int n = 6 << k;
    const double ratio = polygon_sandwich(n, 1).gap() / polygon_sandwich(2 * n, 1).gap();
    worst_lo = std::min(worst_lo, ratio);
    worst_hi = std::max(worst_hi, ratio);
  }
  ok = ok && worst_lo >= 3.5 && worst_hi <= 4.5;
  return {"polygon sandwich", ok,
          fmt("96-gon [%.6f, %.6f] gap %.5f; gap ratio in [%.4f, %.4f]",
              p96.inner_circumference, p96.outer_circumference, p96.gap(), worst_lo, worst_hi)};
}

CheckResult hoof_four_thirds() {
  const auto hoof = make_solid(SolidKind::hoof, {{"r", 1}, {"s", 2}});
  const double exact = *hoof.exact_volume;
  const double sum = archimedes_sum(profile_of(hoof), hoof.support, 10000);
  const auto mc = monte_carlo_volume(hoof, 1000000, 1);
  const bool ok = std::abs(exact - 4.0 / 3) <= 4 * kEps && hoof.axis == Axis::y &&
                  rel_err(sum, 4.0 / 3) < 1e-3 &&
                  std::abs(mc.estimate - 4.0 / 3) <= 4 * mc.std_error;
  return {"hoof = 4/3", ok,
          fmt("exact %.15g, sum %.9f, mc %.5f +- %.5f", exact, sum, mc.estimate, mc.std_error)};
}

CheckResult globe_law() {
  bool ok = true;
  double worst = 0;
  for (int n = 3; n <= 12; ++n) {
    const auto globe = make_solid(SolidKind::globe, {{"n", double(n)}, {"r", 1}});
    const double ratio = *globe.exact_volume / circumscribing_prism(globe).volume;
    worst = std::max(worst, std::abs(ratio - 2.0 / 3));
  }
  ok = worst <= 4 * kEps;
  std::string detail = fmt("closed-form deviation %.2e;", worst);
  for (int n : {4, 6}) {
    const auto globe = make_solid(SolidKind::globe, {{"n", double(n)}, {"r", 1}});
    const double ratio = mesh_stats(tessellate(globe, 256, 256)).surface_area /
                         circumscribing_prism(globe).surface;
    ok = ok && rel_err(ratio, 2.0 / 3) < 0.01;
    detail += fmt(" n=%d surface ratio %.5f", n, ratio);
  }
  return {"globe 2/3 law", ok, detail};
}

CheckResult steinmetz() {
  Stopwatch clock;
  const double bi_exact = 16.0 / 3;
  const auto bi = make_solid(SolidKind::bicylinder, {{"r", 1}});
  const double bi_mesh = mesh_stats(tessellate(bi, 200, 4)).signed_volume;
  const double bi_sum = archimedes_sum(profile_of(bi), bi.support, 10000);
  const double tri_exact = 8 * (2 - std::sqrt(2.0));
  const auto mc = monte_carlo_volume(make_solid(SolidKind::tricylinder, {{"r", 1}}), 10000000, 7);
  const double t = clock.seconds();
  const bool ok = rel_err(bi_mesh, bi_exact) < 0.005 && rel_err(bi_sum, bi_exact) < 0.005 &&
                  std::abs(mc.estimate - tri_exact) <= 4 * mc.std_error && t < 60;
  return {"Steinmetz solids", ok,
          fmt("bicylinder mesh %.6f sum %.6f; tricylinder mc %.5f +- %.5f vs %.5f; %.2f s",
              bi_mesh, bi_sum, mc.estimate, mc.std_error, tri_exact, t)};
}

CheckResult cork_half_rectangle() {
  const double r = 1, h = 1;
  const auto cork = make_solid(SolidKind::cork, {{"r", r}, {"h", h}});
  double residual = 0;
  const int stations = 1000;
  for (int i = 0; i < stations; ++i) {
    const double t = cork.support.lo + cork.support.length() * (i + 0.5) / stations;
    const double rectangle = 2 * std::sqrt(r * r - t * t) * h;
    residual = std::max(residual, std::abs(cork.cross_section(t) - rectangle / 2));
  }
  const bool ok = std::abs(*cork.exact_volume - kPi / 2) <= 4 * kEps && residual < 1e-12;
  return {"cork = pi/2", ok, fmt("exact %.15g, half-rectangle residual %.3e",
                                 *cork.exact_volume, residual)};
}

CheckResult pappus_torus() {
  std::mt19937_64 rng(1729);
  std::uniform_real_distribution<double> radius(0.5, 50);
  std::uniform_real_distribution<double> fraction(0.05, 0.95);
  double worst = 0;
  for (int i = 0; i < 10; ++i) {
    const double big = radius(rng);
    const double a = big * fraction(rng);
    const double v = pappus_volume(kPi * a * a, big);
    const double exact = *make_solid(SolidKind::torus, {{"R", big}, {"a", a}}).exact_volume;
    worst = std::max(worst, rel_err(v, exact));
  }
  return {"Pappus vs torus", worst <= 4 * kEps, fmt("worst relative error %.2e", worst)};
}

CheckResult stl_codec() {
  bool ok = true;
  std::size_t count = 0;
  for (const auto& mesh : catalog_meshes(64)) {
    const auto bytes = stl::write_binary(mesh);
    ok = ok && bytes.size() == 84 + 50 * mesh.triangles.size();
    ok = ok && write_read_write_identical(mesh) && ascii_vertices_identical(mesh);
    ++count;
  }
  return {"STL codec round trips", ok, fmt("%zu meshes", count)};
}

CheckResult mesh_integrity() {
  bool ok = true;
  std::size_t count = 0;
  for (int res : {64, 128}) {
    for (const auto& mesh : catalog_meshes(res)) {
      ok = ok && mesh_stats(mesh).watertight;
      ++count;
    }
  }
  std::size_t removals = 0;
  for (SolidKind kind : {SolidKind::sphere, SolidKind::cone, SolidKind::torus}) {
    const auto mesh = tessellate(make_solid(kind), 12, 12);
    for (std::size_t i = 0; i < mesh.triangles.size(); ++i) {
      auto holed = mesh;
      holed.triangles.erase(holed.triangles.begin() + static_cast<std::ptrdiff_t>(i));
      ok = ok && !mesh_stats(holed).watertight;
      ++removals;
    }
  }
  return {"mesh integrity", ok,
          fmt("%zu meshes watertight, %zu single-triangle removals detected", count, removals)};
}

CheckResult printability() {
  const auto solid = validate(solid_cube_fixture());
  const auto shell = validate(thin_shell_fixture());
  const auto holed = validate(holed_cube_fixture());
  const bool ok = solid.verdict == Verdict::pass && shell.verdict == Verdict::warn &&
                  holed.verdict == Verdict::fail;
  return {"printability fixtures", ok,
          fmt("solid %s, shell %s, holed %s", verdict_name(solid.verdict).data(),
              verdict_name(shell.verdict).data(), verdict_name(holed.verdict).data())};
}

CheckResult steiner_pack_check() {
  const double big = 1;
  const auto sym = steiner_chain(6, big, 0);
  const double inner = sym.spheres[6].radius;
  double spread = 0;
  for (int i = 0; i < 6; ++i) {
    spread = std::max(spread, std::abs(sym.spheres[i].radius - sym.spheres[0].radius));
  }
  const double sym_res = max_tangency_residual(sym);
  const double moved_res = max_tangency_residual(steiner_chain(6, big, 0.4));
  const bool ok = std::abs(inner - big / 3) <= 1e-12 && spread <= 1e-12 && sym_res < 1e-9 &&
                  moved_res < 1e-9;
  return {"Steiner pack", ok,
          fmt("r_inner %.15g, chain radius spread %.1e, residuals %.1e / %.1e", inner, spread,
              sym_res, moved_res)};
}

}  // namespace

TriangleMesh solid_cube_fixture() { return box_mesh({0, 0, 0}, {10, 10, 10}); }

TriangleMesh thin_shell_fixture() {
  auto mesh = solid_cube_fixture();
  mesh.append(box_mesh({0.5, 0.5, 0.5}, {9.5, 9.5, 9.5}, true));
  return mesh;
}

TriangleMesh holed_cube_fixture() {
  auto mesh = solid_cube_fixture();
  mesh.triangles.pop_back();
  return mesh;
}

std::vector<CheckResult> verify_kind(SolidKind kind) {
  std::vector<CheckResult> out;
  const auto spec = make_solid(kind);
  const auto profile = profile_of(spec);

  double min_area = 0;
  for (int i = 0; i <= 1000; ++i) {
    min_area = std::min(min_area, spec.cross_section(spec.support.lo +
                                                     spec.support.length() * i / 1000.0));
  }
  out.push_back({"cross-section nonnegative", min_area >= 0 && spec.support.lo < spec.support.hi,
                 fmt("min %.3e", min_area)});

  {
    // Sample a box twice the size of bbox; nothing outside bbox may be inside.
    const Vec3 mid = (spec.bbox.lo + spec.bbox.hi) * 0.5;
    const Vec3 half = spec.bbox.size();
    const CounterRng rng(99);
    std::size_t escaped = 0;
    for (std::uint64_t i = 0; i < 20000; ++i) {
      const Vec3 p{mid.x + half.x * (rng.uniform(3 * i) * 2 - 1),
                   mid.y + half.y * (rng.uniform(3 * i + 1) * 2 - 1),
                   mid.z + half.z * (rng.uniform(3 * i + 2) * 2 - 1)};
      if (spec.contains(p) && !spec.bbox.contains(p)) ++escaped;
    }
    out.push_back({"containment within bbox", escaped == 0, fmt("%zu escapes", escaped)});
  }

  if (kind == SolidKind::steiner_pack) {
    check_steiner_kind(spec, out);
    return out;
  }

  const double exact = *spec.exact_volume;
  const double sum = archimedes_sum(profile, spec.support, 10000);
  out.push_back({"sum matches closed form", rel_err(sum, exact) < 1e-3,
                 fmt("n=1e4 relative error %.3e", rel_err(sum, exact))});

  {
    bool ok = true;
    std::string detail;
    for (std::size_t n : {100, 200, 400}) {
      const double e1 = std::abs(archimedes_sum(profile, spec.support, n) - exact);
      const double e2 = std::abs(archimedes_sum(profile, spec.support, 2 * n) - exact);
      if (e1 > 1e-12 * exact) ok = ok && e2 <= 0.6 * e1;
      detail += fmt("%s%.2e", detail.empty() ? "" : " ", e1);
    }
    out.push_back({"sum converges", ok, "errors " + detail});
  }

  {
    bool ok = true;
    double previous = std::numeric_limits<double>::infinity();
    for (std::size_t n : {100, 200, 400}) {
      const auto bounds = riemann_bounds(profile, spec.support, n);
      const double slack = 1e-12 * exact;
      ok = ok && bounds.lower <= exact + slack && exact - slack <= bounds.upper &&
           bounds.gap() <= previous;
      previous = bounds.gap();
    }
    out.push_back({"bounds bracket closed form", ok, fmt("gap at n=400 %.3e", previous)});
  }

  {
    const auto mc = monte_carlo_volume(spec, 1000000, 2026);
    const double dev = std::abs(mc.estimate - exact);
    out.push_back({"Monte Carlo within 4 sigma", dev <= 4 * mc.std_error,
                   fmt("%.5f +- %.5f", mc.estimate, mc.std_error)});
  }

  {
    const double lambda = 2.5;
    const double ratio = *scaled(spec, lambda).exact_volume / exact;
    out.push_back({"volume scales as cube", rel_err(ratio, lambda * lambda * lambda) < 1e-13,
                   fmt("ratio %.15g", ratio)});
  }

  {
    bool ok = true;
    double previous = std::numeric_limits<double>::infinity();
    std::string detail;
    const double limits[] = {0.02, 0.005, 0.0015};
    int i = 0;
    for (int res : {64, 128, 256}) {
      const auto st = mesh_stats(tessellate(spec, res, res));
      const double err = rel_err(st.signed_volume, exact);
      ok = ok && st.watertight && st.degenerate_triangles == 0 && st.signed_volume > 0 &&
           err < 0.02 && err <= previous * 1.0001 + 1e-12;
      if (smooth_kind(kind)) ok = ok && err < limits[i];
      previous = err;
      detail += fmt("%s%d: %.2e", detail.empty() ? "" : ", ", res, err);
      ++i;
    }
    out.push_back({"mesh watertight and converging", ok, detail});
  }

  switch (kind) {
    case SolidKind::sphere: {
      const double v = sphere_volume_from_surface(spec.param("r"), *spec.exact_surface);
      out.push_back({"V = A r / 3", rel_err(v, exact) <= 4 * kEps, fmt("%.15g", v)});
      [[fallthrough]];
    }
    case SolidKind::globe:
    case SolidKind::bicylinder: {
      const auto prism = circumscribing_prism(spec);
      const double vr = exact / prism.volume;
      const double sr = *spec.exact_surface / prism.surface;
      out.push_back({"2/3 of circumscribing prism",
                     std::abs(vr - 2.0 / 3) <= 4 * kEps && std::abs(sr - 2.0 / 3) <= 4 * kEps,
                     fmt("volume %.15g, surface %.15g", vr, sr)});
      break;
    }
    case SolidKind::dome: {
      const double vr = exact / circumscribing_prism(spec).volume;
      out.push_back({"2/3 of circumscribing prism", std::abs(vr - 2.0 / 3) <= 4 * kEps,
                     fmt("volume %.15g", vr)});
      break;
    }
    case SolidKind::cone: {
      const double r = spec.param("r");
      const double v = cone_volume(kPi * r * r, spec.param("h"));
      out.push_back({"V = h A / 3", rel_err(v, exact) <= 4 * kEps, fmt("%.15g", v)});
      break;
    }
    case SolidKind::pyramid: {
      const double v = cone_volume(spec.param("base_area"), spec.param("h"));
      out.push_back({"V = h A / 3", rel_err(v, exact) <= 4 * kEps, fmt("%.15g", v)});
      break;
    }
    case SolidKind::cylinder_minus_cone: {
      const double residual = cavalieri_compare(upper_hemisphere(spec.param("r")), spec, 10000);
      out.push_back({"slices match hemisphere", residual < 1e-12, fmt("%.3e", residual)});
      break;
    }
    case SolidKind::torus: {
      const double a = spec.param("a");
      const double v = pappus_volume(kPi * a * a, spec.param("R"));
      out.push_back({"Pappus", rel_err(v, exact) <= 4 * kEps, fmt("%.15g", v)});
      break;
    }
    default:
      break;
  }
  return out;
}

std::vector<CheckResult> acceptance_suite() {
  return {two_thirds_laws(),     cavalieri_hemisphere(), polygon_bracket(), hoof_four_thirds(),
          globe_law(),           steinmetz(),            cork_half_rectangle(), pappus_torus(),
          stl_codec(),           mesh_integrity(),       printability(),    steiner_pack_check()};
}

std::vector<CheckResult> verify_all() {
  std::vector<CheckResult> out;
  for (SolidKind kind : all_kinds()) {
    for (auto& r : verify_kind(kind)) {
      r.name = std::string(kind_name(kind)) + ": " + r.name;
      out.push_back(std::move(r));
    }
  }
  auto acceptance = acceptance_suite();
  for (std::size_t i = 0; i < acceptance.size(); ++i) {
    acceptance[i].name = "acceptance " + std::to_string(i + 1) + ": " + acceptance[i].name;
  }
  out.insert(out.end(), acceptance.begin(), acceptance.end());
  return out;
}

}  // namespace archimesh
