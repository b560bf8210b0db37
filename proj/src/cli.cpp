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

#include "archimesh/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "archimesh/exhaustion.hpp"
#include "archimesh/mesh.hpp"
#include "archimesh/packing.hpp"
#include "archimesh/printcheck.hpp"
#include "archimesh/solids.hpp"
#include "archimesh/stl_io.hpp"
#include "archimesh/verify.hpp"

namespace archimesh::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ec == std::errc() ? end : buf);
}

std::string fixed(double v, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

Params parse_params(const std::vector<std::string>& items) {
  Params params;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("--param expects key=value, got '" + item + "'");
    }
    const std::string raw = item.substr(eq + 1);
    double value = 0;
    auto [end, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), value);
    if (ec != std::errc() || end != raw.data() + raw.size()) {
      throw UsageError("--param " + item.substr(0, eq) + ": bad number '" + raw + "'");
    }
    params[item.substr(0, eq)] = value;
  }
  return params;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json stats_json(const MeshStats& st) {
  return {{"triangles", st.triangle_count},     {"signedVolume", st.signed_volume},
          {"surfaceArea", st.surface_area},     {"watertight", st.watertight},
          {"eulerCharacteristic", st.euler_characteristic},
          {"shellCount", st.shell_count},       {"degenerateTriangles", st.degenerate_triangles}};
}

void print_stats(std::ostream& out, const MeshStats& st) {
  out << "triangles       " << st.triangle_count << '\n'
      << "signed volume   " << num(st.signed_volume) << " mm^3\n"
      << "surface area    " << num(st.surface_area) << " mm^2\n"
      << "watertight      " << (st.watertight ? "yes" : "no") << '\n'
      << "euler           " << st.euler_characteristic << '\n'
      << "shells          " << st.shell_count << '\n';
}

void write_mesh(const TriangleMesh& mesh, const std::string& path, const std::string& format,
                const std::string& name) {
  if (format == "ascii") {
    stl::write_file(path, stl::write_ascii(mesh, name));
  } else {
    stl::write_file(path, stl::write_binary(mesh));
  }
}

struct Options {
  bool json = false;
  std::string config;

  std::string kind;
  std::vector<std::string> params;
  std::string method = "exact";
  std::size_t slices = 10000;
  std::size_t probes = 8;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 1;

  int sides = 96;
  int doublings = 0;
  double radius = 1;

  std::string verify_kind;
  bool verify_all = false;

  int resolution = 64;
  std::string out_path;
  std::string format = "binary";
  std::string units = "mm";

  std::string file;
  std::string profile_path;

  ScrewParams screw;
  int struts = 4;
  double strut_radius = 1.5;

  int chain = 6;
  double mobius = 0;
  double outer = 20;
};

int cmd_list(const Options& o, std::ostream& out) {
  Json all = Json::array();
  for (SolidKind kind : all_kinds()) {
    Json params = Json::array();
    std::string line;
    for (const auto& p : param_schema(kind)) {
      params.push_back({{"name", p.name},
                        {"default", p.default_value},
                        {"integer", p.integer},
                        {"length", p.length},
                        {"description", p.description}});
      line += (line.empty() ? "" : "  ") + p.name + "=" + num(p.default_value);
    }
    const bool exact = make_solid(kind).exact_volume.has_value();
    all.push_back({{"kind", kind_name(kind)}, {"params", params}, {"exactVolume", exact}});
    if (!o.json) out << std::left << std::setw(21) << kind_name(kind) << line << '\n';
  }
  if (o.json) out << all.dump(2) << '\n';
  return 0;
}

int cmd_volume(const Options& o, std::ostream& out) {
  const auto spec = make_solid(o.kind, parse_params(o.params));
  const Profile profile = [&spec](double t) { return spec.cross_section(t); };
  Json j{{"kind", kind_name(spec.kind)}, {"method", o.method}};
  std::vector<std::pair<std::string, std::string>> rows;
  if (o.method == "exact") {
    if (!spec.exact_volume) {
      throw std::invalid_argument(std::string(kind_name(spec.kind)) + " has no closed-form volume");
    }
    j["volume"] = *spec.exact_volume;
    rows = {{"volume", num(*spec.exact_volume)}};
    if (spec.exact_surface) {
      j["surface"] = *spec.exact_surface;
      rows.emplace_back("surface", num(*spec.exact_surface));
    }
  } else if (o.method == "sum") {
    const double v = archimedes_sum(profile, spec.support, o.slices);
    j["volume"] = v;
    j["slices"] = o.slices;
    rows = {{"volume", num(v)}, {"slices", std::to_string(o.slices)}};
  } else if (o.method == "bounds") {
    const auto b = riemann_bounds(profile, spec.support, o.slices, o.probes);
    j["lower"] = b.lower;
    j["upper"] = b.upper;
    j["gap"] = b.gap();
    j["slices"] = o.slices;
    j["probes"] = o.probes;
    rows = {{"lower", num(b.lower)},
            {"upper", num(b.upper)},
            {"gap", num(b.gap())},
            {"slices", std::to_string(o.slices)},
            {"probes", std::to_string(o.probes)}};
  } else {
    const auto mc = monte_carlo_volume(spec, o.samples, o.seed);
    j["estimate"] = mc.estimate;
    j["stdError"] = mc.std_error;
    j["hits"] = mc.hits;
    j["samples"] = mc.samples;
    j["seed"] = o.seed;
    rows = {{"estimate", num(mc.estimate)},
            {"std_error", num(mc.std_error)},
            {"hits", std::to_string(mc.hits)},
            {"samples", std::to_string(mc.samples)},
            {"seed", std::to_string(o.seed)}};
  }
  if (o.method != "exact" && spec.exact_volume) j["exact"] = *spec.exact_volume;
  if (o.json) {
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "kind       " << kind_name(spec.kind) << '\n' << "method     " << o.method << '\n';
  for (const auto& [key, value] : rows) out << std::left << std::setw(11) << key << value << '\n';
  return 0;
}

int cmd_pi(const Options& o, std::ostream& out) {
  Json rows = Json::array();
  if (!o.json) out << "sides     inner      outer      gap\n";
  for (int k = 0; k <= o.doublings; ++k) {
    const auto p = polygon_sandwich(o.sides << k, o.radius);
    rows.push_back({{"sides", p.n},
                    {"inner", p.inner_circumference},
                    {"outer", p.outer_circumference},
                    {"gap", p.gap()},
                    {"innerArea", p.inner_area_bound},
                    {"outerArea", p.outer_area_bound}});
    if (!o.json) {
      out << std::left << std::setw(10) << p.n << std::setw(11) << fixed(p.inner_circumference, 6)
          << std::setw(11) << fixed(p.outer_circumference, 6) << fixed(p.gap(), 6) << '\n';
    }
  }
  if (o.json) out << Json{{"radius", o.radius}, {"rows", rows}}.dump(2) << '\n';
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<CheckResult> results;
  if (!o.verify_kind.empty()) {
    const auto kind = parse_kind(o.verify_kind);
    if (!kind) throw std::invalid_argument("unknown kind '" + o.verify_kind + "'");
    results = verify_kind(*kind);
  } else {
    results = verify_all();
  }
  const auto passed = static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; }));
  if (o.json) {
    Json checks = Json::array();
    for (const auto& r : results) {
      checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    out << Json{{"passed", passed == results.size()}, {"checks", checks}}.dump(2) << '\n';
  } else {
    std::size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.name.size());
    for (const auto& r : results) {
      out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width) + 2)
          << r.name << r.detail << '\n';
    }
    out << passed << '/' << results.size() << " checks passed\n";
  }
  return passed == results.size() ? 0 : 1;
}

int cmd_mesh(const Options& o, std::ostream& out) {
  const auto spec = make_solid(o.kind, parse_params(o.params));
  auto mesh = spec.kind == SolidKind::steiner_pack
                  ? pack_mesh(steiner_chain(static_cast<int>(spec.param("n")), spec.param("R"),
                                            spec.param("mobius_a")),
                              o.resolution)
                  : tessellate(spec, o.resolution, o.resolution);
  if (o.units == "inch") mesh = stl::scale_mesh(std::move(mesh), stl::Unit::inch, stl::Unit::mm);
  write_mesh(mesh, o.out_path, o.format, std::string(kind_name(spec.kind)));
  const auto st = mesh_stats(mesh);
  if (o.json) {
    Json j{{"kind", kind_name(spec.kind)}, {"file", o.out_path}, {"format", o.format}};
    j["stats"] = stats_json(st);
    out << j.dump(2) << '\n';
  } else {
    out << "wrote " << o.out_path << " (" << o.format << ")\n";
    print_stats(out, st);
  }
  return 0;
}

int cmd_check(const Options& o, const PrintProfile& base, std::ostream& out) {
  const PrintProfile profile =
      o.profile_path.empty() ? base : parse_profile(slurp(o.profile_path), base);
  const auto bytes = stl::read_file(o.file);
  auto conversion = stl::to_mesh(stl::read_stl(bytes));
  auto report = validate(conversion.mesh, profile);
  report.warnings.insert(report.warnings.begin(), conversion.warnings.begin(),
                         conversion.warnings.end());
  out << to_json(report) << '\n';
  return report.verdict == Verdict::fail ? 1 : 0;
}

int cmd_screw(const Options& o, const PrintProfile& profile, std::ostream& out) {
  const auto assembly = make_screw(o.screw);
  TriangleMesh combined;
  std::vector<double> radii;
  if (o.struts > 0) {
    const auto contacts = screw_contacts(o.screw, o.struts);
    combined = add_struts(assembly.parts, contacts, o.strut_radius);
    radii.assign(contacts.size(), o.strut_radius);
  } else {
    for (const auto& part : assembly.parts) combined.append(part);
  }
  write_mesh(combined, o.out_path, o.format, "screw");
  const auto st = mesh_stats(combined);
  const auto struts = check_struts(radii, profile);
  if (o.json) {
    Json j{{"file", o.out_path},
           {"height", assembly.height},
           {"tubeInnerRadius", assembly.tube_inner_radius},
           {"tubeOuterRadius", assembly.tube_outer_radius}};
    j["stats"] = stats_json(st);
    Json sj = Json::array();
    for (const auto& s : struts) sj.push_back({{"radius", s.radius}, {"verdict", verdict_name(s.verdict)}});
    j["struts"] = sj;
    j["warnings"] = assembly.warnings;
    out << j.dump(2) << '\n';
  } else {
    out << "wrote " << o.out_path << '\n';
    print_stats(out, st);
    out << "height          " << num(assembly.height) << " mm\n";
    for (std::size_t i = 0; i < struts.size(); ++i) {
      out << "strut " << i << "         r=" << num(struts[i].radius) << ' '
          << verdict_name(struts[i].verdict) << '\n';
    }
    for (const auto& w : assembly.warnings) out << "warning: " << w << '\n';
  }
  return 0;
}

int cmd_steiner(const Options& o, std::ostream& out) {
  const auto pack = steiner_chain(o.chain, o.outer, o.mobius);
  const auto mesh = pack_mesh(pack, o.resolution);
  write_mesh(mesh, o.out_path, o.format, "steiner");
  const auto st = mesh_stats(mesh);
  const double residual = max_tangency_residual(pack);
  if (o.json) {
    Json spheres = Json::array();
    for (const auto& s : pack.spheres) {
      spheres.push_back({{"center", {s.center.x, s.center.y, s.center.z}}, {"radius", s.radius}});
    }
    Json j{{"file", o.out_path}, {"spheres", spheres}, {"maxTangencyResidual", residual}};
    j["stats"] = stats_json(st);
    out << j.dump(2) << '\n';
  } else {
    out << "wrote " << o.out_path << '\n';
    print_stats(out, st);
    out << "sphere  center                              radius\n";
    for (std::size_t i = 0; i < pack.spheres.size(); ++i) {
      const auto& s = pack.spheres[i];
      out << std::left << std::setw(8) << i << std::setw(36)
          << ("(" + fixed(s.center.x, 6) + ", " + fixed(s.center.y, 6) + ", 0)")
          << fixed(s.radius, 6) << '\n';
    }
    out << "max tangency residual " << num(residual) << '\n';
  }
  return 0;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Archimedean solids: volumes by exhaustion, meshes, STL export, print checks",
               "archimesh"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Machine-readable JSON output");
  app.add_option("--config", o.config, "key=value file with default print profile and cost model")
      ->check(CLI::ExistingFile);

  const auto kind_list = [] {
    std::vector<std::string> names;
    for (SolidKind k : all_kinds()) names.emplace_back(kind_name(k));
    return names;
  }();

  auto* list = app.add_subcommand("list", "Catalog kinds and their parameters");

  auto* volume = app.add_subcommand("volume", "Volume by closed form, slice sum, bounds or Monte Carlo");
  volume->add_option("kind", o.kind, "Solid kind")->required();
  volume->add_option("--param", o.params, "Parameter as key=value (repeatable)");
  volume->add_option("--method", o.method, "exact, sum, bounds or mc")
      ->check(CLI::IsMember({"exact", "sum", "bounds", "mc"}));
  volume->add_option("--slices", o.slices, "Slices for sum and bounds")->check(CLI::PositiveNumber);
  volume->add_option("--probes", o.probes, "Probes per cell for bounds")->check(CLI::Range(2, 1 << 20));
  volume->add_option("--samples", o.samples, "Monte Carlo samples")->check(CLI::PositiveNumber);
  volume->add_option("--seed", o.seed, "Monte Carlo seed");

  auto* pi = app.add_subcommand("pi", "Inscribed/circumscribed polygon bounds on pi r");
  pi->add_option("--sides", o.sides, "Polygon sides")->check(CLI::Range(3, 1 << 24));
  pi->add_option("--doublings", o.doublings, "Extra rows, doubling the sides each time")
      ->check(CLI::Range(0, 20));
  pi->add_option("--radius", o.radius, "Circle radius")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  auto* vk = verify->add_option("--kind", o.verify_kind, "Check one kind")
                 ->check(CLI::IsMember(kind_list));
  auto* va = verify->add_flag("--all", o.verify_all, "Every kind plus the acceptance suite");
  vk->excludes(va);

  auto* mesh = app.add_subcommand("mesh", "Tessellate a solid and write STL");
  mesh->add_option("kind", o.kind, "Solid kind")->required();
  mesh->add_option("--param", o.params, "Parameter as key=value (repeatable)");
  mesh->add_option("--resolution", o.resolution, "Slices and ring samples")->check(CLI::Range(3, 4096));
  mesh->add_option("--out", o.out_path, "Output STL file")->required();
  mesh->add_option("--format", o.format, "ascii or binary")->check(CLI::IsMember({"ascii", "binary"}));
  mesh->add_option("--units", o.units, "Units of the parameters; the file is always mm")
      ->check(CLI::IsMember({"mm", "inch"}));

  auto* check = app.add_subcommand("check", "Printability report for an STL file");
  check->add_option("file", o.file, "STL file")->required()->check(CLI::ExistingFile);
  check->add_option("--profile", o.profile_path, "key=value print profile")->check(CLI::ExistingFile);

  auto* screw = app.add_subcommand("screw", "Archimedes screw with breakaway struts");
  screw->add_option("--shaft", o.screw.shaft_radius, "Shaft radius (mm)");
  screw->add_option("--blade", o.screw.blade_radius, "Blade radius (mm)");
  screw->add_option("--pitch", o.screw.pitch, "Pitch (mm per turn)");
  screw->add_option("--turns", o.screw.turns, "Number of turns");
  screw->add_option("--thickness", o.screw.blade_thickness, "Axial blade thickness (mm)");
  screw->add_option("--tube-inner", o.screw.tube_inner_radius, "Tube inner radius (mm), 0 = auto");
  screw->add_option("--wall", o.screw.tube_wall, "Tube wall (mm)");
  screw->add_option("--resolution", o.screw.resolution, "Segments per turn")->check(CLI::Range(8, 4096));
  screw->add_option("--struts", o.struts, "Number of struts")->check(CLI::Range(0, 1000));
  screw->add_option("--strut-radius", o.strut_radius, "Strut radius (mm)");
  screw->add_option("--out", o.out_path, "Output STL file")->required();
  screw->add_option("--format", o.format, "ascii or binary")->check(CLI::IsMember({"ascii", "binary"}));

  auto* steiner = app.add_subcommand("steiner", "Steiner chain lifted to a sphere pack");
  steiner->add_option("--n", o.chain, "Chain length")->check(CLI::Range(3, 1000));
  steiner->add_option("--mobius", o.mobius, "Disc automorphism parameter in [0, 1)");
  steiner->add_option("--radius", o.outer, "Outer sphere radius (mm)")->check(CLI::PositiveNumber);
  steiner->add_option("--resolution", o.resolution, "Sphere stacks and segments")
      ->check(CLI::Range(3, 4096));
  steiner->add_option("--out", o.out_path, "Output STL file")->required();
  steiner->add_option("--format", o.format, "ascii or binary")->check(CLI::IsMember({"ascii", "binary"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    const PrintProfile profile = o.config.empty() ? PrintProfile{} : parse_profile(slurp(o.config));
    if (list->parsed()) return cmd_list(o, out);
    if (volume->parsed()) return cmd_volume(o, out);
    if (pi->parsed()) return cmd_pi(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (mesh->parsed()) return cmd_mesh(o, out);
    if (check->parsed()) return cmd_check(o, profile, out);
    if (screw->parsed()) return cmd_screw(o, profile, out);
    if (steiner->parsed()) return cmd_steiner(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace archimesh::cli
