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

#include "archimesh/mesh.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace archimesh {
namespace {

std::uint64_t edge_key(std::uint32_t a, std::uint32_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

struct DisjointSets {
  std::vector<std::uint32_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void join(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

void check_indices(const TriangleMesh& mesh) {
  const auto n = mesh.vertices.size();
  for (const auto& t : mesh.triangles) {
    for (auto i : t) {
      if (i >= n) throw std::out_of_range("triangle references vertex past the end");
    }
  }
}

}  // namespace

std::uint32_t TriangleMesh::add_vertex(Vec3 p) {
  vertices.push_back(p);
  return static_cast<std::uint32_t>(vertices.size() - 1);
}

void TriangleMesh::add_triangle(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  triangles.push_back({a, b, c});
}

void TriangleMesh::append(const TriangleMesh& other) {
  const auto base = static_cast<std::uint32_t>(vertices.size());
  vertices.insert(vertices.end(), other.vertices.begin(), other.vertices.end());
  triangles.reserve(triangles.size() + other.triangles.size());
  for (const auto& t : other.triangles) {
    triangles.push_back({t[0] + base, t[1] + base, t[2] + base});
  }
}

Box TriangleMesh::bounds() const {
  Box box;
  for (const auto& t : triangles) {
    for (auto i : t) box.extend(vertices[i]);
  }
  return box;
}

std::array<Vec3, 3> TriangleMesh::corners(std::size_t tri) const {
  const auto& t = triangles[tri];
  return {vertices[t[0]], vertices[t[1]], vertices[t[2]]};
}

MeshStats mesh_stats(const TriangleMesh& mesh) {
  check_indices(mesh);
  MeshStats stats;
  stats.triangle_count = mesh.triangles.size();

  std::unordered_map<std::uint64_t, int> directed;
  directed.reserve(mesh.triangles.size() * 3);
  std::unordered_set<std::uint32_t> used;
  bool index_degenerate = false;

  for (std::size_t i = 0; i < mesh.triangles.size(); ++i) {
    const auto& t = mesh.triangles[i];
    const auto [a, b, c] = mesh.corners(i);
    stats.signed_volume += dot(a, cross(b, c)) / 6;
    const double area = length(cross(b - a, c - a)) / 2;
    stats.surface_area += area;
    if (area < kDegenerateArea) ++stats.degenerate_triangles;
    for (int k = 0; k < 3; ++k) {
      const auto from = t[k];
      const auto to = t[(k + 1) % 3];
      if (from == to) index_degenerate = true;
      ++directed[edge_key(from, to)];
      used.insert(from);
    }
  }

  bool watertight = !mesh.triangles.empty() && !index_degenerate;
  std::size_t undirected = 0;
  for (const auto& [key, count] : directed) {
    const auto from = static_cast<std::uint32_t>(key >> 32);
    const auto to = static_cast<std::uint32_t>(key & 0xffffffffu);
    auto rev = directed.find(edge_key(to, from));
    if (count != 1 || rev == directed.end() || rev->second != 1) watertight = false;
    if (rev == directed.end() || from < to) ++undirected;
  }
  stats.watertight = watertight;
  stats.euler_characteristic = static_cast<long>(used.size()) - static_cast<long>(undirected) +
                               static_cast<long>(mesh.triangles.size());
  stats.shell_count = shells(mesh).size();
  return stats;
}

std::vector<std::vector<std::uint32_t>> shells(const TriangleMesh& mesh) {
  check_indices(mesh);
  DisjointSets sets(mesh.vertices.size());
  for (const auto& t : mesh.triangles) {
    sets.join(t[0], t[1]);
    sets.join(t[1], t[2]);
  }
  std::unordered_map<std::uint32_t, std::size_t> slot;
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t i = 0; i < mesh.triangles.size(); ++i) {
    const auto root = sets.find(mesh.triangles[i][0]);
    auto [it, fresh] = slot.try_emplace(root, out.size());
    if (fresh) out.emplace_back();
    out[it->second].push_back(i);
  }
  return out;
}

TriangleMesh translated(TriangleMesh mesh, Vec3 offset) {
  for (auto& v : mesh.vertices) v += offset;
  return mesh;
}

TriangleMesh box_mesh(Vec3 lo, Vec3 hi, bool inward) {
  TriangleMesh mesh;
  for (int i = 0; i < 8; ++i) {
    mesh.add_vertex({i & 1 ? hi.x : lo.x, i & 2 ? hi.y : lo.y, i & 4 ? hi.z : lo.z});
  }
  static constexpr std::uint32_t kFaces[12][3] = {
      {0, 2, 3}, {0, 3, 1}, {4, 5, 7}, {4, 7, 6}, {0, 1, 5}, {0, 5, 4},
      {2, 6, 7}, {2, 7, 3}, {0, 4, 6}, {0, 6, 2}, {1, 3, 7}, {1, 7, 5},
  };
  for (const auto& f : kFaces) {
    if (inward) {
      mesh.add_triangle(f[0], f[2], f[1]);
    } else {
      mesh.add_triangle(f[0], f[1], f[2]);
    }
  }
  return mesh;
}

}  // namespace archimesh
