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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "archimesh/mesh.hpp"

namespace archimesh::stl {

using Bytes = std::vector<std::uint8_t>;
using Float3 = std::array<float, 3>;

struct Facet {
  Float3 normal{};
  std::array<Float3, 3> vertices{};
  /// Binary attribute byte count; always 0 for ASCII.
  std::uint16_t attribute = 0;
};

struct Solid {
  std::string name;
  std::vector<Facet> facets;
};

enum class Encoding { ascii, binary };

/// Decoded STL payload. Binary documents hold exactly one solid and keep
/// the raw 80-byte header in `header`.
struct Document {
  std::string header;
  std::vector<Solid> solids;
  Encoding encoding = Encoding::binary;

  std::size_t triangle_count() const;
};

class FormatError : public std::runtime_error {
 public:
  enum class Kind { length_mismatch, ascii_grammar, unrecognized };

  FormatError(Kind kind, const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), kind_(kind), line_(line) {}

  Kind kind() const { return kind_; }
  /// 1-based line of an ASCII grammar error, 0 otherwise.
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

/// Facets for `mesh`: vertices rounded to 32-bit floats and unit normals
/// recomputed from the rounded vertices (zero for degenerate facets).
Solid to_solid(const TriangleMesh& mesh, std::string name = {});

/// 80-byte header (zero padded), uint32 count, 50 bytes per facet, all
/// little endian. Throws if the header is longer than 80 bytes, starts with
/// "solid", or the facet count does not fit in 32 bits.
Bytes write_binary(const TriangleMesh& mesh, std::string_view header = "archimesh");
Bytes encode_binary(const Document& doc);

/// Canonical ASCII: two-space indentation, shortest round-trip decimals of
/// the 32-bit values, no trailing newline. Names may not contain whitespace.
std::string write_ascii(const TriangleMesh& mesh, std::string_view name = "m");
std::string encode_ascii(const Document& doc);

/// ASCII iff the data starts with "solid" and parses completely as ASCII;
/// otherwise the binary layout is checked against 84 + 50 T bytes.
Document read_stl(std::span<const std::uint8_t> bytes);
Document read_stl(std::string_view bytes);

struct Conversion {
  TriangleMesh mesh;
  std::vector<std::string> warnings;
};

/// Welds vertices with bit-identical coordinates. Nonzero attribute bytes
/// are dropped and reported in `warnings`.
Conversion to_mesh(const Document& doc);

enum class Unit { mm, inch };

inline constexpr double kMmPerInch = 25.4;

TriangleMesh scale_mesh(TriangleMesh mesh, double factor);
TriangleMesh scale_mesh(TriangleMesh mesh, Unit from, Unit to);

Bytes read_file(const std::string& path);
void write_file(const std::string& path, std::span<const std::uint8_t> bytes);
void write_file(const std::string& path, std::string_view text);

}  // namespace archimesh::stl
