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

#include "archimesh/stl_io.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>
#include <map>
#include <optional>

namespace archimesh::stl {
namespace {

constexpr std::size_t kHeaderSize = 80;
constexpr std::size_t kFacetSize = 50;

void put_u32(Bytes& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}
void put_f32(Bytes& out, float v) { put_u32(out, std::bit_cast<std::uint32_t>(v)); }

std::uint32_t get_u32(std::span<const std::uint8_t> in, std::size_t at) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(in[at + i]) << (8 * i);
  return v;
}
float get_f32(std::span<const std::uint8_t> in, std::size_t at) {
  return std::bit_cast<float>(get_u32(in, at));
}

Float3 to_float3(Vec3 v) {
  return {static_cast<float>(v.x), static_cast<float>(v.y), static_cast<float>(v.z)};
}
Vec3 to_vec3(const Float3& f) { return {f[0], f[1], f[2]}; }

// Unit normal of the 32-bit vertices, so a mesh and its STL read-back get
// identical normals. Zero for degenerate facets. Kept out of line: GCC 11's
// SLP vectorizer otherwise folds the float rounding of inlined callers'
// vertices and the normals of a mesh and of its read-back drift apart.
[[gnu::noinline]] Float3 facet_normal(const std::array<Float3, 3>& v) {
  const Vec3 a = to_vec3(v[0]), b = to_vec3(v[1]), c = to_vec3(v[2]);
  const Vec3 n = cross(b - a, c - a);
  const double len = length(n);
  if (!(len > 0) || !std::isfinite(len)) return {};
  return to_float3((1 / len) * n);
}

bool has_whitespace(std::string_view s) {
  return s.find_first_of(" \t\r\n\v\f") != std::string_view::npos;
}

void append_number(std::string& out, float v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, end);
}

void append_triple(std::string& out, const Float3& f) {
  for (int i = 0; i < 3; ++i) {
    out.push_back(' ');
    append_number(out, f[i]);
  }
}

// ---- ASCII parsing --------------------------------------------------------

struct Token {
  std::string_view text;
  std::size_t line;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f') {
      ++i;
    } else {
      const std::size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({text.substr(start, i - start), line});
    }
  }
  return out;
}

class AsciiParser {
 public:
  explicit AsciiParser(std::string_view text) : tokens_(tokenize(text)) {
    last_line_ = tokens_.empty() ? 1 : tokens_.back().line;
  }

  Document parse() {
    Document doc;
    doc.encoding = Encoding::ascii;
    do {
      doc.solids.push_back(parse_solid());
    } while (pos_ < tokens_.size());
    doc.header = doc.solids.front().name;
    return doc;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    const std::size_t line = pos_ < tokens_.size() ? tokens_[pos_].line : last_line_;
    throw FormatError(FormatError::Kind::ascii_grammar,
                      "ASCII STL line " + std::to_string(line) + ": " + message, line);
  }

  void expect(std::string_view keyword) {
    if (pos_ >= tokens_.size()) fail("expected '" + std::string(keyword) + "', found end of file");
    if (tokens_[pos_].text != keyword) {
      fail("expected '" + std::string(keyword) + "', found '" + std::string(tokens_[pos_].text) +
           "'");
    }
    ++pos_;
  }

  float number() {
    if (pos_ >= tokens_.size()) fail("expected a number, found end of file");
    const std::string_view t = tokens_[pos_].text;
    float v = 0;
    const char* first = t.data();
    if (!t.empty() && t.front() == '+') ++first;
    auto [end, ec] = std::from_chars(first, t.data() + t.size(), v);
    if (ec != std::errc() || end != t.data() + t.size()) {
      fail("expected a number, found '" + std::string(t) + "'");
    }
    ++pos_;
    return v;
  }

  Float3 triple() { return {number(), number(), number()}; }

  // Joins the remaining tokens on the current line.
  std::string rest_of_line(std::size_t line) {
    std::string out;
    while (pos_ < tokens_.size() && tokens_[pos_].line == line) {
      if (!out.empty()) out.push_back(' ');
      out.append(tokens_[pos_].text);
      ++pos_;
    }
    return out;
  }

  Solid parse_solid() {
    const std::size_t line = pos_ < tokens_.size() ? tokens_[pos_].line : last_line_;
    expect("solid");
    Solid solid;
    solid.name = rest_of_line(line);
    while (true) {
      if (pos_ >= tokens_.size()) fail("expected 'facet' or 'endsolid', found end of file");
      const std::string_view t = tokens_[pos_].text;
      if (t == "endsolid") {
        const std::size_t end_line = tokens_[pos_].line;
        ++pos_;
        rest_of_line(end_line);
        return solid;
      }
      if (t != "facet") fail("expected 'facet' or 'endsolid', found '" + std::string(t) + "'");
      ++pos_;
      Facet f;
      expect("normal");
      f.normal = triple();
      expect("outer");
      expect("loop");
      for (auto& v : f.vertices) {
        expect("vertex");
        v = triple();
      }
      expect("endloop");
      expect("endfacet");
      solid.facets.push_back(f);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t last_line_ = 1;
};

std::optional<std::size_t> binary_count(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderSize + 4) return std::nullopt;
  const std::uint64_t count = get_u32(bytes, kHeaderSize);
  if (bytes.size() != kHeaderSize + 4 + kFacetSize * count) return std::nullopt;
  return static_cast<std::size_t>(count);
}

Document parse_binary(std::span<const std::uint8_t> bytes, std::size_t count) {
  Document doc;
  doc.encoding = Encoding::binary;
  doc.header.assign(reinterpret_cast<const char*>(bytes.data()), kHeaderSize);
  Solid solid;
  solid.facets.reserve(count);
  std::size_t at = kHeaderSize + 4;
  for (std::size_t i = 0; i < count; ++i) {
    Facet f;
    for (int k = 0; k < 3; ++k) f.normal[k] = get_f32(bytes, at + 4 * k);
    for (int v = 0; v < 3; ++v) {
      for (int k = 0; k < 3; ++k) f.vertices[v][k] = get_f32(bytes, at + 12 + 12 * v + 4 * k);
    }
    f.attribute = static_cast<std::uint16_t>(bytes[at + 48] | (bytes[at + 49] << 8));
    solid.facets.push_back(f);
    at += kFacetSize;
  }
  doc.solids.push_back(std::move(solid));
  return doc;
}

}  // namespace

std::size_t Document::triangle_count() const {
  std::size_t n = 0;
  for (const auto& s : solids) n += s.facets.size();
  return n;
}

Solid to_solid(const TriangleMesh& mesh, std::string name) {
  Solid solid;
  solid.name = std::move(name);
  solid.facets.reserve(mesh.triangles.size());
  for (std::size_t i = 0; i < mesh.triangles.size(); ++i) {
    const auto corners = mesh.corners(i);
    Facet f;
    for (int k = 0; k < 3; ++k) f.vertices[k] = to_float3(corners[k]);
    f.normal = facet_normal(f.vertices);
    solid.facets.push_back(f);
  }
  return solid;
}

Bytes encode_binary(const Document& doc) {
  if (doc.solids.size() > 1) throw std::invalid_argument("binary STL holds a single solid");
  if (doc.header.size() > kHeaderSize) throw std::invalid_argument("STL header exceeds 80 bytes");
  if (doc.header.starts_with("solid")) {
    throw std::invalid_argument("binary STL header must not start with \"solid\"");
  }
  const std::size_t count = doc.triangle_count();
  if (count > std::numeric_limits<std::uint32_t>::max()) {
    throw std::invalid_argument("too many facets for binary STL");
  }
  Bytes out;
  out.reserve(kHeaderSize + 4 + kFacetSize * count);
  out.insert(out.end(), doc.header.begin(), doc.header.end());
  out.resize(kHeaderSize, 0);
  put_u32(out, static_cast<std::uint32_t>(count));
  for (const auto& s : doc.solids) {
    for (const auto& f : s.facets) {
      for (float v : f.normal) put_f32(out, v);
      for (const auto& vert : f.vertices) {
        for (float v : vert) put_f32(out, v);
      }
      out.push_back(static_cast<std::uint8_t>(f.attribute & 0xff));
      out.push_back(static_cast<std::uint8_t>(f.attribute >> 8));
    }
  }
  return out;
}

Bytes write_binary(const TriangleMesh& mesh, std::string_view header) {
  Document doc;
  doc.header = header;
  doc.solids.push_back(to_solid(mesh));
  return encode_binary(doc);
}

std::string encode_ascii(const Document& doc) {
  std::string out;
  bool first = true;
  for (const auto& s : doc.solids) {
    if (s.name.find_first_of("\r\n") != std::string::npos) {
      throw std::invalid_argument("ASCII solid names cannot contain line breaks");
    }
    if (!first) out.push_back('\n');
    first = false;
    out += "solid " + s.name + "\n";
    for (const auto& f : s.facets) {
      out += "  facet normal";
      append_triple(out, f.normal);
      out += "\n    outer loop\n";
      for (const auto& v : f.vertices) {
        out += "      vertex";
        append_triple(out, v);
        out += "\n";
      }
      out += "    endloop\n  endfacet\n";
    }
    out += "endsolid " + s.name;
  }
  return out;
}

std::string write_ascii(const TriangleMesh& mesh, std::string_view name) {
  if (name.empty() || has_whitespace(name)) {
    throw std::invalid_argument("ASCII solid name must be a single non-empty token");
  }
  Document doc;
  doc.encoding = Encoding::ascii;
  doc.header = name;
  doc.solids.push_back(to_solid(mesh, std::string(name)));
  return encode_ascii(doc);
}

Document read_stl(std::span<const std::uint8_t> bytes) {
  const std::string_view text(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  if (text.starts_with("solid")) {
    try {
      return AsciiParser(text).parse();
    } catch (const FormatError& ascii_error) {
      if (auto count = binary_count(bytes)) return parse_binary(bytes, *count);
      throw FormatError(FormatError::Kind::ascii_grammar,
                        std::string("unrecognized STL format: ") + ascii_error.what() +
                            "; binary length check failed",
                        ascii_error.line());
    }
  }
  if (bytes.size() < kHeaderSize + 4) {
    throw FormatError(FormatError::Kind::unrecognized,
                      "unrecognized STL format: " + std::to_string(bytes.size()) +
                          " bytes is shorter than a binary header");
  }
  const auto count = binary_count(bytes);
  if (!count) {
    const std::uint64_t declared = get_u32(bytes, kHeaderSize);
    throw FormatError(FormatError::Kind::length_mismatch,
                      "binary STL declares " + std::to_string(declared) + " facets (" +
                          std::to_string(kHeaderSize + 4 + kFacetSize * declared) +
                          " bytes) but has " + std::to_string(bytes.size()) + " bytes");
  }
  return parse_binary(bytes, *count);
}

Document read_stl(std::string_view bytes) {
  return read_stl(std::span(reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()));
}

Conversion to_mesh(const Document& doc) {
  Conversion out;
  std::map<std::array<std::uint32_t, 3>, std::uint32_t> index;
  std::size_t dropped = 0;
  for (const auto& s : doc.solids) {
    for (const auto& f : s.facets) {
      if (f.attribute != 0) ++dropped;
      Triangle tri{};
      for (int k = 0; k < 3; ++k) {
        const auto& v = f.vertices[k];
        const std::array key{std::bit_cast<std::uint32_t>(v[0]), std::bit_cast<std::uint32_t>(v[1]),
                             std::bit_cast<std::uint32_t>(v[2])};
        auto [it, fresh] = index.try_emplace(key, 0);
        if (fresh) it->second = out.mesh.add_vertex(to_vec3(v));
        tri[k] = it->second;
      }
      out.mesh.triangles.push_back(tri);
    }
  }
  if (dropped > 0) {
    out.warnings.push_back(std::to_string(dropped) +
                           " facets carried nonzero attribute bytes; dropped");
  }
  return out;
}

TriangleMesh scale_mesh(TriangleMesh mesh, double factor) {
  if (!(factor > 0) || !std::isfinite(factor)) {
    throw std::invalid_argument("scale factor must be positive and finite");
  }
  for (auto& v : mesh.vertices) v = factor * v;
  return mesh;
}

TriangleMesh scale_mesh(TriangleMesh mesh, Unit from, Unit to) {
  if (from == to) return mesh;
  return scale_mesh(std::move(mesh), from == Unit::inch ? kMmPerInch : 1 / kMmPerInch);
}

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

void write_file(const std::string& path, std::string_view text) {
  write_file(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

}  // namespace archimesh::stl
