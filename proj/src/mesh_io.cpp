#include "splinedim/mesh_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "splinedim/error.hpp"

namespace splinedim {

namespace {

using nlohmann::json;

Rational coordinate(const json& value) {
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Rational(Integer(std::to_string(value.get<std::uint64_t>())))
                                      : Rational(static_cast<long>(value.get<std::int64_t>()));
  }
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  if (value.is_number_float()) {
    throw Error(ErrorCode::ParseError, "floating-point coordinate " + value.dump() + "; use an integer or \"n/d\"");
  }
  throw Error(ErrorCode::ParseError, "bad coordinate " + value.dump());
}

}  // namespace

Triangulation parse_mesh(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("triangles") || !doc["vertices"].is_array() ||
      !doc["triangles"].is_array()) {
    throw Error(ErrorCode::ParseError, "expected an object with \"vertices\" and \"triangles\" arrays");
  }
  std::vector<Point2> vertices;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_array() || v.size() != 2) throw Error(ErrorCode::ParseError, "vertex must be [x, y]: " + v.dump());
    vertices.push_back({coordinate(v[0]), coordinate(v[1])});
  }
  std::vector<Triple> triangles;
  for (const auto& tri : doc["triangles"]) {
    if (!tri.is_array() || tri.size() != 3) {
      throw Error(ErrorCode::ParseError, "triangle must be [i, j, k]: " + tri.dump());
    }
    Triple ids{};
    for (std::size_t k = 0; k < 3; ++k) {
      if (!tri[k].is_number_unsigned() && !(tri[k].is_number_integer() && tri[k].get<std::int64_t>() >= 0)) {
        throw Error(ErrorCode::ParseError, "bad vertex index " + tri[k].dump());
      }
      ids[k] = tri[k].get<std::size_t>();
    }
    triangles.push_back(ids);
  }
  return Triangulation::build(std::move(vertices), std::move(triangles));
}

Triangulation read_mesh(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_mesh(buf.str());
}

void write_mesh(std::ostream& out, const Triangulation& t) {
  json doc;
  doc["vertices"] = json::array();
  for (const auto& p : t.vertices()) {
    auto emit = [](const Rational& c) {
      return c.is_integer() && c.numerator().fits_slong_p() ? json(c.numerator().get_si()) : json(c.str());
    };
    doc["vertices"].push_back({emit(p.x), emit(p.y)});
  }
  doc["triangles"] = json::array();
  for (const auto& tri : t.triangles()) doc["triangles"].push_back({tri[0], tri[1], tri[2]});
  out << doc.dump() << '\n';
}

}  // namespace splinedim
