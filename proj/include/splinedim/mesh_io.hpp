#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "splinedim/triangulation.hpp"

namespace splinedim {

/// Mesh documents are JSON objects with "vertices" ([[x, y], ...], each
/// coordinate an integer or an "n/d" string) and "triangles" ([[i, j, k], ...]).
/// Malformed documents raise ParseError; geometric problems come from build().
Triangulation parse_mesh(std::string_view text);
Triangulation read_mesh(const std::filesystem::path& path);
void write_mesh(std::ostream& out, const Triangulation& t);

}  // namespace splinedim
