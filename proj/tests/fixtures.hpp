#pragma once

#include <random>
#include <string>

#include "splinedim/mesh_io.hpp"
#include "splinedim/rational.hpp"

namespace fixtures {

inline std::string mesh_path(const std::string& name) { return std::string(SPLINEDIM_DATA_DIR) + "/" + name; }

inline splinedim::Triangulation skewed() { return splinedim::read_mesh(mesh_path("skewed.mesh")); }
inline splinedim::Triangulation symmetric() { return splinedim::read_mesh(mesh_path("symmetric.mesh")); }

// Fixed seed so failures reproduce.
inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed2024ULL);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline splinedim::Rational small_rational(int span = 9, int maxden = 5) {
  return splinedim::Rational(splinedim::Integer(uniform(-span, span)), splinedim::Integer(uniform(1, maxden)));
}

}  // namespace fixtures
