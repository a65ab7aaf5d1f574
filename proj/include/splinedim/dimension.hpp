#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "splinedim/rational.hpp"
#include "splinedim/triangulation.hpp"

namespace splinedim {

enum class Method { Auto, Lattice, Explicit, Oracle };
enum class MethodTag { TrivialCase, Lattice, Explicit, QuasiCrossCut, Oracle };

std::string_view to_string(MethodTag tag);
std::string_view to_string(Method m);
/// "auto", "lattice", "explicit", "oracle"; throws InvalidArgument.
Method parse_method(std::string_view text);

struct DimReport {
  int r = 0;
  int d = 0;
  std::int64_t lower_bound = 0;
  std::int64_t correction = 0;
  std::int64_t total = 0;
  MethodTag method = MethodTag::Lattice;
  friend bool operator==(const DimReport&, const DimReport&) = default;
};

/// n (r+1) = alpha (n-1) + nu with 0 <= nu < n-1, mu = n-1-nu, for n >= 2 slopes.
struct VertexStarData {
  int slopes;
  std::int64_t alpha;
  std::int64_t nu;
  std::int64_t mu;
};
VertexStarData vertex_star_data(int slopes, int r);
/// mu * C(d+2-alpha, 2) + nu * C(d+1-alpha, 2).
std::int64_t vertex_term(const VertexStarData& v, int d);

std::int64_t schumaker_lower_bound(const Partition& p, int d, int r);
std::int64_t schumaker_lower_bound(const Triangulation& t, int d, int r);

/// Lower bound for a one-interior-edge mesh from its parameters, and for the
/// same mesh with that edge erased.
std::int64_t lower_bound_one_tie(const OneTieParams& params, int d, int r);
std::int64_t schumaker_lower_bound_prime(int p, int q, int s, int t, int d, int r);

DimReport dim_lattice(const OneTieParams& params, int d, int r);

/// Sum formula for the middle range; throws OutOfBranch elsewhere.
std::int64_t f_explicit(int s, int t, int d, int r);
/// Which piece of the explicit formula applies: 1 (erased-edge bound),
/// 2 (bound plus f), 3 (bound only).
int explicit_branch(int s, int t, int d, int r);
DimReport dim_explicit(const OneTieParams& params, int d, int r);

/// t r / (s (t-1)) + r.
Rational supersmoothness_threshold(int s, int t, int r);
int stabilization_degree(const OneTieParams& params, int r);

/// Closed-form dimension. Method::Oracle is rejected here; see oracle.hpp.
DimReport dim(const Partition& p, int d, int r, Method method = Method::Auto);
DimReport dim(const Triangulation& t, int d, int r, Method method = Method::Auto);

}  // namespace splinedim
