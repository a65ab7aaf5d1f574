#include "splinedim/dimension.hpp"

#include <stdexcept>
#include <string>

#include "splinedim/arith.hpp"
#include "splinedim/error.hpp"
#include "splinedim/power_ideal.hpp"

namespace splinedim {

namespace {

void check_degrees(int d, int r) {
  if (d < 0 || r < 0) throw Error(ErrorCode::InvalidArgument, "d and r must be nonnegative");
}

void require_nontrivial(const OneTieParams& params, int r) {
  if (params.slope_collision) {
    throw Error(ErrorCode::TrivialCase, "the interior edge continues straight through an endpoint");
  }
  if (params.trivial_many_slopes(r)) {
    throw Error(ErrorCode::TrivialCase, "an endpoint has at least r+3 slopes");
  }
}

std::int64_t c2(std::int64_t a) { return binom(a, 2); }

}  // namespace

std::string_view to_string(MethodTag tag) {
  switch (tag) {
    case MethodTag::TrivialCase: return "trivial-case";
    case MethodTag::Lattice: return "lattice";
    case MethodTag::Explicit: return "explicit";
    case MethodTag::QuasiCrossCut: return "quasi-cross-cut";
    case MethodTag::Oracle: return "oracle";
  }
  return "?";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::Lattice: return "lattice";
    case Method::Explicit: return "explicit";
    case Method::Oracle: return "oracle";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  for (Method m : {Method::Auto, Method::Lattice, Method::Explicit, Method::Oracle}) {
    if (to_string(m) == text) return m;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown method '" + std::string(text) + "'");
}

VertexStarData vertex_star_data(int slopes, int r) {
  if (slopes < 2) throw Error(ErrorCode::UnsupportedTopology, "vertex with fewer than two slopes");
  const std::int64_t n = slopes;
  const std::int64_t total = n * (r + 1);
  VertexStarData v{slopes, total / (n - 1), total % (n - 1), 0};
  v.mu = n - 1 - v.nu;
  return v;
}

std::int64_t vertex_term(const VertexStarData& v, int d) {
  return v.mu * c2(d + 2 - v.alpha) + v.nu * c2(d + 1 - v.alpha);
}

std::int64_t schumaker_lower_bound(const Partition& p, int d, int r) {
  check_degrees(d, r);
  std::int64_t slopes = 0;
  std::int64_t vertices = 0;
  for (auto v : p.interior_vertices()) {
    const int n = static_cast<int>(p.slope_count(v));
    slopes += n;
    vertices += vertex_term(vertex_star_data(n, r), d);
  }
  const auto edges = static_cast<std::int64_t>(p.interior_edges().size());
  return c2(d + 2) + (edges - slopes) * c2(d + 1 - r) + vertices;
}

std::int64_t schumaker_lower_bound(const Triangulation& t, int d, int r) {
  return schumaker_lower_bound(Partition(t), d, r);
}

std::int64_t lower_bound_one_tie(const OneTieParams& pr, int d, int r) {
  check_degrees(d, r);
  return c2(d + 2) + static_cast<std::int64_t>(pr.p - pr.s + pr.q - pr.t - 1) * c2(d + 1 - r) +
         vertex_term(vertex_star_data(pr.s + 1, r), d) + vertex_term(vertex_star_data(pr.t + 1, r), d);
}

std::int64_t schumaker_lower_bound_prime(int p, int q, int s, int t, int d, int r) {
  check_degrees(d, r);
  return c2(d + 2) + static_cast<std::int64_t>(p - s + q - t) * c2(d + 1 - r) +
         vertex_term(vertex_star_data(s, r), d) + vertex_term(vertex_star_data(t, r), d);
}

DimReport dim_lattice(const OneTieParams& params, int d, int r) {
  check_degrees(d, r);
  require_nontrivial(params, r);
  DimReport out{r, d, lower_bound_one_tie(params, d, r), 0, 0, MethodTag::Lattice};
  out.correction = homology_dim(TiePair(params.s, params.t, r), d);
  out.total = out.lower_bound + out.correction;
  return out;
}

int explicit_branch(int s, int t, int d, int r) {
  const std::int64_t S = s;
  const std::int64_t T = t;
  const std::int64_t R = r;
  // d <= t r / (s (t-1)) + r
  if (d * S * (T - 1) <= T * R + R * S * (T - 1)) return 1;
  // d > (r+1)/s + (r+1)/t + r - 1
  if (d * S * T > (R + 1) * T + (R + 1) * S + (R - 1) * S * T) return 3;
  return 2;
}

std::int64_t f_explicit(int s, int t, int d, int r) {
  if (t < 3 || explicit_branch(s, t, d, r) != 2) {
    throw Error(ErrorCode::OutOfBranch, "f is only defined strictly between the two thresholds");
  }
  const std::int64_t S = s;
  const std::int64_t T = t;
  const std::int64_t D = d;
  const std::int64_t R = r;
  const std::int64_t lo = ceil_div(2 * S * T * (D - R) - (S + T) * D, (S - 1) * (T - 1) - 1);
  const std::int64_t hi = D - R - 1;
  std::int64_t sum = 0;
  for (std::int64_t i = lo; i <= hi; ++i) {
    const std::int64_t term =
        floor_div((i - D) * (S - 1) + R * S, S) - ceil_div(i + D * (T - 1) - R * T, T) + 1;
    if (term > 0) sum += term;
  }
  return sum;
}

DimReport dim_explicit(const OneTieParams& params, int d, int r) {
  check_degrees(d, r);
  require_nontrivial(params, r);
  DimReport out{r, d, lower_bound_one_tie(params, d, r), 0, 0, MethodTag::Explicit};
  switch (explicit_branch(params.s, params.t, d, r)) {
    case 1:
      out.total = schumaker_lower_bound_prime(params.p, params.q, params.s, params.t, d, r);
      break;
    case 2:
      out.total = out.lower_bound + f_explicit(params.s, params.t, d, r);
      break;
    default:
      out.total = out.lower_bound;
  }
  out.correction = out.total - out.lower_bound;
  return out;
}

Rational supersmoothness_threshold(int s, int t, int r) {
  return Rational(Integer(t) * r, Integer(s) * (t - 1)) + Rational(r);
}

int stabilization_degree(const OneTieParams& params, int r) {
  require_nontrivial(params, r);
  return homology_regularity(TiePair(params.s, params.t, r)) + 1;
}

DimReport dim(const Partition& p, int d, int r, Method method) {
  check_degrees(d, r);
  if (method == Method::Oracle) {
    throw Error(ErrorCode::InvalidArgument, "the oracle method is provided by the oracle module");
  }
  const std::int64_t L = schumaker_lower_bound(p, d, r);
  if (method == Method::Auto && is_quasi_cross_cut(p)) return {r, d, L, 0, L, MethodTag::QuasiCrossCut};

  const Triangulation& mesh = p.mesh();
  for (EdgeId e = 0; e < mesh.edges().size(); ++e) {
    if (p.is_erased(e)) {
      throw Error(ErrorCode::UnsupportedTopology, "partition with erased edges is not a quasi-cross-cut");
    }
  }
  OneTieParams params;
  try {
    params = extract_one_tie_params(mesh);
  } catch (const Error& e) {
    throw Error(ErrorCode::UnsupportedTopology, std::string("no closed form applies: ") + e.what());
  }
  if (params.trivial(r)) {
    if (method != Method::Auto) require_nontrivial(params, r);
    return {r, d, L, 0, L, MethodTag::TrivialCase};
  }

  const TiePair tp(params.s, params.t, r);
  const std::int64_t lattice = L + homology_dim(tp, d);
  std::int64_t explicit_total = L;
  switch (explicit_branch(params.s, params.t, d, r)) {
    case 1: explicit_total = schumaker_lower_bound(p.without_edge(params.tau), d, r); break;
    case 2: explicit_total = L + f_explicit(params.s, params.t, d, r); break;
    default: break;
  }
  if (method == Method::Explicit) return {r, d, L, explicit_total - L, explicit_total, MethodTag::Explicit};
  if (lattice != explicit_total) {
    throw std::logic_error("lattice and explicit totals disagree at r=" + std::to_string(r) +
                           " d=" + std::to_string(d));
  }
  return {r, d, L, lattice - L, lattice, MethodTag::Lattice};
}

DimReport dim(const Triangulation& t, int d, int r, Method method) { return dim(Partition(t), d, r, method); }

}  // namespace splinedim
