#include "splinedim/oracle.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>

#include "splinedim/arith.hpp"
#include "splinedim/error.hpp"

namespace splinedim {

LinearForm::LinearForm(Rational a, Rational b, Rational d) : c{std::move(a), std::move(b), std::move(d)} {}

Polynomial LinearForm::polynomial() const { return Polynomial::linear(c[0], c[1], c[2]); }

namespace {

// Affine form vanishing on the line through the edge.
Polynomial edge_form(const Triangulation& t, EdgeId e) {
  const Point2& a = t.vertices()[t.edges()[e].a];
  const Point2& b = t.vertices()[t.edges()[e].b];
  const Rational dx = b.x - a.x;
  const Rational dy = b.y - a.y;
  return Polynomial::linear(-dy, dx, Rational(0)) + Polynomial(a.x * dy - a.y * dx);
}

// Coefficient blocks of l^{r+1} * m for every monomial m of degree <= d-r-1.
std::vector<std::vector<Rational>> multiplier_columns(const Polynomial& power, const MonomialBasis& target,
                                                      int hdeg) {
  std::vector<std::vector<Rational>> cols;
  if (hdeg < 0) return cols;
  const MonomialBasis hb = MonomialBasis::affine2(hdeg);
  for (std::size_t j = 0; j < hb.size(); ++j) cols.push_back(target.coordinates(power.shifted(hb[j])));
  return cols;
}

std::size_t h_size(int d, int r) { return d - r - 1 < 0 ? 0 : static_cast<std::size_t>(binom(d - r + 1, 2)); }

void check_size(const Partition& p, int d, int r, bool allow_large) {
  const std::size_t cols = spline_system_columns(p, d, r);
  if (cols > kOracleColumnLimit && !allow_large) {
    throw Error(ErrorCode::TooLarge, std::to_string(cols) + " unknowns exceeds the limit of " +
                                         std::to_string(kOracleColumnLimit) + " (use allow-large to override)");
  }
}

std::vector<Polynomial> homogeneous_monomials(int nvars, int d) {
  std::vector<Polynomial> out;
  const MonomialBasis b = MonomialBasis::homogeneous(nvars, d);
  for (std::size_t i = 0; i < b.size(); ++i) out.push_back(Polynomial::monomial(b[i]));
  return out;
}

void check_forms(std::span<const PowerGenerator> gens, int nvars) {
  if (nvars != 2 && nvars != 3) throw Error(ErrorCode::InvalidArgument, "nvars must be 2 or 3");
  for (const auto& g : gens) {
    if (g.exponent < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
    if (nvars == 2 && !g.form.c[2].is_zero()) {
      throw Error(ErrorCode::InvalidArgument, "third coefficient must vanish in two variables");
    }
    if (g.form.c[0].is_zero() && g.form.c[1].is_zero() && g.form.c[2].is_zero()) {
      throw Error(ErrorCode::InvalidArgument, "zero linear form");
    }
  }
}

}  // namespace

std::size_t spline_system_columns(const Partition& p, int d, int r) {
  return p.mesh().triangles().size() * static_cast<std::size_t>(binom(d + 2, 2)) +
         p.interior_edges().size() * h_size(d, r);
}

RatMatrix spline_system(const Partition& p, int d, int r) {
  const Triangulation& t = p.mesh();
  const MonomialBasis basis = MonomialBasis::affine2(d);
  const std::size_t nf = basis.size();
  const std::size_t nh = h_size(d, r);
  const auto interior = p.interior_edges();
  std::map<EdgeId, std::size_t> h_offset;
  std::size_t col = t.triangles().size() * nf;
  for (auto e : interior) {
    h_offset[e] = col;
    col += nh;
  }
  std::size_t nrows = 0;
  for (const auto& edge : t.edges()) {
    if (edge.kind != EdgeKind::Boundary) nrows += nf;
  }
  RatMatrix m(nrows, col);
  std::size_t row = 0;
  for (EdgeId e = 0; e < t.edges().size(); ++e) {
    const Edge& edge = t.edges()[e];
    if (edge.kind == EdgeKind::Boundary) continue;
    const std::size_t a = edge.triangles[0] * nf;
    const std::size_t b = edge.triangles[1] * nf;
    for (std::size_t i = 0; i < nf; ++i) {
      m(row + i, a + i) = 1;
      m(row + i, b + i) = -1;
    }
    if (!p.is_erased(e)) {
      const auto cols = multiplier_columns(edge_form(t, e).pow(r + 1), basis, d - r - 1);
      for (std::size_t j = 0; j < cols.size(); ++j) {
        for (std::size_t i = 0; i < nf; ++i) {
          if (!cols[j][i].is_zero()) m(row + i, h_offset[e] + j) = -cols[j][i];
        }
      }
    }
    row += nf;
  }
  return m;
}

std::int64_t dim_spline_full(const Partition& p, int d, int r, bool allow_large) {
  if (d < 0 || r < 0) throw Error(ErrorCode::InvalidArgument, "d and r must be nonnegative");
  check_size(p, d, r, allow_large);
  return static_cast<std::int64_t>(kernel_dim(spline_system(p, d, r)));
}

std::int64_t dim_spline_oracle(const Partition& p, int d, int r, bool allow_large) {
  if (d < 0 || r < 0) throw Error(ErrorCode::InvalidArgument, "d and r must be nonnegative");
  check_size(p, d, r, allow_large);
  const Triangulation& t = p.mesh();
  const MonomialBasis basis = MonomialBasis::affine2(d);
  const std::size_t nf = basis.size();
  const std::size_t nh = h_size(d, r);
  const auto interior = p.interior_edges();
  if (nh == 0 || interior.empty()) return static_cast<std::int64_t>(nf);

  std::map<EdgeId, std::size_t> h_index;
  for (auto e : interior) h_index.emplace(e, h_index.size());

  // Each F_sigma = F_root + sum of signed edge terms along the tree path.
  const std::size_t ntri = t.triangles().size();
  std::vector<std::map<EdgeId, int>> path(ntri);
  std::vector<bool> seen(ntri, false);
  std::vector<bool> in_tree(t.edges().size(), false);
  std::vector<std::vector<EdgeId>> adj(ntri);
  for (EdgeId e = 0; e < t.edges().size(); ++e) {
    const Edge& edge = t.edges()[e];
    if (edge.kind == EdgeKind::Boundary) continue;
    adj[edge.triangles[0]].push_back(e);
    adj[edge.triangles[1]].push_back(e);
  }
  std::queue<TriangleId> todo;
  todo.push(0);
  seen[0] = true;
  while (!todo.empty()) {
    const TriangleId cur = todo.front();
    todo.pop();
    for (auto e : adj[cur]) {
      const Edge& edge = t.edges()[e];
      const TriangleId next = edge.triangles[0] == cur ? edge.triangles[1] : edge.triangles[0];
      if (seen[next]) continue;
      seen[next] = true;
      in_tree[e] = true;
      path[next] = path[cur];
      // F_{t0} - F_{t1} = l^{r+1} h_e
      if (!p.is_erased(e)) path[next][e] += next == edge.triangles[0] ? 1 : -1;
      todo.push(next);
    }
  }

  std::map<EdgeId, std::vector<std::vector<Rational>>> blocks;
  for (auto e : interior) blocks[e] = multiplier_columns(edge_form(t, e).pow(r + 1), basis, d - r - 1);

  RatMatrix m(0, interior.size() * nh);
  std::vector<Rational> row_buf;
  for (EdgeId e = 0; e < t.edges().size(); ++e) {
    const Edge& edge = t.edges()[e];
    if (edge.kind == EdgeKind::Boundary || in_tree[e]) continue;
    std::map<EdgeId, int> coeff = path[edge.triangles[0]];
    for (const auto& [f, sgn] : path[edge.triangles[1]]) coeff[f] -= sgn;
    if (!p.is_erased(e)) coeff[e] -= 1;
    for (std::size_t i = 0; i < nf; ++i) {
      row_buf.assign(m.cols(), Rational(0));
      bool nonzero = false;
      for (const auto& [f, sgn] : coeff) {
        if (sgn == 0) continue;
        const auto& cols = blocks[f];
        const std::size_t off = h_index[f] * nh;
        for (std::size_t j = 0; j < nh; ++j) {
          if (cols[j][i].is_zero()) continue;
          row_buf[off + j] += Rational(sgn) * cols[j][i];
          nonzero = true;
        }
      }
      if (nonzero) m.append_row(row_buf);
    }
  }
  return static_cast<std::int64_t>(nf + kernel_dim(m));
}

std::int64_t dim_spline_oracle(const Triangulation& t, int d, int r, bool allow_large) {
  return dim_spline_oracle(Partition(t), d, r, allow_large);
}

DimReport dim_oracle(const Partition& p, int d, int r, bool allow_large) {
  DimReport out{r, d, schumaker_lower_bound(p, d, r), 0, dim_spline_oracle(p, d, r, allow_large),
                MethodTag::Oracle};
  out.correction = out.total - out.lower_bound;
  return out;
}

RatMatrix ideal_matrix(std::span<const PowerGenerator> gens, int nvars, int d) {
  check_forms(gens, nvars);
  const MonomialBasis basis = MonomialBasis::homogeneous(nvars, d);
  RatMatrix m(0, basis.size());
  if (d < 0) return m;
  for (const auto& g : gens) {
    if (g.exponent > d) continue;
    const Polynomial power = g.form.polynomial().pow(g.exponent);
    for (const auto& mono : homogeneous_monomials(nvars, d - g.exponent)) {
      m.append_row(basis.coordinates(power * mono));
    }
  }
  return m;
}

std::int64_t hilbert_ideal_oracle(std::span<const PowerGenerator> gens, int nvars, int d) {
  return static_cast<std::int64_t>(rank(ideal_matrix(gens, nvars, d)));
}

std::vector<Exponent> initial_monomials_oracle(std::span<const PowerGenerator> gens, int nvars, int d) {
  const MonomialBasis basis = MonomialBasis::homogeneous(nvars, d);
  std::vector<Exponent> out;
  for (auto col : echelon_profile(ideal_matrix(gens, nvars, d)).pivot_columns) out.push_back(basis[col]);
  return out;
}

std::int64_t hilbert_colon_oracle(std::span<const PowerGenerator> gens, int nvars, const LinearForm& form, int e,
                                  int d) {
  if (d < 0) return 0;
  if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative colon power");
  // f*form^e in J  <=>  f in the colon; multiplication by form^e is injective, so
  // dim colon_d = dim J_{d+e} + dim R_d - dim (J_{d+e} + form^e R_d).
  RatMatrix stacked = ideal_matrix(gens, nvars, d + e);
  const std::size_t j_rank = rank(stacked);
  const MonomialBasis target = MonomialBasis::homogeneous(nvars, d + e);
  const Polynomial power = form.polynomial().pow(e);
  const auto monos = homogeneous_monomials(nvars, d);
  for (const auto& mono : monos) stacked.append_row(target.coordinates(power * mono));
  return static_cast<std::int64_t>(j_rank + monos.size()) - static_cast<std::int64_t>(rank(stacked));
}

std::vector<std::int64_t> colon_by_y_profile(std::span<const PowerGenerator> gens, int D) {
  std::vector<std::int64_t> out;
  if (D < 0) return out;
  const EchelonProfile profile = echelon_profile(ideal_matrix(gens, 2, D));
  for (int e = 0; e <= D; ++e) {
    const auto before = std::count_if(profile.pivot_columns.begin(), profile.pivot_columns.end(),
                                      [e](std::size_t c) { return c < static_cast<std::size_t>(e); });
    out.push_back(static_cast<std::int64_t>(profile.rank) - static_cast<std::int64_t>(before));
  }
  return out;
}

RatMatrix colon_basis_oracle(std::span<const PowerGenerator> gens, int nvars, const LinearForm& form, int e, int d) {
  const MonomialBasis source = MonomialBasis::homogeneous(nvars, d);
  if (d < 0) return RatMatrix(0, 0);
  const MonomialBasis target = MonomialBasis::homogeneous(nvars, d + e);
  const Polynomial power = form.polynomial().pow(e);
  RatMatrix stacked(0, target.size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    stacked.append_row(target.coordinates(power * Polynomial::monomial(source[i])));
  }
  const RatMatrix j = reduced_echelon(ideal_matrix(gens, nvars, d + e)).rows;
  for (std::size_t i = 0; i < j.rows(); ++i) stacked.append_row(j.row(i));
  // Relations sum lambda_i * row_i = 0; the first block of lambda gives f.
  const RatMatrix rel = nullspace(stacked.transpose());
  RatMatrix f(0, source.size());
  for (std::size_t i = 0; i < rel.rows(); ++i) f.append_row(rel.row(i).subspan(0, source.size()));
  return reduced_echelon(f).rows;
}

ColonSumDims colon_sum_oracle(int r, std::span<const Rational> b, std::span<const Rational> c, int k) {
  ColonSumDims out;
  if (k < 0) return out;
  // Both ideals live in two of the three variables, so
  // (J1 : z^e)_k = sum_j y^j (J1 : z^e in k[x,z])_{k-j}, likewise for J2 with x^j.
  std::vector<PowerGenerator> g1;
  std::vector<PowerGenerator> g2;
  for (const auto& v : b) g1.push_back({LinearForm(Rational(1), v), r + 1});
  for (const auto& v : c) g2.push_back({LinearForm(Rational(1), v), r + 1});
  const LinearForm z(Rational(0), Rational(1));
  const MonomialBasis basis = MonomialBasis::homogeneous(3, k);
  RatMatrix stacked(0, basis.size());
  for (int j = 0; j <= k; ++j) {
    const int m = k - j;
    const MonomialBasis two = MonomialBasis::homogeneous(2, m);
    const RatMatrix q1 = colon_basis_oracle(g1, 2, z, r + 1, m);
    const RatMatrix q2 = colon_basis_oracle(g2, 2, z, r + 1, m);
    out.first += static_cast<std::int64_t>(q1.rows());
    out.second += static_cast<std::int64_t>(q2.rows());
    auto lift = [&](const RatMatrix& q, bool first) {
      for (std::size_t i = 0; i < q.rows(); ++i) {
        std::vector<Rational> v(basis.size());
        for (std::size_t col = 0; col < two.size(); ++col) {
          if (q(i, col).is_zero()) continue;
          const Exponent& e = two[col];
          const Exponent lifted = first ? Exponent{e[0], j, e[1]} : Exponent{j, e[0], e[1]};
          v[basis.index(lifted)] = q(i, col);
        }
        stacked.append_row(v);
      }
    };
    lift(q1, true);
    lift(q2, false);
  }
  out.sum = static_cast<std::int64_t>(rank(stacked));
  return out;
}

std::int64_t homology_dim_oracle(int s, int t, int r, std::span<const Rational> b, std::span<const Rational> c,
                                 int d) {
  if (static_cast<int>(b.size()) != s || static_cast<int>(c.size()) != t) {
    throw Error(ErrorCode::InvalidArgument, "slope lists must have s and t entries");
  }
  for (auto list : {b, c}) {
    std::set<Rational> distinct(list.begin(), list.end());
    if (distinct.size() != list.size() || distinct.count(Rational(0)) != 0) {
      throw Error(ErrorCode::DegenerateSlopes, "slopes must be distinct and nonzero");
    }
  }
  const int k = d - r - 1;
  if (k < 0) return 0;
  return binom(k + 2, 2) - colon_sum_oracle(r, b, c, k).sum;
}

}  // namespace splinedim
