#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "splinedim/dimension.hpp"
#include "splinedim/matrix.hpp"
#include "splinedim/polynomial.hpp"
#include "splinedim/triangulation.hpp"

namespace splinedim {

/// Homogeneous linear form c0*x + c1*y + c2*z; with two variables c2 must be 0.
struct LinearForm {
  std::array<Rational, 3> c{};

  LinearForm() = default;
  LinearForm(Rational a, Rational b, Rational d = Rational(0));
  Polynomial polynomial() const;
};

struct PowerGenerator {
  LinearForm form;
  int exponent;
};

/// Columns above this many unknowns in the full spline system are refused
/// unless allow_large is set.
inline constexpr std::size_t kOracleColumnLimit = 5000;

/// Full system: F_sigma coefficients (degree <= d, graded lex) for each
/// triangle, then h_tau (degree <= d-r-1) for each non-erased interior edge;
/// one block of rows per interior edge.
RatMatrix spline_system(const Partition& p, int d, int r);
std::size_t spline_system_columns(const Partition& p, int d, int r);

/// dim C^r_d by exact elimination. F values are eliminated along a spanning
/// tree of the dual graph first, which keeps the matrix small.
std::int64_t dim_spline_oracle(const Partition& p, int d, int r, bool allow_large = false);
std::int64_t dim_spline_oracle(const Triangulation& t, int d, int r, bool allow_large = false);
/// Kernel dimension of spline_system, no reduction.
std::int64_t dim_spline_full(const Partition& p, int d, int r, bool allow_large = false);

DimReport dim_oracle(const Partition& p, int d, int r, bool allow_large = false);

/// Rows g*m spanning the degree-d piece of the ideal, over the lex-descending
/// homogeneous monomial basis.
RatMatrix ideal_matrix(std::span<const PowerGenerator> gens, int nvars, int d);
std::int64_t hilbert_ideal_oracle(std::span<const PowerGenerator> gens, int nvars, int d);
/// Lex leading monomials of the degree-d piece.
std::vector<Exponent> initial_monomials_oracle(std::span<const PowerGenerator> gens, int nvars, int d);
/// dim of (J : form^e)_d.
std::int64_t hilbert_colon_oracle(std::span<const PowerGenerator> gens, int nvars, const LinearForm& form, int e,
                                  int d);
/// Two variables, lex columns x^D, x^{D-1} y, ..., y^D. Entry e is
/// dim (J : y^e)_{D-e}: multiplying by y^e identifies it with the part of J_D
/// supported on the last D+1-e columns, i.e. rank J_D minus pivots among the
/// first e columns.
std::vector<std::int64_t> colon_by_y_profile(std::span<const PowerGenerator> gens, int D);
/// Basis (rows, lex-descending columns) of (J : form^e)_d.
RatMatrix colon_basis_oracle(std::span<const PowerGenerator> gens, int nvars, const LinearForm& form, int e, int d);

/// Degree-k dimensions of Q1 = J1 : z^{r+1} and Q2 = J2 : z^{r+1} in k[x,y,z],
/// J1 = <(x + b_i z)^{r+1}>, J2 = <(y + c_j z)^{r+1}>, and of Q1 + Q2.
struct ColonSumDims {
  std::int64_t first = 0;
  std::int64_t second = 0;
  std::int64_t sum = 0;
  std::int64_t intersection() const { return first + second - sum; }
};
ColonSumDims colon_sum_oracle(int r, std::span<const Rational> b, std::span<const Rational> c, int k);

/// dim R_{d-r-1} - dim (Q1 + Q2)_{d-r-1}. b has s entries, c has t entries;
/// throws DegenerateSlopes on repeats or zeros.
std::int64_t homology_dim_oracle(int s, int t, int r, std::span<const Rational> b, std::span<const Rational> c,
                                 int d);

}  // namespace splinedim
