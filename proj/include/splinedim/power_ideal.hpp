#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace splinedim {

/// Sorted multiplicities a_1 <= ... <= a_s; generator i has degree a_i + 1.
class MultiplicitySeq {
 public:
  explicit MultiplicitySeq(std::vector<int> a);
  static MultiplicitySeq uniform(int count, int value);

  const std::vector<int>& values() const { return a_; }
  int size() const { return static_cast<int>(a_.size()); }

 private:
  std::vector<int> a_;
};

/// Endpoint slope counts s <= t of the interior edge and the smoothness r,
/// restricted to 2 <= s <= t <= r + 1.
struct TiePair {
  int s;
  int t;
  int r;

  TiePair(int s, int t, int r);
};

/// Two-variable power ideal of a with generic forms; lex order x > y.
std::int64_t hilbert_power_ideal(const MultiplicitySeq& a, int d);
bool in_membership(const MultiplicitySeq& a, int A, int B);
std::int64_t hilbert_colon(const MultiplicitySeq& a, int e, int d);
bool colon_membership(const MultiplicitySeq& a, int e, int A, int B);

/// Monomials x^A y^B z^C of degree k outside both initial colon ideals.
std::vector<std::array<int, 3>> quotient_monomials(const TiePair& tp, int k);

/// Correction term in total degree d (quotient counted in degree d - r - 1).
std::int64_t homology_dim(const TiePair& tp, int d);
/// Same count via the planar polygon in (A, B).
std::int64_t homology_dim_planar(const TiePair& tp, int d);

/// Largest d with nonzero correction.
int homology_regularity(const TiePair& tp);
bool congruence_case(const TiePair& tp);

struct RegularityBounds {
  int lower;
  int upper;
};
/// floor((r+1)/s) + floor((r+1)/t) + r - 1 <= reg <= floor((r+1)/s + (r+1)/t) + r - 1.
RegularityBounds regularity_bounds(const TiePair& tp);

/// Least degree of a monomial in both initial colon ideals.
int intersection_initdeg(const TiePair& tp);

/// Degree-k counts for the monomial ideals In1 = In(J1 : z^{r+1}) (in x, z),
/// In2 = In(J2 : z^{r+1}) (in y, z), extended to three variables.
std::int64_t initial_sum_dim(const TiePair& tp, int k);
std::int64_t initial_intersection_dim(const TiePair& tp, int k);

/// Membership in In1 / In2.
bool in_first_colon(const TiePair& tp, int A, int C);
bool in_second_colon(const TiePair& tp, int B, int C);

}  // namespace splinedim
