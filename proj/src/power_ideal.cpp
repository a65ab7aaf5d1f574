#include "splinedim/power_ideal.hpp"

#include <algorithm>
#include <string>

#include "splinedim/arith.hpp"
#include "splinedim/error.hpp"

namespace splinedim {

MultiplicitySeq::MultiplicitySeq(std::vector<int> a) : a_(std::move(a)) {
  if (a_.empty()) throw Error(ErrorCode::InvalidArgument, "empty multiplicity sequence");
  for (int v : a_) {
    if (v < 0) throw Error(ErrorCode::InvalidArgument, "negative multiplicity");
  }
  std::sort(a_.begin(), a_.end());
}

MultiplicitySeq MultiplicitySeq::uniform(int count, int value) {
  return MultiplicitySeq(std::vector<int>(static_cast<std::size_t>(count), value));
}

TiePair::TiePair(int s_, int t_, int r_) : s(s_), t(t_), r(r_) {
  if (!(2 <= s && s <= t && t <= r + 1)) {
    throw Error(ErrorCode::InvalidArgument, "need 2 <= s <= t <= r+1, got s=" + std::to_string(s) +
                                                " t=" + std::to_string(t) + " r=" + std::to_string(r));
  }
}

std::int64_t hilbert_power_ideal(const MultiplicitySeq& a, int d) {
  if (d < 0) return 0;
  std::int64_t sum = 0;
  for (int v : a.values()) sum += std::max(d - v, 0);
  return std::min<std::int64_t>(d + 1, sum);
}

bool in_membership(const MultiplicitySeq& a, int A, int B) {
  std::int64_t prefix = 0;
  for (int j = 1; j <= a.size(); ++j) {
    prefix += a.values()[static_cast<std::size_t>(j - 1)];
    if (prefix < static_cast<std::int64_t>(j) * A + static_cast<std::int64_t>(j - 1) * B) return true;
  }
  return false;
}

std::int64_t hilbert_colon(const MultiplicitySeq& a, int e, int d) {
  if (d < 0) return 0;
  std::int64_t sum = 0;
  for (int v : a.values()) sum += std::max(d + e - v, 0);
  return std::max<std::int64_t>(std::min<std::int64_t>(d + e + 1, sum) - e, 0);
}

bool colon_membership(const MultiplicitySeq& a, int e, int A, int B) {
  std::int64_t prefix = 0;
  for (int j = 1; j <= a.size(); ++j) {
    prefix += a.values()[static_cast<std::size_t>(j - 1)];
    if (prefix - static_cast<std::int64_t>(j - 1) * e <
        static_cast<std::int64_t>(j) * A + static_cast<std::int64_t>(j - 1) * B) {
      return true;
    }
  }
  return false;
}

bool in_first_colon(const TiePair& tp, int A, int C) {
  return static_cast<std::int64_t>(tp.s) * A + static_cast<std::int64_t>(tp.s - 1) * C > tp.r + 1 - tp.s;
}

bool in_second_colon(const TiePair& tp, int B, int C) {
  return static_cast<std::int64_t>(tp.t) * B + static_cast<std::int64_t>(tp.t - 1) * C > tp.r + 1 - tp.t;
}

std::vector<std::array<int, 3>> quotient_monomials(const TiePair& tp, int k) {
  std::vector<std::array<int, 3>> out;
  if (k < 0) return out;
  const int amax = (tp.r + 1 - tp.s) / tp.s;
  const int bmax = (tp.r + 1 - tp.t) / tp.t;
  const int cmax = std::min((tp.r + 1 - tp.s) / (tp.s - 1), (tp.r + 1 - tp.t) / (tp.t - 1));
  for (int A = 0; A <= std::min(amax, k); ++A) {
    for (int B = 0; B <= std::min(bmax, k - A); ++B) {
      const int C = k - A - B;
      if (C > cmax) continue;
      if (!in_first_colon(tp, A, C) && !in_second_colon(tp, B, C)) out.push_back({A, B, C});
    }
  }
  return out;
}

std::int64_t homology_dim(const TiePair& tp, int d) {
  return static_cast<std::int64_t>(quotient_monomials(tp, d - tp.r - 1).size());
}

std::int64_t homology_dim_planar(const TiePair& tp, int d) {
  const std::int64_t s = tp.s;
  const std::int64_t t = tp.t;
  const std::int64_t r = tp.r;
  std::int64_t count = 0;
  for (std::int64_t A = 0; A <= d; ++A) {
    for (std::int64_t B = 0; A + B <= d; ++B) {
      if (A - (s - 1) * B > s * r - (s - 1) * d) continue;
      if (B - (t - 1) * A > t * r - (t - 1) * d) continue;
      if (A + B > d - r - 1) continue;
      ++count;
    }
  }
  return count;
}

bool congruence_case(const TiePair& tp) {
  return (tp.r + 1) % tp.s == tp.s - 1 && (tp.r + 1) % tp.t == tp.t - 1;
}

int homology_regularity(const TiePair& tp) {
  const int base = (tp.r + 1) / tp.s + (tp.r + 1) / tp.t + tp.r;
  return congruence_case(tp) ? base : base - 1;
}

RegularityBounds regularity_bounds(const TiePair& tp) {
  const int lower = (tp.r + 1) / tp.s + (tp.r + 1) / tp.t + tp.r - 1;
  // floor((r+1)/s + (r+1)/t) in exact integer form
  const int upper = static_cast<int>(floor_div(static_cast<std::int64_t>(tp.r + 1) * (tp.s + tp.t),
                                               static_cast<std::int64_t>(tp.s) * tp.t)) +
                    tp.r - 1;
  return {lower, upper};
}

int intersection_initdeg(const TiePair& tp) {
  const int bound = (tp.r + 1 - tp.s) / (tp.s - 1) + 1;
  int best = -1;
  for (int A = 0; A <= bound; ++A) {
    for (int B = 0; B <= bound; ++B) {
      for (int C = 0; C <= bound; ++C) {
        if (in_first_colon(tp, A, C) && in_second_colon(tp, B, C) && (best < 0 || A + B + C < best)) {
          best = A + B + C;
        }
      }
    }
  }
  return best;
}

std::int64_t initial_sum_dim(const TiePair& tp, int k) {
  if (k < 0) return 0;
  std::int64_t count = 0;
  for (int A = 0; A <= k; ++A) {
    for (int B = 0; A + B <= k; ++B) {
      const int C = k - A - B;
      if (in_first_colon(tp, A, C) || in_second_colon(tp, B, C)) ++count;
    }
  }
  return count;
}

std::int64_t initial_intersection_dim(const TiePair& tp, int k) {
  if (k < 0) return 0;
  std::int64_t count = 0;
  for (int A = 0; A <= k; ++A) {
    for (int B = 0; A + B <= k; ++B) {
      const int C = k - A - B;
      if (in_first_colon(tp, A, C) && in_second_colon(tp, B, C)) ++count;
    }
  }
  return count;
}

}  // namespace splinedim
