// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "splinedim/arith.hpp"
#include "splinedim/dimension.hpp"
#include "splinedim/oracle.hpp"
#include "splinedim/power_ideal.hpp"

using namespace splinedim;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  long checks = 0;

  template <typename T, typename U>
  void expect_eq(const T& got, const U& want, const std::string& what) {
    ++checks;
    if (got == want) return;
    if (ok) detail << what << ": got " << got << ", want " << want;
    ok = false;
  }
  void expect(bool cond, const std::string& what) {
    ++checks;
    if (cond) return;
    if (ok) detail << what;
    ok = false;
  }
};

std::string tag(int s, int t, int r, int d) {
  return "s=" + std::to_string(s) + " t=" + std::to_string(t) + " r=" + std::to_string(r) + " d=" + std::to_string(d);
}

OneTieParams params(int p, int q, int s, int t) {
  OneTieParams out;
  out.p = p;
  out.q = q;
  out.s = s;
  out.t = t;
  return out;
}

void for_each_sweep(const std::function<void(int, int, int)>& fn) {
  for (int r = 1; r <= 12; ++r) {
    for (int s = 2; s <= r + 1; ++s) {
      for (int t = s; t <= r + 1; ++t) fn(s, t, r);
    }
  }
}

std::vector<std::vector<Rational>> slope_sets() {
  auto q = [](long n, long d) { return Rational(Integer(n), Integer(d)); };
  return {
      {q(1, 1), q(2, 1), q(3, 1), q(4, 1), q(5, 1), q(6, 1), q(7, 1)},
      {q(-1, 1), q(2, 1), q(-3, 1), q(5, 1), q(7, 1), q(-11, 1), q(13, 1)},
      {q(1, 2), q(-2, 3), q(3, 1), q(5, 4), q(-7, 1), q(9, 5), q(11, 1)},
  };
}

void golden(Outcome& o) {
  const Triangulation t = fixtures::skewed();
  const DimReport rep = dim(t, 12, 8);
  o.expect_eq(rep.lower_bound, 134, "L at r=8 d=12");
  o.expect_eq(rep.correction, 1, "correction at r=8 d=12");
  o.expect_eq(rep.total, 135, "dim at r=8 d=12");
  o.expect_eq(f_explicit(2, 3, 9, 5), 1, "f(2,3,d=9,r=5)");
  o.expect_eq(homology_dim(TiePair(3, 4, 8), 12), 1, "H1 count (3,4,8) at 12");
  o.expect_eq(homology_regularity(TiePair(3, 4, 6)), 8, "regularity (3,4,6)");
  o.expect_eq(homology_regularity(TiePair(3, 4, 10)), 15, "regularity (3,4,10)");
}

void lattice_vs_explicit(Outcome& o) {
  for_each_sweep([&](int s, int t, int r) {
    for (const auto& pr : {params(t + 2, t + 2, s, t), params(r + 3, r + 3, s, t)}) {
      for (int d = 0; d <= 3 * r + 4; ++d) {
        const DimReport a = dim_lattice(pr, d, r);
        const DimReport b = dim_explicit(pr, d, r);
        o.expect_eq(a.total, b.total, "total " + tag(s, t, r, d));
        o.expect_eq(a.correction, b.correction, "correction " + tag(s, t, r, d));
      }
    }
  });
}

void oracle_meshes(Outcome& o) {
  struct Job {
    const char* name;
    Triangulation mesh;
    int rmax;
    bool capped;
  };
  for (const Job& job : {Job{"skewed", fixtures::skewed(), 8, true}, Job{"symmetric", fixtures::symmetric(), 6, false}}) {
    for (int r = 1; r <= job.rmax; ++r) {
      const int dmax = job.capped ? std::min(3 * r + 2, 14) : 14;
      for (int d = 0; d <= dmax; ++d) {
        o.expect_eq(dim_spline_oracle(job.mesh, d, r), dim(job.mesh, d, r).total,
                    std::string(job.name) + " r=" + std::to_string(r) + " d=" + std::to_string(d));
      }
    }
  }
}

void two_r_plus_one(Outcome& o) {
  for_each_sweep([&](int s, int t, int r) {
    const OneTieParams pr = params(t + 2, t + 2, s, t);
    for (int d = 2 * r + 1; d <= 3 * r + 4; ++d) {
      o.expect_eq(dim_lattice(pr, d, r).correction, 0, "correction " + tag(s, t, r, d));
    }
    const int stab = stabilization_degree(pr, r);
    const DimReport below = dim_lattice(pr, stab - 1, r);
    o.expect(below.total > below.lower_bound, "no excess below stabilization " + tag(s, t, r, stab - 1));
  });
}

void supersmoothness(Outcome& o) {
  for_each_sweep([&](int s, int t, int r) {
    const OneTieParams pr = params(t + 2, t + 2, s, t);
    const Rational threshold = supersmoothness_threshold(s, t, r);
    for (int d = 0; Rational(d) <= threshold; ++d) {
      o.expect_eq(dim_lattice(pr, d, r).total, schumaker_lower_bound_prime(pr.p, pr.q, s, t, d, r),
                  "erased-edge bound " + tag(s, t, r, d));
    }
    const Rational bound = Rational(Integer(t) * r, Integer(s) * (t - 1)) - Rational(1);
    o.expect(Rational(intersection_initdeg(TiePair(s, t, r))) > bound, "initdeg " + tag(s, t, r, 0));
  });
}

void ideal_theory(Outcome& o) {
  const auto sets = slope_sets();
  const LinearForm y(Rational(0), Rational(1));
  std::vector<int> a;
  std::function<void(std::size_t, int)> rec = [&](std::size_t len, int lo) {
    if (!a.empty()) {
      const MultiplicitySeq seq(a);
      for (const auto& c : sets) {
        std::vector<PowerGenerator> gens;
        for (std::size_t i = 0; i < a.size(); ++i) gens.push_back({LinearForm(Rational(1), c[i]), a[i] + 1});
        std::string name = "a=(";
        for (int v : a) name += std::to_string(v) + ",";
        name += ") slopes from " + c[0].str();
        // One elimination per D gives the leading monomials of J_D and every
        // (J : y^e)_{D-e}; columns are x^D, x^{D-1} y, ..., y^D.
        for (int D = 0; D <= 28; ++D) {
          const EchelonProfile prof = echelon_profile(ideal_matrix(gens, 2, D));
          if (D <= 20) {
            o.expect_eq(static_cast<std::int64_t>(prof.rank), hilbert_power_ideal(seq, D), "ideal " + name);
            for (std::size_t col : prof.pivot_columns) {
              const int B = static_cast<int>(col);
              o.expect(in_membership(seq, D - B, B), "leading monomial " + name);
            }
          }
          const auto profile = colon_by_y_profile(gens, D);
          for (int e = std::max(1, D - 20); e <= std::min(8, D); ++e) {
            o.expect_eq(profile[static_cast<std::size_t>(e)], hilbert_colon(seq, e, D - e),
                        "colon e=" + std::to_string(e) + " d=" + std::to_string(D - e) + " " + name);
          }
        }
        // The general colon oracle on a smaller slice.
        if (a.size() <= 3 && &c == &sets[1]) {
          for (int d = 0; d <= 12; ++d) {
            for (int e = 1; e <= 5; ++e) {
              o.expect_eq(hilbert_colon_oracle(gens, 2, y, e, d), hilbert_colon(seq, e, d),
                          "general colon e=" + std::to_string(e) + " d=" + std::to_string(d) + " " + name);
            }
          }
        }
      }
    }
    if (a.size() == len) return;
    for (int v = lo; v <= 7; ++v) {
      a.push_back(v);
      rec(len, v);
      a.pop_back();
    }
  };
  rec(5, 0);

  for (int r = 1; r <= 8; ++r) {
    for (int s = 2; s <= std::min(4, r + 1); ++s) {
      for (int t = s; t <= std::min(5, r + 1); ++t) {
        const TiePair tp(s, t, r);
        for (const auto& c : sets) {
          const std::span<const Rational> b(c.data(), static_cast<std::size_t>(s));
          const std::span<const Rational> cc(c.data() + 2, static_cast<std::size_t>(t));
          for (int k = 0; k <= 2 * r + 2; ++k) {
            const ColonSumDims dims = colon_sum_oracle(r, b, cc, k);
            o.expect_eq(dims.sum, initial_sum_dim(tp, k), "sum " + tag(s, t, r, k));
            o.expect_eq(dims.intersection(), initial_intersection_dim(tp, k), "intersection " + tag(s, t, r, k));
          }
        }
      }
    }
  }
}

void slope_independence(Outcome& o) {
  const auto sets = slope_sets();
  for (int r = 1; r <= 6; ++r) {
    for (int s = 2; s <= r + 1; ++s) {
      for (int t = s; t <= r + 1; ++t) {
        for (int d = 0; d <= 3 * r; ++d) {
          std::vector<std::int64_t> values;
          for (std::size_t i = 0; i < sets.size(); ++i) {
            const auto& b = sets[i];
            const auto& c = sets[(i + 1) % sets.size()];
            values.push_back(homology_dim_oracle(s, t, r, std::span(b.data(), static_cast<std::size_t>(s)),
                                                 std::span(c.data(), static_cast<std::size_t>(t)), d));
          }
          for (auto v : values) o.expect_eq(v, values.front(), "slope choice " + tag(s, t, r, d));
          o.expect_eq(values.front(), homology_dim(TiePair(s, t, r), d), "closed form " + tag(s, t, r, d));
        }
      }
    }
  }
}

void symmetric_identities(Outcome& o) {
  const OneTieParams pr = params(4, 4, 2, 2);
  for (int k = 1; k <= 10; ++k) {
    const auto diff = [&](int d, int r) {
      return schumaker_lower_bound_prime(4, 4, 2, 2, d, r) - lower_bound_one_tie(pr, d, r);
    };
    o.expect_eq(diff(4 * k - 2, 2 * k - 1), k, "odd k=" + std::to_string(k));
    o.expect_eq(diff(4 * k, 2 * k), k, "even k=" + std::to_string(k));
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    void (*run)(Outcome&);
    double budget_seconds;
  };
  const std::vector<Criterion> criteria = {
      {"AC1 golden values", golden, 1},
      {"AC2 lattice vs explicit sweep", lattice_vs_explicit, 30},
      {"AC3 oracle on bundled meshes", oracle_meshes, 900},
      {"AC4 2r+1 bound and strict excess", two_r_plus_one, 30},
      {"AC5 supersmoothness threshold", supersmoothness, 30},
      {"AC6 ideal theory vs oracle", ideal_theory, 600},
      {"AC7 slope-value independence", slope_independence, 600},
      {"AC8 symmetric-case identities", symmetric_identities, 1},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.budget_seconds) {
      o.ok = false;
      o.detail << "over time budget of " << c.budget_seconds << " s";
    }
    all = all && o.ok;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.ok ? "PASS " : "FAIL ") << c.name << " (" << o.checks << " checks, " << timing << ")";
    if (!o.ok) std::cout << ": " << o.detail.str();
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
