#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "splinedim/rational.hpp"

namespace splinedim {

/// Exponents of x, y, z. Two-variable code leaves the last slot at zero.
using Exponent = std::array<int, 3>;

/// Sparse polynomial in up to three variables.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Rational& constant);

  static Polynomial monomial(const Exponent& e, const Rational& c = Rational(1));
  /// a*x + b*y + c*z, each term only if nonzero.
  static Polynomial linear(const Rational& a, const Rational& b, const Rational& c);

  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for zero
  Rational coefficient(const Exponent& e) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(int n) const;
  Polynomial shifted(const Exponent& e) const;  // multiply by x^e

 private:
  void add_term(const Exponent& e, const Rational& c);
  std::map<Exponent, Rational> terms_;
};

/// Ordered list of monomials with an index lookup.
class MonomialBasis {
 public:
  /// All x^i y^j with i + j <= d, graded lex: by total degree, then x-power descending.
  static MonomialBasis affine2(int d);
  /// Monomials of degree exactly d in nvars (2 or 3) variables, lex descending
  /// with x > y > z.
  static MonomialBasis homogeneous(int nvars, int d);

  std::size_t size() const { return monomials_.size(); }
  const Exponent& operator[](std::size_t i) const { return monomials_[i]; }
  std::span<const Exponent> monomials() const { return monomials_; }
  /// Column of e, or size() if absent.
  std::size_t index(const Exponent& e) const;

  /// Coefficient vector of p; throws if p has a monomial outside the basis.
  std::vector<Rational> coordinates(const Polynomial& p) const;

 private:
  std::vector<Exponent> monomials_;
  std::map<Exponent, std::size_t> lookup_;
};

}  // namespace splinedim
