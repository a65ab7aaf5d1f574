#include "splinedim/polynomial.hpp"

#include <stdexcept>

namespace splinedim {

Polynomial::Polynomial(const Rational& constant) { add_term({0, 0, 0}, constant); }

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
  Polynomial p;
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::linear(const Rational& a, const Rational& b, const Rational& c) {
  Polynomial p;
  p.add_term({1, 0, 0}, a);
  p.add_term({0, 1, 0}, b);
  p.add_term({0, 0, 1}, c);
  return p;
}

int Polynomial::degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, e[0] + e[1] + e[2]);
  return deg;
}

Rational Polynomial::coefficient(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative power");
  Polynomial result(Rational(1));
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::shifted(const Exponent& e) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    out.terms_.emplace(Exponent{m[0] + e[0], m[1] + e[1], m[2] + e[2]}, c);
  }
  return out;
}

MonomialBasis MonomialBasis::affine2(int d) {
  MonomialBasis b;
  for (int k = 0; k <= d; ++k) {
    for (int i = k; i >= 0; --i) b.monomials_.push_back({i, k - i, 0});
  }
  for (std::size_t i = 0; i < b.monomials_.size(); ++i) b.lookup_[b.monomials_[i]] = i;
  return b;
}

MonomialBasis MonomialBasis::homogeneous(int nvars, int d) {
  if (nvars != 2 && nvars != 3) throw std::invalid_argument("nvars must be 2 or 3");
  MonomialBasis b;
  if (d >= 0) {
    for (int i = d; i >= 0; --i) {
      if (nvars == 2) {
        b.monomials_.push_back({i, d - i, 0});
        continue;
      }
      for (int j = d - i; j >= 0; --j) b.monomials_.push_back({i, j, d - i - j});
    }
  }
  for (std::size_t i = 0; i < b.monomials_.size(); ++i) b.lookup_[b.monomials_[i]] = i;
  return b;
}

std::size_t MonomialBasis::index(const Exponent& e) const {
  const auto it = lookup_.find(e);
  return it == lookup_.end() ? size() : it->second;
}

std::vector<Rational> MonomialBasis::coordinates(const Polynomial& p) const {
  std::vector<Rational> v(size());
  for (const auto& [e, c] : p.terms()) {
    const std::size_t i = index(e);
    if (i == size()) throw std::invalid_argument("monomial outside basis");
    v[i] = c;
  }
  return v;
}

}  // namespace splinedim
