#include "splinedim/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace splinedim {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  for (const auto& r : rows) {
    const std::vector<Rational> values(r);
    append_row(values);
  }
}

void RatMatrix::append_row(std::span<const Rational> values) {
  if (rows_ == 0 && cols_ == 0) {
    cols_ = values.size();
  } else if (values.size() != cols_) {
    throw std::invalid_argument("append_row: width mismatch");
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

namespace {

// Clears denominators row by row so elimination can run over Z.
std::vector<std::vector<mpz_class>> integer_rows(const RatMatrix& m) {
  std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpz_class& den = m(i, j).value().get_den();
      if (den != 1) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& q = m(i, j).value();
      if (sgn(q) == 0) continue;
      out[i][j] = q.get_num() * (lcm / q.get_den());
    }
  }
  return out;
}

}  // namespace

EchelonProfile echelon_profile(const RatMatrix& m) {
  auto a = integer_rows(m);
  const std::size_t nrows = a.size();
  const std::size_t ncols = m.cols();
  EchelonProfile profile;
  mpz_class prev = 1;
  std::size_t k = 0;
  mpz_class tmp;
  for (std::size_t col = 0; col < ncols && k < nrows; ++col) {
    // Pick the smallest nonzero entry in the column; smaller pivots keep the
    // Bareiss intermediates shorter.
    std::size_t best = nrows;
    for (std::size_t i = k; i < nrows; ++i) {
      if (sgn(a[i][col]) == 0) continue;
      if (best == nrows || mpz_cmpabs(a[i][col].get_mpz_t(), a[best][col].get_mpz_t()) < 0) best = i;
    }
    if (best == nrows) continue;
    std::swap(a[k], a[best]);
    const mpz_class& piv = a[k][col];
    for (std::size_t i = k + 1; i < nrows; ++i) {
      auto& row = a[i];
      const mpz_class factor = row[col];
      if (sgn(factor) == 0) {
        // row = row * piv / prev, exact
        for (std::size_t j = col + 1; j < ncols; ++j) {
          if (sgn(row[j]) == 0) continue;
          mpz_mul(row[j].get_mpz_t(), row[j].get_mpz_t(), piv.get_mpz_t());
          mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
        }
        continue;
      }
      for (std::size_t j = col + 1; j < ncols; ++j) {
        const mpz_class& pivrow = a[k][j];
        mpz_mul(tmp.get_mpz_t(), row[j].get_mpz_t(), piv.get_mpz_t());
        if (sgn(pivrow) != 0) {
          mpz_submul(tmp.get_mpz_t(), factor.get_mpz_t(), pivrow.get_mpz_t());
        }
        mpz_divexact(row[j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      row[col] = 0;
    }
    prev = a[k][col];
    profile.pivot_columns.push_back(col);
    ++k;
  }
  profile.rank = k;
  return profile;
}

std::size_t rank(const RatMatrix& m) { return echelon_profile(m).rank; }

std::size_t kernel_dim(const RatMatrix& m) { return m.cols() - rank(m); }

ReducedEchelon reduced_echelon(const RatMatrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).value();
  }
  ReducedEchelon out;
  std::size_t k = 0;
  for (std::size_t col = 0; col < m.cols() && k < a.size(); ++col) {
    std::size_t p = k;
    while (p < a.size() && sgn(a[p][col]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[k], a[p]);
    const mpq_class inv = 1 / a[k][col];
    for (auto& v : a[k]) {
      if (sgn(v) != 0) v *= inv;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == k || sgn(a[i][col]) == 0) continue;
      const mpq_class f = a[i][col];
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (sgn(a[k][j]) != 0) a[i][j] -= f * a[k][j];
      }
    }
    out.pivot_columns.push_back(col);
    ++k;
  }
  out.rows = RatMatrix(k, m.cols());
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.rows(i, j) = Rational(a[i][j]);
  }
  return out;
}

RatMatrix nullspace(const RatMatrix& m) {
  const ReducedEchelon e = reduced_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  RatMatrix basis(0, m.cols());
  std::vector<Rational> v(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) {
      v[e.pivot_columns[i]] = -e.rows(i, free);
    }
    basis.append_row(v);
  }
  return basis;
}

}  // namespace splinedim
