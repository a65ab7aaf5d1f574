#include "splinedim/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "splinedim/error.hpp"

namespace splinedim {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string_view original = text;
  text = trim(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw Error(ErrorCode::ParseError, "not an exact rational: '" + std::string(original) + "'");
  }
  Integer num(std::string(num_text), 10);
  Integer den(std::string(den_text), 10);
  if (den == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator: '" + std::string(original) + "'");
  }
  if (negative) num = -num;
  return Rational(num, den);
}

Integer Rational::floor() const {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

Integer Rational::ceil() const {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& other) {
  q_ += other.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  q_ -= other.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  q_ *= other.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  q_ /= other.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

}  // namespace splinedim
