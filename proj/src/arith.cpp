#include "splinedim/arith.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace splinedim {

std::int64_t binom(std::int64_t a, std::int64_t b) {
  if (b < 0 || b > a) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  if (!out.fits_slong_p()) throw std::overflow_error("binom overflow");
  return out.get_si();
}

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("floor_div by zero");
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) { return -floor_div(-num, den); }

}  // namespace splinedim
