#pragma once

#include <cstdint>

namespace splinedim {

/// Binomial coefficient with the convention binom(a, b) = 0 unless 0 <= b <= a.
/// Negative arguments are allowed. Throws std::overflow_error past int64.
std::int64_t binom(std::int64_t a, std::int64_t b);

/// Floor and ceiling of num/den for den != 0.
std::int64_t floor_div(std::int64_t num, std::int64_t den);
std::int64_t ceil_div(std::int64_t num, std::int64_t den);

}  // namespace splinedim
