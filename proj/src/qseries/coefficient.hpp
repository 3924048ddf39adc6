#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace overrank::qseries {

/// Exact rational coefficient. GMP keeps every value in lowest terms with a
/// positive denominator.
using Coefficient = mpq_class;

/// Exponent of q. Laurent exponents may be negative.
using Exponent = std::int64_t;

/// "num/den" with the denominator always printed, e.g. "-3/1", "1/2".
inline std::string to_fraction_string(const Coefficient& c) {
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline bool is_integer(const Coefficient& c) { return c.get_den() == 1; }

/// True when the denominator is a power of two (including 1).
inline bool has_dyadic_denominator(const Coefficient& c) {
  const mpz_class& den = c.get_den();
  return mpz_popcount(den.get_mpz_t()) == 1;
}

}  // namespace overrank::qseries
