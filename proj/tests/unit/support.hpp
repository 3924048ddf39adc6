#pragma once

// Test-side oracles: naive, independent of the library's series machinery.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <doctest.h>

#include "qseries/laurent_series.hpp"

namespace testing {

using overrank::qseries::Coefficient;
using overrank::qseries::Exponent;
using overrank::qseries::LaurentSeries;

inline constexpr std::uint32_t kSeed = 0x5eed1234;

/// Sparse exact accumulator keyed by exponent.
using Sparse = std::map<Exponent, Coefficient>;

inline LaurentSeries to_series(const Sparse& s, Exponent lo, Exponent order) {
  std::vector<Coefficient> c(static_cast<std::size_t>(order - lo));
  for (const auto& [e, v] : s) {
    if (e >= lo && e < order) c[static_cast<std::size_t>(e - lo)] = v;
  }
  return LaurentSeries(lo, std::move(c), order);
}

/// Dense integer polynomial product truncated below `order`.
inline std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                                          std::size_t order) {
  std::vector<std::int64_t> out(order);
  for (std::size_t i = 0; i < a.size() && i < order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// prod_{k>=0} (1 - sign q^{r + k m}) as a dense polynomial below `order`, r >= 1.
inline std::vector<std::int64_t> naive_poch(int sign, std::size_t r, std::size_t m, std::size_t order) {
  std::vector<std::int64_t> acc(order);
  acc[0] = 1;
  for (std::size_t e = r; e < order; e += m) {
    std::vector<std::int64_t> binomial(e + 1);
    binomial[0] = 1;
    binomial[e] = -sign;
    acc = poly_mul(acc, binomial, order);
  }
  return acc;
}

inline LaurentSeries from_ints(const std::vector<std::int64_t>& c) {
  std::vector<Coefficient> v;
  for (const auto x : c) v.emplace_back(static_cast<long>(x));
  return LaurentSeries(0, std::move(v), static_cast<Exponent>(c.size()));
}

/// Random series with small rational coefficients.
inline LaurentSeries random_series(std::mt19937& rng, Exponent lo, Exponent hi_len, Exponent order) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Coefficient> c;
  for (Exponent i = 0; i < hi_len && lo + i < order; ++i) {
    Coefficient v(num(rng), den(rng));
    v.canonicalize();
    c.push_back(v);
  }
  return LaurentSeries(lo, std::move(c), order);
}

/// First exponent below `order` where a and b differ, or `order` when they agree.
inline Exponent first_difference(const LaurentSeries& a, const LaurentSeries& b, Exponent order) {
  for (Exponent e = std::min(a.min_exp(), b.min_exp()); e < order; ++e) {
    if (a.coeff(e) != b.coeff(e)) return e;
  }
  return order;
}

}  // namespace testing
