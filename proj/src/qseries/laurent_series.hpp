#pragma once

#include <span>
#include <vector>

#include "qseries/coefficient.hpp"

namespace overrank::qseries {

/// Truncated Laurent series in q with exact rational coefficients.
///
/// Stores coefficients of q^min_exp .. q^(order-1); every coefficient at an
/// exponent >= order is unknown. The representation is canonical: leading and
/// trailing zeros are trimmed, and the zero series has min_exp == order.
/// Operations propagate the tightest order their operands guarantee.
class LaurentSeries {
 public:
  /// Zero series known to order 0.
  LaurentSeries() = default;

  LaurentSeries(Exponent min_exp, std::vector<Coefficient> coeffs, Exponent order);

  static LaurentSeries zero(Exponent order);
  static LaurentSeries constant(const Coefficient& c, Exponent order);
  static LaurentSeries monomial(const Coefficient& c, Exponent exp, Exponent order);

  Exponent min_exp() const noexcept { return min_exp_; }
  Exponent order() const noexcept { return order_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// One past the last stored exponent (== min_exp for the zero series).
  Exponent end_exp() const noexcept { return min_exp_ + static_cast<Exponent>(coeffs_.size()); }

  std::span<const Coefficient> coefficients() const noexcept { return coeffs_; }

  /// Coefficient of q^n. Throws BeyondTruncation when n >= order.
  Coefficient coeff(Exponent n) const;

  /// Coefficient of q^n without the truncation check; zero outside storage.
  const Coefficient& at(Exponent n) const noexcept;

  bool all_integer() const;

  LaurentSeries truncated(Exponent order) const;
  /// Multiplies by q^k.
  LaurentSeries shifted(Exponent k) const;

  LaurentSeries operator-() const;
  LaurentSeries& operator+=(const LaurentSeries& rhs);
  LaurentSeries& operator-=(const LaurentSeries& rhs);
  LaurentSeries& operator*=(const Coefficient& c);

  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(LaurentSeries a, const Coefficient& c) { return a *= c; }
  friend LaurentSeries operator*(const Coefficient& c, LaurentSeries a) { return a *= c; }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

  /// Exact equality of representation (same order and coefficients).
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

 private:
  void canonicalize();

  Exponent min_exp_ = 0;
  std::vector<Coefficient> coeffs_;
  Exponent order_ = 0;
};

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);

/// Multiplicative inverse. For a = q^v u with u(0) != 0 known to order N the
/// result is q^-v u^-1 known to order N - 2v. Throws ZeroLeadingTerm on zero.
LaurentSeries inverse(const LaurentSeries& a);

/// q -> q^k.
LaurentSeries substitute_power(const LaurentSeries& a, Exponent k);

/// sum_n a_{mn+d} q^n. Requires a.min_exp() >= 0.
LaurentSeries extract_progression(const LaurentSeries& a, Exponent m, Exponent d);

Coefficient coeff(const LaurentSeries& a, Exponent n);

/// a * (1 - sign q^e) and a / (1 - sign q^e) for any integer e. Negative e is
/// handled through 1/(1 - s q^e) = -s q^-e / (1 - s q^-e); e == 0 with
/// sign == +1 divides by zero and throws PoleHit.
LaurentSeries multiply_binomial(const LaurentSeries& a, int sign, Exponent e);
LaurentSeries divide_binomial(const LaurentSeries& a, int sign, Exponent e);

/// Throws NotPowerSeries when a has a negative exponent.
void require_power_series(const LaurentSeries& a, const char* what);

}  // namespace overrank::qseries
