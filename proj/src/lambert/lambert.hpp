#pragma once

#include "products/products.hpp"

namespace overrank::lambert {

using products::Coefficient;
using products::Exponent;
using products::LaurentSeries;
using products::ProductSpec;
using products::SignedMonomial;

/// sum_{n in Z} (-1)^n w^n q^{quad n^2 + lin n} / (1 - d q^{step n + offset})
/// with w = weight_sign and d = denom_sign; omit_zero drops the n = 0 term.
/// Every bilateral sum in the library is an instance of this shape.
struct BilateralSum {
  Exponent quad = 1;
  Exponent lin = 0;
  int weight_sign = 1;
  int denom_sign = 1;
  Exponent step = 1;
  Exponent offset = 0;
  bool omit_zero = false;
};

/// Exponent of the lowest term the n-th summand can contribute.
Exponent term_valuation(const BilateralSum& sum, Exponent n);

/// Lower bound for the valuation of the whole sum.
Exponent valuation(const BilateralSum& sum);

/// Smallest N such that every |n| > N contributes nothing below `order`;
/// never less than ceil(sqrt(order / quad)) + 2.
Exponent summation_bound(const BilateralSum& sum, Exponent order);

/// Expansion to `order`; terms with negative denominator exponents go
/// through 1/(1 - d q^-m) = -d q^m / (1 - d q^m). `range_multiplier` widens
/// the n-range (used to confirm the bound is sufficient).
LaurentSeries expand(const BilateralSum& sum, Exponent order, int range_multiplier = 1);

/// Sigma(z, zeta, q^base) = sum (-1)^n zeta^n q^{base(n^2+n)} / (1 - z q^{base n}).
/// primed omits n = 0 and requires z = 1.
struct LambertSpec {
  SignedMonomial z;
  SignedMonomial zeta;
  Exponent base = 1;
  bool primed = false;
};

BilateralSum to_bilateral(const LambertSpec& spec);

/// Sigma(a, b) = Sigma(y^a, y^b, y^ell) in q, y = q^ell.
LambertSpec sigma_ab(Exponent a, Exponent b, Exponent ell);
/// Sigma(0, b), the primed sum with z = 1, in q.
LambertSpec sigma_0b(Exponent b, Exponent ell);

/// g(a) = g(y^a, y^ell); a must not be a multiple of ell.
struct GFuncSpec {
  Exponent a = 1;
  Exponent ell = 5;
};

/// 1/(1 - q^e) for e != 0 (ZeroExponent otherwise).
LaurentSeries expand_geom(Exponent e, Exponent order);

/// Throws PoleHit when a retained term has denominator 1 - q^0.
LaurentSeries sigma(const LambertSpec& spec, Exponent order, int range_multiplier = 1);

/// Sigma(0, b) in its own variable: sum' (-1)^n q^{bn + ell n(n+1)} / (1 - q^{ell n}).
LaurentSeries sigma_primed(Exponent b, Exponent ell, Exponent order);

/// S(b) = sum' (-1)^n q^{n^2 + bn} / (1 - q^{ell n}); asserted to be a power series.
LaurentSeries s_bar(Exponent b, Exponent ell, Exponent order);

/// product * Sigma, with each factor evaluated far enough that the result is
/// exact to `order`.
LaurentSeries times_sigma(const ProductSpec& product, const LambertSpec& spec, Exponent order);

/// g(z, q^base) for a monomial z (exponent of either sign).
LaurentSeries g_general(SignedMonomial z, Exponent base, Exponent order);

/// g(a) in q; asserted to be a power series.
LaurentSeries g_func(const GFuncSpec& spec, Exponent order);

}  // namespace overrank::lambert
