#pragma once

#include <string>
#include <vector>

#include "qseries/laurent_series.hpp"

namespace overrank::products {

using qseries::Coefficient;
using qseries::Exponent;
using qseries::LaurentSeries;

/// s * q^exp with s = +1 or -1. Instantiates the generic variables of the
/// product and Lambert identities. Quotients of monomials may carry negative
/// exponents; the evaluators normalize them.
struct SignedMonomial {
  int sign = 1;
  Exponent exp = 0;

  constexpr SignedMonomial negated() const { return {-sign, exp}; }
  constexpr SignedMonomial inverse() const { return {sign, -exp}; }

  friend constexpr SignedMonomial operator*(SignedMonomial a, SignedMonomial b) {
    return {a.sign * b.sign, a.exp + b.exp};
  }
  friend constexpr SignedMonomial operator/(SignedMonomial a, SignedMonomial b) {
    return a * b.inverse();
  }
  friend constexpr bool operator==(SignedMonomial, SignedMonomial) = default;
};

constexpr SignedMonomial q_pow(Exponent e, int sign = 1) { return {sign, e}; }

/// Renders "q^5", "-q^10", "1", "-1".
std::string to_string(SignedMonomial m);

LaurentSeries monomial_series(SignedMonomial m, Exponent order);

/// (arg; q^modulus)_inf raised to `multiplicity` (negative = denominator).
struct PochFactor {
  SignedMonomial arg;
  Exponent modulus = 1;
  int multiplicity = 1;
};

/// prefactor * q^leading_exp * prod factors^multiplicity.
struct ProductSpec {
  std::vector<PochFactor> factors;
  Coefficient prefactor{1};
  Exponent leading_exp = 0;

  /// Appends (sign q^r; q^m)_inf^mult.
  ProductSpec& poch(int sign, Exponent r, Exponent m, int mult = 1);
  /// Appends (q^r1, q^r2, ...; q^m)_inf^mult, all with the same sign.
  ProductSpec& poch_list(int sign, std::initializer_list<Exponent> rs, Exponent m, int mult = 1);
  /// Appends P(z, q^base)^mult, normalizing z into 0 <= exp <= base through
  /// P(zq, q) = -z^-1 P(z, q).
  ProductSpec& big_p(SignedMonomial z, Exponent base, int mult = 1);
  ProductSpec& times(SignedMonomial m);
  ProductSpec& times(const Coefficient& c);

  friend ProductSpec operator*(ProductSpec a, const ProductSpec& b);
};

/// Lower bound for the exponent of the lowest term of the evaluated product.
Exponent valuation(const ProductSpec& spec);

/// Truncated expansion of the product, known exactly to `order`.
/// Throws ZeroLeadingTerm when a denominator factor vanishes identically.
LaurentSeries eval_product(const ProductSpec& spec, Exponent order);

/// (arg; q^modulus)_inf to `order`.
LaurentSeries pochhammer_inf(SignedMonomial arg, Exponent modulus, Exponent order);

/// P(z, q^base) = prod_{r>=1} (1 - z q^{base(r-1)}) (1 - z^-1 q^{base r}).
LaurentSeries big_p(SignedMonomial z, Exponent base, Exponent order);

/// Same product expanded factor by factor in the Laurent layer, without the
/// functional-equation normalization. Independent route for the P relations.
LaurentSeries big_p_direct(SignedMonomial z, Exponent base, Exponent order);

/// sum_{n in Z} z^n q^{base n^2} (z = s q^e contributes s^n q^{e n}).
LaurentSeries theta(SignedMonomial z, Exponent base, Exponent order);

/// (q^base; q^base)_inf, written P(0) in the y = q^ell notation when base = ell^2.
LaurentSeries p_zero(Exponent base, Exponent order);

/// (q)_inf / (-q)_inf.
ProductSpec q_over_minus_q();

}  // namespace overrank::products
