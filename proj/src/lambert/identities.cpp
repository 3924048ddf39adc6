#include "lambert/identities.hpp"

#include <string>

#include "products/identities.hpp"

namespace overrank::lambert {

using products::id_string;
using products::q_pow;

namespace {

const SignedMonomial kMinusOne{-1, 0};
const SignedMonomial kOne{1, 0};

std::string at(SignedMonomial z, Exponent base) { return "@z=" + id_string(z) + ",base=" + std::to_string(base); }

std::string at_index(Exponent a, Exponent ell) {
  return "@a=" + std::to_string(a) + ",ell=" + std::to_string(ell);
}

// (q^base; q^base)_inf^k
ProductSpec qq(Exponent base, int k) { return ProductSpec{}.poch(1, base, base, k); }

LaurentSeries eval(const ProductSpec& spec, Exponent order) { return products::eval_product(spec, order); }

LaurentSeries one(Exponent order) { return LaurentSeries::constant(1, order); }

// m * series, where the series is computed far enough to survive the shift.
template <class F>
LaurentSeries monomial_times(SignedMonomial m, F&& series_to, Exponent order) {
  LaurentSeries s = series_to(order - m.exp).shifted(m.exp);
  if (m.sign < 0) s = -s;
  return s.truncated(order);
}

// z P(z^2) P(-1) / (P(z) P(-z)) with q -> q^base.
ProductSpec sigma_coefficient(SignedMonomial z, Exponent base) {
  return ProductSpec{}.times(z).big_p(z * z, base).big_p(kMinusOne, base).big_p(z, base, -1).big_p(z.negated(), base,
                                                                                                      -1);
}

// 2g(z) - g(z^2) + 1/2 = (q)^2 P(-z^4)/(P(z^4)P(-1)) + z P(-1)^2 (q)^2 P(z^2)/(P(z)^2 P(-z)^2)
IdentityReport part1_report(std::string id, SignedMonomial z, Exponent base, Exponent order) {
  const SignedMonomial z2 = z * z;
  const SignedMonomial z4 = z2 * z2;
  const LaurentSeries lhs = g_general(z, base, order) * Coefficient(2) - g_general(z2, base, order) +
                            LaurentSeries::constant(Coefficient(1, 2), order);
  const ProductSpec first = qq(base, 2).big_p(z4.negated(), base).big_p(z4, base, -1).big_p(kMinusOne, base, -1);
  const ProductSpec second = qq(base, 2)
                                 .times(z)
                                 .big_p(kMinusOne, base, 2)
                                 .big_p(z2, base)
                                 .big_p(z, base, -2)
                                 .big_p(z.negated(), base, -2);
  return compare_series(std::move(id), lhs, eval(first, order) + eval(second, order), order);
}

}  // namespace

IdentityReport verify_lemma21(Exponent ell, Exponent order) {
  const LaurentSeries rhs = eval(products::q_over_minus_q().times(Coefficient(-1, 2)), order) +
                            LaurentSeries::constant(Coefficient(1, 2), order);
  return compare_series("lemma2.1@ell=" + std::to_string(ell), s_bar(ell, ell, order), rhs, order);
}

IdentityReport verify_rels(Exponent b, Exponent ell, Exponent order) {
  return compare_series("rels@b=" + std::to_string(b) + ",ell=" + std::to_string(ell), s_bar(b, ell, order),
                        -s_bar(ell - b, ell, order), order);
}

IdentityReport verify_lemma41(SignedMonomial zeta, SignedMonomial z, Exponent base, Exponent order) {
  const SignedMonomial zeta2 = zeta * zeta;
  const LaurentSeries lhs =
      sigma(LambertSpec{z / zeta, zeta2.inverse(), base, false}, order) +
      times_sigma(ProductSpec{}.times(zeta2), LambertSpec{z * zeta, zeta2, base, false}, order);
  const LaurentSeries sigma_term = times_sigma(sigma_coefficient(zeta, base), LambertSpec{z, kOne, base, false}, order);
  const ProductSpec product = qq(base, 2)
                                  .big_p(zeta, base)
                                  .big_p(zeta2, base)
                                  .big_p(z.negated(), base)
                                  .big_p(z, base, -1)
                                  .big_p(z * zeta, base, -1)
                                  .big_p(z / zeta, base, -1)
                                  .big_p(zeta.negated(), base, -1);
  return compare_series("lemma4.1@zeta=" + id_string(zeta) + ",z=" + id_string(z) + ",base=" + std::to_string(base),
                        lhs, sigma_term + eval(product, order), order);
}

IdentityReport verify_lem1(Exponent a, Exponent b, Exponent ell, Exponent order) {
  const Exponent base = ell * ell;
  auto y = [ell](Exponent k) { return q_pow(k * ell); };
  const LaurentSeries first = times_sigma(ProductSpec{}.times(y(2 * a)), sigma_ab(a + b, 2 * a, ell), order);
  const LaurentSeries second = sigma(sigma_ab(b - a, -2 * a, ell), order);
  const LaurentSeries third = times_sigma(sigma_coefficient(y(a), base), sigma_ab(b, 0, ell), order);
  const ProductSpec fourth = qq(base, 2)
                                 .big_p(y(a), base)
                                 .big_p(y(2 * a), base)
                                 .big_p(y(b).negated(), base)
                                 .big_p(y(b + a), base, -1)
                                 .big_p(y(b - a), base, -1)
                                 .big_p(y(b), base, -1)
                                 .big_p(y(a).negated(), base, -1);
  return compare_to_zero("lem1@a=" + std::to_string(a) + ",b=" + std::to_string(b) + ",ell=" + std::to_string(ell),
                         first + second - third - eval(fourth, order), order);
}

IdentityReport verify_lemma42(Lemma42Part part, SignedMonomial z, Exponent base, Exponent order) {
  if (part == Lemma42Part::Part1) return part1_report("part1" + at(z, base), z, base, order);
  const SignedMonomial mirror = q_pow(base) / z;
  return compare_series("part2" + at(z, base), g_general(z, base, order) + g_general(mirror, base, order), one(order),
                        order);
}

IdentityReport verify_constant(SignedMonomial z, Exponent base, Exponent order) {
  return compare_series("constant" + at(z, base),
                        g_general(z, base, order) - g_general(z * q_pow(base), base, order),
                        LaurentSeries::constant(-2, order), order);
}

IdentityReport verify_gees(SignedMonomial z, Exponent base, Exponent order) {
  return compare_series("gees" + at(z, base), g_general(z.inverse(), base, order) + g_general(z, base, order),
                        LaurentSeries::constant(-1, order), order);
}

IdentityReport verify_g1(Exponent a, Exponent ell, Exponent order) {
  const Exponent base = ell * ell;
  auto y = [ell](Exponent k) { return q_pow(k * ell); };
  auto p = [&](Exponent k, int mult = 1) { return ProductSpec{}.big_p(y(k), base, mult); };
  const LaurentSeries lhs = g_func({a, ell}, order) * Coefficient(2) - g_func({2 * a, ell}, order) +
                            LaurentSeries::constant(Coefficient(1, 2), order);
  const ProductSpec p_zero_sq = qq(base, 2);
  const ProductSpec first =
      p_zero_sq * ProductSpec{}.big_p(y(4 * a).negated(), base) * p(4 * a, -1) * ProductSpec{}.big_p(kMinusOne, base, -1);
  const ProductSpec second = p_zero_sq * ProductSpec{}.times(y(a)).big_p(kMinusOne, base, 2) * p(2 * a) * p(a, -2) *
                             ProductSpec{}.big_p(y(a).negated(), base, -2);
  return compare_series("g1" + at_index(a, ell), lhs, eval(first, order) + eval(second, order), order);
}

IdentityReport verify_g2(Exponent a, Exponent ell, Exponent order) {
  return compare_series("g2" + at_index(a, ell), g_func({a, ell}, order) + g_func({ell - a, ell}, order), one(order),
                        order);
}

IdentityReport verify_sigma_shift(SignedMonomial z, SignedMonomial zeta, Exponent base, Exponent order) {
  const LaurentSeries lhs = times_sigma(ProductSpec{}.times(z * z), LambertSpec{z, zeta, base, false}, order) +
                            times_sigma(ProductSpec{}.times(zeta), LambertSpec{z * q_pow(base), zeta, base, false}, order);
  // sum (-zeta)^n q^{base n^2 - base n} + z sum (-zeta)^n q^{base n^2}
  const LaurentSeries rhs =
      -(products::theta(zeta.negated() / q_pow(base), base, order) +
        monomial_times(z, [&](Exponent o) { return products::theta(zeta.negated(), base, o); }, order));
  return compare_series("sigma@z=" + id_string(z) + ",zeta=" + id_string(zeta) + ",base=" + std::to_string(base), lhs,
                        rhs, order);
}

IdentityReport verify_step(SignedMonomial z, Exponent base, Exponent order) {
  const LaurentSeries lhs = times_sigma(ProductSpec{}.times(z * z), LambertSpec{z, kOne, base, false}, order) +
                            sigma(LambertSpec{z * q_pow(base), kOne, base, false}, order);
  const ProductSpec rhs = ProductSpec{}.times(z.negated()).poch(1, base, base).poch(-1, base, base, -1);
  return compare_series("step" + at(z, base), lhs, eval(rhs, order), order);
}

IdentityReport verify_short(SignedMonomial z, Exponent base, Exponent order) {
  const LaurentSeries lhs =
      sigma(LambertSpec{z, kOne, base, false}, order) +
      times_sigma(ProductSpec{}.times((z * z).inverse()), LambertSpec{z.inverse(), kOne, base, false}, order);
  const LaurentSeries rhs = monomial_times(
      z.inverse().negated(), [&](Exponent o) { return products::theta(kMinusOne, base, o); }, order);
  return compare_series("short" + at(z, base), lhs, rhs, order);
}

IdentityReport verify_range_doubling(const LambertSpec& spec, Exponent order) {
  std::string id = "range@z=" + id_string(spec.z) + ",zeta=" + id_string(spec.zeta) +
                   ",base=" + std::to_string(spec.base) + (spec.primed ? ",primed" : "");
  return compare_series(std::move(id), sigma(spec, order), sigma(spec, order, 2), order);
}

}  // namespace overrank::lambert
