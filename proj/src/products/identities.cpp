#include "products/identities.hpp"

namespace overrank::products {

namespace {

std::string hick_id(Hickerson which, SignedMonomial x, SignedMonomial z, Exponent base) {
  return to_string(which) + "@x=" + id_string(x) + ",z=" + id_string(z) + ",base=" + std::to_string(base);
}

// (q^base; q^base)_inf^k
ProductSpec qq(Exponent base, int k) { return ProductSpec{}.poch(1, base, base, k); }

}  // namespace

std::string id_string(SignedMonomial m) {
  std::string body = m.exp == 0 ? "1" : "q" + std::to_string(m.exp);
  return m.sign < 0 ? "-" + body : body;
}

std::string to_string(Hickerson which) {
  switch (which) {
    case Hickerson::Lemma32: return "lemma3.2";
    case Hickerson::Lemma33: return "lemma3.3";
    case Hickerson::Lemma34: return "lemma3.4";
    case Hickerson::Lemma35: return "lemma3.5";
  }
  return "lemma3.?";
}

IdentityReport verify_lemma31(Lemma31Variant variant, Exponent order) {
  const auto lhs = eval_product(q_over_minus_q(), order);
  LaurentSeries rhs;
  std::string id;
  if (variant == Lemma31Variant::Eq1) {
    id = "lemma3.1.eq1";
    rhs = eval_product(ProductSpec{}.poch(1, 9, 9).poch(-1, 9, 9, -1), order) -
          eval_product(ProductSpec{}.poch_list(1, {3, 15, 18}, 18).times(q_pow(1)).times(2), order);
  } else {
    id = "lemma3.1.eq2";
    rhs = eval_product(ProductSpec{}.poch(1, 25, 25).poch(-1, 25, 25, -1), order) -
          eval_product(ProductSpec{}.poch_list(1, {15, 35, 50}, 50).times(q_pow(1)).times(2), order) +
          eval_product(ProductSpec{}.poch_list(1, {5, 45, 50}, 50).times(q_pow(4)).times(2), order);
  }
  return compare_series(std::move(id), lhs, rhs, order);
}

IdentityReport verify_hickerson(Hickerson which, SignedMonomial x, SignedMonomial z, Exponent base,
                                Exponent order) {
  const Exponent b2 = 2 * base;
  const SignedMonomial q = q_pow(base);
  auto ev = [&](const ProductSpec& p) { return eval_product(p, order); };
  // P(a, q) P(b, q) (q; q)^2
  auto left = [&](SignedMonomial a, SignedMonomial b) {
    return ev(ProductSpec{}.big_p(a, base).big_p(b, base) * qq(base, 2));
  };
  // P(a, q^2) P(b, q^2) (q^2; q^2)^2
  auto right = [&](SignedMonomial a, SignedMonomial b, SignedMonomial factor = q_pow(0)) {
    return ev(ProductSpec{}.times(factor).big_p(a, b2).big_p(b, b2) * qq(b2, 2));
  };

  LaurentSeries lhs, rhs;
  switch (which) {
    case Hickerson::Lemma32:
      lhs = left(x, z);
      rhs = right((x * z).negated(), (q * z / x).negated()) -
            right((x * z * q).negated(), (z / x).negated(), x);
      break;
    case Hickerson::Lemma33:
      lhs = left(x.negated(), z) - left(x, z.negated());
      rhs = right(z / x, x * z * q, x) * Coefficient(2);
      break;
    case Hickerson::Lemma34:
      lhs = left(x.negated(), z) + left(x, z.negated());
      rhs = right(x * z, q * z / x) * Coefficient(2);
      break;
    case Hickerson::Lemma35:
      lhs = left(x.negated(), z) * Coefficient(3) - left(x, z.negated());
      rhs = right(x * z, z * q / x) * Coefficient(2) + right(x * z * q, z / x, x) * Coefficient(4);
      break;
  }
  return compare_series(hick_id(which, x, z, base), lhs, rhs, order);
}

IdentityReport verify_addition(SignedMonomial z, SignedMonomial zeta, SignedMonomial t, Exponent base,
                               Exponent order) {
  auto term = [&](SignedMonomial sq, SignedMonomial a, SignedMonomial b) {
    return eval_product(ProductSpec{}.big_p(sq, base, 2).big_p(a, base).big_p(b, base), order);
  };
  const LaurentSeries expr = term(z, zeta * t, zeta / t) - term(zeta, z * t, z / t) +
                             eval_product(ProductSpec{}
                                              .times(zeta / t)
                                              .big_p(t, base, 2)
                                              .big_p(z * zeta, base)
                                              .big_p(z / zeta, base),
                                          order);
  return compare_to_zero("lemma3.6@z=" + id_string(z) + ",zeta=" + id_string(zeta) + ",t=" + id_string(t) +
                             ",base=" + std::to_string(base),
                         expr, order);
}

IdentityReport verify_p_reflection(Exponent a, Exponent ell, Exponent order) {
  const Exponent base = ell * ell;
  return compare_series("p3@a=" + std::to_string(a) + ",ell=" + std::to_string(ell),
                        big_p_direct(q_pow((ell - a) * ell), base, order),
                        big_p_direct(q_pow(a * ell), base, order), order);
}

IdentityReport verify_p_negation(Exponent a, Exponent ell, Exponent order) {
  const Exponent base = ell * ell;
  const LaurentSeries rhs = big_p_direct(q_pow(a * ell), base, order + a * ell).shifted(-a * ell) * Coefficient(-1);
  return compare_series("p4@a=" + std::to_string(a) + ",ell=" + std::to_string(ell),
                        big_p_direct(q_pow(-a * ell), base, order), rhs, order);
}

IdentityReport verify_p1(SignedMonomial z, Exponent base, Exponent order) {
  return compare_series("p1@z=" + id_string(z) + ",base=" + std::to_string(base),
                        big_p_direct(z.inverse() * q_pow(base), base, order), big_p_direct(z, base, order),
                        order);
}

IdentityReport verify_p2(SignedMonomial z, Exponent base, Exponent order) {
  // -z^-1 = -s q^-e
  const LaurentSeries rhs =
      big_p_direct(z, base, order + z.exp).shifted(-z.exp) * Coefficient(-z.sign);
  return compare_series("p2@z=" + id_string(z) + ",base=" + std::to_string(base),
                        big_p_direct(z * q_pow(base), base, order), rhs, order);
}

IdentityReport verify_triple_product(SignedMonomial z, Exponent base, Exponent order) {
  const ProductSpec prod = ProductSpec{}
                               .poch((z * q_pow(base)).negated().sign, (z * q_pow(base)).exp, 2 * base)
                               .poch((q_pow(base) / z).negated().sign, (q_pow(base) / z).exp, 2 * base)
                               .poch(1, 2 * base, 2 * base);
  return compare_series("jtp@z=" + id_string(z) + ",base=" + std::to_string(base), theta(z, base, order),
                        eval_product(prod, order), order);
}

}  // namespace overrank::products
