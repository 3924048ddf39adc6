#include "core/error.hpp"
#include "lambert/identities.hpp"
#include "support.hpp"

using namespace overrank;
using namespace overrank::lambert;
using products::q_pow;
using testing::first_difference;

namespace {

// sum_n (-1)^n zeta^n q^{base(n^2+n)} / (1 - z q^{base n}), each denominator
// expanded by hand; a wide fixed n-range stands in for the library's bound.
LaurentSeries naive_sigma(const LambertSpec& s, Exponent order) {
  testing::Sparse acc;
  Exponent lo = 0;
  for (Exponent n = -40; n <= 40; ++n) {
    if (s.primed && n == 0) continue;
    const Exponent e = s.base * (n * n + n) + s.zeta.exp * n;
    int c = n % 2 != 0 ? -1 : 1;
    if (n % 2 != 0 && s.zeta.sign < 0) c = -c;
    const Exponent d = s.z.exp + s.base * n;
    if (d > 0) {
      int p = 1;
      for (Exponent k = 0; e + k * d < order; ++k, p *= s.z.sign) acc[e + k * d] += c * p;
    } else if (d < 0) {
      // 1/(1 - w) = -w^-1 / (1 - w^-1) with w = s q^d
      int p = s.z.sign;
      for (Exponent k = 1; e - k * d < order; ++k, p *= s.z.sign) acc[e - k * d] -= c * p;
    } else {
      REQUIRE(s.z.sign < 0);
      acc[e] += Coefficient(c, 2);
    }
    for (const auto& [x, v] : acc) lo = std::min(lo, x);
  }
  return testing::to_series(acc, lo, order);
}

}  // namespace

TEST_SUITE("lambert") {
  TEST_CASE("expand_geom for both signs") {
    const LaurentSeries pos = expand_geom(3, 20);
    CHECK(pos.coeff(0) == 1);
    CHECK(pos.coeff(3) == 1);
    CHECK(pos.coeff(4) == 0);
    const LaurentSeries neg = expand_geom(-2, 20);
    CHECK(neg.coeff(0) == 0);
    CHECK(neg.coeff(2) == -1);
    CHECK(neg.coeff(6) == -1);
    const LaurentSeries back = qseries::multiply_binomial(expand_geom(-7, 60), 1, -7);
    // multiplying by q^-7 costs seven places of precision
    CHECK(back.order() == 53);
    CHECK(first_difference(back, LaurentSeries::constant(1, 53), 53) == 53);
    try {
      expand_geom(0, 5);
      FAIL("expected ZeroExponent");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ZeroExponent);
    }
  }

  TEST_CASE("sigma against a hand-expanded oracle") {
    const LambertSpec specs[] = {
        {q_pow(1), q_pow(0), 3, false},      {q_pow(2), q_pow(0), 5, false},   {q_pow(-3), q_pow(4, -1), 5, false},
        {q_pow(0, -1), q_pow(1), 2, false},  {q_pow(0), q_pow(-4), 5, true},   {q_pow(7, -1), q_pow(-2), 4, false},
        {q_pow(10), q_pow(-10), 25, false},  {q_pow(-5), q_pow(10), 25, false}};
    for (const LambertSpec& s : specs) {
      const LaurentSeries fast = sigma(s, 120);
      INFO("z=" << products::to_string(s.z) << " zeta=" << products::to_string(s.zeta) << " base=" << s.base);
      CHECK(fast.order() == 120);
      CHECK(first_difference(fast, naive_sigma(s, 120), 120) == 120);
    }
  }

  TEST_CASE("sigma at (q, 1, q^3) starts 1 + O(q)") {
    const LaurentSeries s = sigma({q_pow(1), q_pow(0), 3, false}, 10);
    CHECK(s.coeff(0) == 1);
    CHECK(s.min_exp() >= 0);
  }

  TEST_CASE("primed sum: lowest terms come from n = -1 and n = 1") {
    // n = -1: q^3/(1 - q^5); n = 1: -q^12/(1 - q^5)
    const LaurentSeries s = sigma_primed(2, 5, 20);
    CHECK(s.min_exp() == 3);
    CHECK(s.coeff(3) == 1);
    CHECK(s.coeff(8) == 1);
    CHECK(s.coeff(12) == -1);
    CHECK(s.coeff(13) == 1);
    CHECK(sigma_primed(2, 5, 0).is_zero());
  }

  TEST_CASE("product times a sum that starts beyond the order keeps the order") {
    // the primed sum with zeta = q^-10, base 25 starts at q^35
    const LaurentSeries far = times_sigma(ProductSpec{}, sigma_0b(-2, 5), 20);
    CHECK(far.is_zero());
    CHECK(far.order() == 20);
    CHECK(times_sigma(ProductSpec{}, sigma_0b(-2, 5), 60).min_exp() == 35);
  }

  TEST_CASE("a vanishing denominator is a pole") {
    try {
      sigma({q_pow(5), q_pow(0), 5, false}, 30);
      FAIL("expected PoleHit");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::PoleHit);
    }
    CHECK_THROWS_AS(sigma({q_pow(1), q_pow(0), 5, true}, 30), Error);
  }

  TEST_CASE("S(b) is a power series and antisymmetric under b -> ell - b") {
    for (const Exponent ell : {3, 5}) {
      for (Exponent b = 1; b <= ell; ++b) CHECK(s_bar(b, ell, 80).min_exp() >= 0);
      for (Exponent b = 0; b <= ell; ++b) CHECK(verify_rels(b, ell, 200).pass);
      CHECK(verify_lemma21(ell, 200).pass);
    }
    const LaurentSeries sum = s_bar(1, 3, 100) + s_bar(2, 3, 100);
    CHECK(sum.is_zero());
  }

  TEST_CASE("summation bound is at least the quadratic estimate and grows with the order") {
    const BilateralSum b = to_bilateral({q_pow(1), q_pow(0), 3, false});
    CHECK(summation_bound(b, 300) >= 12);
    CHECK(summation_bound(b, 300) >= summation_bound(b, 30));
  }

  TEST_CASE("doubling the summation range changes nothing") {
    for (const LambertSpec& s : {LambertSpec{q_pow(2), q_pow(0), 5, false}, LambertSpec{q_pow(0), q_pow(-4), 5, true},
                                 LambertSpec{q_pow(-15), q_pow(10), 25, false}, sigma_ab(4, 2, 5), sigma_ab(-1, -2, 5)}) {
      CHECK(verify_range_doubling(s, 150).pass);
    }
  }

  TEST_CASE("g(a) is a power series and g(a) + g(ell - a) = 1") {
    for (const Exponent ell : {3, 5}) {
      for (Exponent a = 1; a < ell; ++a) {
        CHECK(g_func({a, ell}, 60).min_exp() >= 0);
        CHECK(verify_g2(a, ell, 150).pass);
      }
    }
    CHECK_THROWS_AS(g_func({5, 5}, 10), Error);
  }

  TEST_CASE("duplication formula for g") {
    CHECK(verify_g1(1, 5, 300).pass);
    CHECK(verify_g1(2, 5, 200).pass);
    CHECK(verify_lemma42(Lemma42Part::Part1, q_pow(1), 5, 300).pass);
    CHECK(verify_lemma42(Lemma42Part::Part1, q_pow(1), 3, 200).pass);
    CHECK(verify_lemma42(Lemma42Part::Part2, q_pow(2), 5, 200).pass);
  }

  TEST_CASE("g shifted by q, and g at 1/z") {
    CHECK(verify_constant(q_pow(1), 3, 150).pass);
    CHECK(verify_gees(q_pow(2), 7, 150).pass);
    CHECK(verify_gees(q_pow(1, -1), 5, 150).pass);
  }

  TEST_CASE("four-term Lambert identity at the specializations that are free of poles") {
    CHECK(verify_lemma41(q_pow(5), q_pow(10), 25, 300).pass);
    CHECK(verify_lemma41(q_pow(10), q_pow(5), 25, 300).pass);
    CHECK(verify_lemma41(q_pow(5), q_pow(15), 25, 300).pass);
    CHECK(verify_lem1(1, 2, 5, 300).pass);
    CHECK(verify_lem1(2, 1, 5, 300).pass);
    CHECK(verify_lemma41(q_pow(2), q_pow(3, -1), 7, 200).pass);
    // With ell = 3 every admissible (a, b) has a = +-b mod 3 and hits a pole.
    try {
      verify_lemma41(q_pow(3), q_pow(3), 9, 200);
      FAIL("expected a pole");
    } catch (const Error& e) {
      CHECK((e.code() == ErrorCode::PoleHit || e.code() == ErrorCode::ZeroLeadingTerm));
    }
  }

  TEST_CASE("shift relations for Sigma at sampled monomials") {
    std::mt19937 rng(testing::kSeed + 4);
    for (int k = 0; k < 6; ++k) {
      const Exponent base = std::uniform_int_distribution<Exponent>(3, 7)(rng);
      const auto z = q_pow(std::uniform_int_distribution<Exponent>(1, base - 1)(rng), k % 2 ? -1 : 1);
      const auto zeta = q_pow(std::uniform_int_distribution<Exponent>(-base, base)(rng), k % 3 ? 1 : -1);
      CHECK(verify_sigma_shift(z, zeta, base, 150).pass);
      CHECK(verify_short(z, base, 150).pass);
    }
    CHECK(verify_step(q_pow(2), 7, 200).pass);
  }
}
