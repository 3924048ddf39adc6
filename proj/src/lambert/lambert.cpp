#include "lambert/lambert.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "core/error.hpp"

namespace overrank::lambert {

using products::q_pow;

namespace {

Exponent isqrt_ceil(Exponent v) {
  if (v <= 0) return 0;
  auto r = static_cast<Exponent>(std::sqrt(static_cast<double>(v)));
  while (r * r < v) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= v) --r;
  return r;
}

bool omitted(const BilateralSum& sum, Exponent n) { return sum.omit_zero && n == 0; }

}  // namespace

Exponent term_valuation(const BilateralSum& sum, Exponent n) {
  const Exponent e = sum.quad * n * n + sum.lin * n;
  const Exponent d = sum.step * n + sum.offset;
  return d < 0 ? e - d : e;
}

Exponent valuation(const BilateralSum& sum) {
  const Exponent reach =
      (std::abs(sum.lin) + std::abs(sum.step) + std::abs(sum.offset)) / std::max<Exponent>(sum.quad, 1) + 3;
  Exponent best = 0;
  bool first = true;
  for (Exponent n = -reach; n <= reach; ++n) {
    if (omitted(sum, n)) continue;
    const Exponent v = term_valuation(sum, n);
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

Exponent summation_bound(const BilateralSum& sum, Exponent order) {
  if (sum.quad < 1) throw Error(ErrorCode::InvalidArgument, "bilateral sum needs a positive quadratic term");
  Exponent n = isqrt_ceil((std::max<Exponent>(order, 0) + sum.quad - 1) / sum.quad) + 2;
  // term_valuation is convex in n; stop once it is increasing and past order.
  auto done = [&](Exponent k, int dir) {
    const Exponent here = term_valuation(sum, dir * k);
    const Exponent next = term_valuation(sum, dir * (k + 1));
    return next >= order && next >= here;
  };
  while (!done(n, 1) || !done(n, -1)) ++n;
  return n;
}

LaurentSeries expand(const BilateralSum& sum, Exponent order, int range_multiplier) {
  const Exponent bound = summation_bound(sum, order) * std::max(range_multiplier, 1);
  const Exponent lo = std::min(valuation(sum), order);
  std::vector<Coefficient> acc(static_cast<std::size_t>(order - lo));
  auto slot = [&](Exponent e) -> Coefficient& { return acc[static_cast<std::size_t>(e - lo)]; };

  for (Exponent n = -bound; n <= bound; ++n) {
    if (omitted(sum, n)) continue;
    const Exponent d = sum.step * n + sum.offset;
    if (d == 0 && sum.denom_sign > 0) {
      throw Error(ErrorCode::PoleHit, "term n = " + std::to_string(n) + " has denominator 1 - q^0");
    }
    const Exponent e = sum.quad * n * n + sum.lin * n;
    if (term_valuation(sum, n) >= order) continue;
    const bool odd = (n % 2) != 0;
    const int c = (odd ? -1 : 1) * (odd ? sum.weight_sign : 1);
    const int s = sum.denom_sign;
    if (d == 0) {
      // 1/(1 - (-1)) = 1/2
      slot(e) += Coefficient(c, 2);
    } else if (d > 0) {
      int sk = 1;
      for (Exponent x = e; x < order; x += d, sk *= s) slot(x) += c * sk;
    } else {
      // -sum_{k>=1} s^k q^{k|d|}
      int sk = s;
      for (Exponent x = e - d; x < order; x -= d, sk *= s) slot(x) -= c * sk;
    }
  }
  return LaurentSeries(lo, std::move(acc), order);
}

BilateralSum to_bilateral(const LambertSpec& spec) {
  if (spec.primed && !(spec.z == q_pow(0))) {
    throw Error(ErrorCode::InvalidArgument, "the primed sum is defined for z = 1 only");
  }
  return BilateralSum{spec.base, spec.base + spec.zeta.exp, spec.zeta.sign, spec.z.sign,
                      spec.base,  spec.z.exp,               spec.primed};
}

LambertSpec sigma_ab(Exponent a, Exponent b, Exponent ell) {
  return LambertSpec{q_pow(a * ell), q_pow(b * ell), ell * ell, false};
}

LambertSpec sigma_0b(Exponent b, Exponent ell) { return LambertSpec{q_pow(0), q_pow(b * ell), ell * ell, true}; }

LaurentSeries expand_geom(Exponent e, Exponent order) {
  if (e == 0) throw Error(ErrorCode::ZeroExponent, "1/(1 - q^0) is not a power series");
  if (e > 0) return qseries::divide_binomial(LaurentSeries::constant(1, order), 1, e);
  return qseries::divide_binomial(LaurentSeries::constant(1, order + e), 1, e);
}

LaurentSeries sigma(const LambertSpec& spec, Exponent order, int range_multiplier) {
  return expand(to_bilateral(spec), order, range_multiplier);
}

LaurentSeries sigma_primed(Exponent b, Exponent ell, Exponent order) {
  return sigma(LambertSpec{q_pow(0), q_pow(b), ell, true}, order);
}

LaurentSeries s_bar(Exponent b, Exponent ell, Exponent order) {
  LaurentSeries r = expand(BilateralSum{1, b, 1, 1, ell, 0, true}, order);
  qseries::require_power_series(r, "S(b)");
  return r;
}

LaurentSeries times_sigma(const ProductSpec& product, const LambertSpec& spec, Exponent order) {
  const Exponent vp = products::valuation(product);
  const Exponent vs = valuation(to_bilateral(spec));
  // Nothing below `order`; multiplying two empty truncations would understate the order.
  if (vp + vs >= order) return LaurentSeries::zero(order);
  const LaurentSeries p = products::eval_product(product, order - vs);
  const LaurentSeries s = sigma(spec, order - vp);
  return (p * s).truncated(order);
}

LaurentSeries g_general(SignedMonomial z, Exponent base, Exponent order) {
  const SignedMonomial z2 = z * z;
  const SignedMonomial minus_one{-1, 0};
  const ProductSpec ratio = ProductSpec{}
                                .times(z)
                                .big_p(z2, base)
                                .big_p(minus_one, base)
                                .big_p(z, base, -1)
                                .big_p(z.negated(), base, -1);
  const LaurentSeries f1 = times_sigma(ratio, LambertSpec{z, q_pow(0), base, false}, order);
  const LaurentSeries f2 = times_sigma(ProductSpec{}.times(z2), LambertSpec{z2, z2, base, false}, order);
  const LaurentSeries f3 = sigma(LambertSpec{q_pow(0), z2.inverse(), base, true}, order);
  return f1 - f2 - f3;
}

LaurentSeries g_func(const GFuncSpec& spec, Exponent order) {
  if (spec.ell < 2 || spec.a % spec.ell == 0) {
    throw Error(ErrorCode::InvalidArgument, "g(a) needs a not divisible by ell");
  }
  LaurentSeries r = g_general(q_pow(spec.a * spec.ell), spec.ell * spec.ell, order);
  qseries::require_power_series(r, "g(a)");
  return r;
}

}  // namespace overrank::lambert
