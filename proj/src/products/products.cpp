#include "products/products.hpp"

#include <cmath>
#include <cstdlib>

#include "core/error.hpp"

namespace overrank::products {

namespace {

// (1 - sign q^exp)^mult with exp >= 1.
struct Binomial {
  int sign;
  Exponent exp;
  int mult;
};

struct Normalized {
  Coefficient scalar{1};
  Exponent lead = 0;
  std::vector<Binomial> finite;
  std::vector<PochFactor> tails;  // every tail arg has exp >= 1
};

Coefficient power(const Coefficient& c, int k) {
  Coefficient r(1);
  for (int i = 0; i < std::abs(k); ++i) r *= c;
  return k < 0 ? Coefficient(1 / r) : r;
}

Normalized normalize(const ProductSpec& spec) {
  Normalized n;
  n.scalar = spec.prefactor;
  n.lead = spec.leading_exp;
  bool vanishes = false;
  for (const auto& f : spec.factors) {
    if (f.modulus < 1) throw Error(ErrorCode::InvalidArgument, "Pochhammer modulus must be >= 1");
    if (f.multiplicity == 0) continue;
    Exponent r = f.arg.exp;
    const int s = f.arg.sign;
    while (r <= 0) {
      if (r == 0) {
        if (s > 0) {
          if (f.multiplicity < 0) {
            throw Error(ErrorCode::ZeroLeadingTerm, "denominator contains the factor (1 - 1)");
          }
          vanishes = true;
        } else {
          n.scalar *= power(Coefficient(2), f.multiplicity);
        }
      } else {
        // 1 - s q^r = -s q^r (1 - s q^-r)
        n.scalar *= power(Coefficient(-s), f.multiplicity);
        n.lead += r * f.multiplicity;
        n.finite.push_back({s, -r, f.multiplicity});
      }
      r += f.modulus;
    }
    n.tails.push_back({{s, r}, f.modulus, f.multiplicity});
  }
  if (vanishes) n.scalar = 0;
  return n;
}

void apply_binomial(std::vector<mpz_class>& u, int sign, Exponent exp, int mult) {
  const auto len = static_cast<Exponent>(u.size());
  if (exp >= len) return;
  const auto e = static_cast<std::size_t>(exp);
  for (int rep = 0; rep < std::abs(mult); ++rep) {
    if (mult > 0) {
      for (std::size_t i = u.size() - 1; i >= e; --i) {
        if (sign > 0) {
          u[i] -= u[i - e];
        } else {
          u[i] += u[i - e];
        }
      }
    } else {
      for (std::size_t i = e; i < u.size(); ++i) {
        if (sign > 0) {
          u[i] += u[i - e];
        } else {
          u[i] -= u[i - e];
        }
      }
    }
  }
}

}  // namespace

std::string to_string(SignedMonomial m) {
  std::string body = m.exp == 0 ? "1" : (m.exp == 1 ? "q" : "q^" + std::to_string(m.exp));
  return m.sign < 0 ? "-" + body : body;
}

LaurentSeries monomial_series(SignedMonomial m, Exponent order) {
  return LaurentSeries::monomial(Coefficient(m.sign), m.exp, order);
}

ProductSpec& ProductSpec::poch(int sign, Exponent r, Exponent m, int mult) {
  factors.push_back({{sign, r}, m, mult});
  return *this;
}

ProductSpec& ProductSpec::poch_list(int sign, std::initializer_list<Exponent> rs, Exponent m, int mult) {
  for (Exponent r : rs) poch(sign, r, m, mult);
  return *this;
}

ProductSpec& ProductSpec::big_p(SignedMonomial z, Exponent base, int mult) {
  if (base < 1) throw Error(ErrorCode::InvalidArgument, "P(z, q^base) needs base >= 1");
  Coefficient pre(1);
  Exponent lead = 0;
  const int s = z.sign;
  Exponent j = z.exp;
  while (j > base) {
    // P(w q^base) = -w^-1 P(w) with w = s q^(j - base)
    j -= base;
    pre *= -s;
    lead -= j;
  }
  while (j < 0) {
    // P(w) = -w P(w q^base)
    pre *= -s;
    lead += j;
    j += base;
  }
  if (mult % 2 != 0) prefactor *= pre;
  leading_exp += lead * mult;
  poch(s, j, base, mult);
  poch(s, base - j, base, mult);
  return *this;
}

ProductSpec& ProductSpec::times(SignedMonomial m) {
  prefactor *= m.sign;
  leading_exp += m.exp;
  return *this;
}

ProductSpec& ProductSpec::times(const Coefficient& c) {
  prefactor *= c;
  return *this;
}

ProductSpec operator*(ProductSpec a, const ProductSpec& b) {
  a.factors.insert(a.factors.end(), b.factors.begin(), b.factors.end());
  a.prefactor *= b.prefactor;
  a.leading_exp += b.leading_exp;
  return a;
}

Exponent valuation(const ProductSpec& spec) { return normalize(spec).lead; }

LaurentSeries eval_product(const ProductSpec& spec, Exponent order) {
  const Normalized n = normalize(spec);
  const Exponent len = order - n.lead;
  if (n.scalar == 0 || len <= 0) return LaurentSeries::zero(order);

  std::vector<mpz_class> u(static_cast<std::size_t>(len));
  u[0] = 1;
  for (const auto& b : n.finite) apply_binomial(u, b.sign, b.exp, b.mult);
  for (const auto& t : n.tails) {
    for (Exponent e = t.arg.exp; e < len; e += t.modulus) apply_binomial(u, t.arg.sign, e, t.multiplicity);
  }
  std::vector<Coefficient> coeffs(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) coeffs[i] = n.scalar * mpq_class(u[i]);
  return LaurentSeries(n.lead, std::move(coeffs), order);
}

LaurentSeries pochhammer_inf(SignedMonomial arg, Exponent modulus, Exponent order) {
  return eval_product(ProductSpec{}.poch(arg.sign, arg.exp, modulus), order);
}

LaurentSeries big_p(SignedMonomial z, Exponent base, Exponent order) {
  return eval_product(ProductSpec{}.big_p(z, base), order);
}

LaurentSeries big_p_direct(SignedMonomial z, Exponent base, Exponent order) {
  if (base < 1) throw Error(ErrorCode::InvalidArgument, "P(z, q^base) needs base >= 1");
  // Factors (1 - z q^{base(r-1)}) and (1 - z^-1 q^{base r}), r >= 1.
  const Exponent firsts[2] = {z.exp, base - z.exp};
  Exponent negative_total = 0;
  for (Exponent first : firsts) {
    for (Exponent e = first; e < 0; e += base) negative_total += e;
  }
  std::vector<Binomial> factors;
  for (Exponent first : firsts) {
    for (Exponent e = first; e < order - negative_total || e <= 0; e += base) factors.push_back({z.sign, e, 1});
  }
  LaurentSeries acc = LaurentSeries::constant(1, order - negative_total);
  for (const auto& f : factors) acc = qseries::multiply_binomial(acc, f.sign, f.exp);
  return acc.truncated(order);
}

LaurentSeries theta(SignedMonomial z, Exponent base, Exponent order) {
  if (base < 1) throw Error(ErrorCode::InvalidArgument, "theta needs base >= 1");
  auto exponent = [&](Exponent n) { return base * n * n + z.exp * n; };
  const auto vertex = static_cast<Exponent>(std::llround(-static_cast<double>(z.exp) / (2.0 * base)));
  Exponent lo = exponent(vertex);
  for (Exponent n = vertex - 1; n <= vertex + 1; ++n) lo = std::min(lo, exponent(n));
  if (lo >= order) return LaurentSeries::zero(order);
  std::vector<Coefficient> c(static_cast<std::size_t>(order - lo));
  auto add_term = [&](Exponent n) {
    const Exponent e = exponent(n);
    if (e >= order) return false;
    const int sign = (z.sign < 0 && (n % 2 != 0)) ? -1 : 1;
    c[static_cast<std::size_t>(e - lo)] += sign;
    return true;
  };
  add_term(vertex);
  for (Exponent n = vertex + 1; add_term(n); ++n) {
  }
  for (Exponent n = vertex - 1; add_term(n); --n) {
  }
  return LaurentSeries(lo, std::move(c), order);
}

LaurentSeries p_zero(Exponent base, Exponent order) { return pochhammer_inf(q_pow(base), base, order); }

ProductSpec q_over_minus_q() { return ProductSpec{}.poch(1, 1, 1).poch(-1, 1, 1, -1); }

}  // namespace overrank::products
