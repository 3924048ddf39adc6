#include "rankdiff/rankdiff.hpp"

#include <sstream>

#include "combinat/combinat.hpp"
#include "core/error.hpp"

namespace overrank::rankdiff {

using products::q_pow;

namespace {

constexpr int sign_of_power(Exponent k) { return k % 2 == 0 ? 1 : -1; }

ProductSpec monomial(SignedMonomial m) { return ProductSpec{}.times(m); }

// y^k with y = q^ell
SignedMonomial y_pow(const FinalFormSpec& spec, Exponent k) { return q_pow(k * spec.ell); }

// (-1)^{m+a} q^{(a+m)(a-m+ell)}
SignedMonomial a_weight(const FinalFormSpec& spec, Exponent a) {
  return q_pow((a + spec.m) * (a - spec.m + spec.ell), sign_of_power(spec.m + a));
}

// (q)_inf (-q^B; q^B)_inf / ((-q)_inf (q^B; q^B)_inf), B = ell^2
ProductSpec bracket_shape(int ell) {
  const Exponent b = static_cast<Exponent>(ell) * ell;
  return ProductSpec{}.poch(1, 1, 1).poch(-1, b, b).poch(-1, 1, 1, -1).poch(1, b, b, -1);
}

// (q)_inf / (2(-q)_inf)
ProductSpec half_q_ratio() { return products::q_over_minus_q().times(Coefficient(1, 2)); }

}  // namespace

std::string to_string(const RankDiffKey& key) {
  return "thm" + std::to_string(key.ell) + ".R" + std::to_string(key.s) + std::to_string(key.t) + ".d" +
         std::to_string(key.d);
}

RankDiffKey parse_key(const std::string& text) {
  std::istringstream in(text);
  RankDiffKey key;
  char c1 = 0, c2 = 0, c3 = 0;
  if (!(in >> key.ell >> c1 >> key.s >> c2 >> key.t >> c3 >> key.d) || c1 != ',' || c2 != ',' || c3 != ',' ||
      !in.eof()) {
    throw Error(ErrorCode::InvalidArgument, "expected ell,s,t,d but got '" + text + "'");
  }
  validate(key);
  return key;
}

LaurentSeries rank_diff_oracle(const RankDiffKey& key, Exponent order) {
  validate(key);
  const Exponent pipeline = key.ell * order + key.d;
  const LaurentSeries diff = combinat::nbar_class_series(key.s, key.ell, pipeline) -
                             combinat::nbar_class_series(key.t, key.ell, pipeline);
  return qseries::extract_progression(diff, key.ell, key.d).truncated(order);
}

LaurentSeries rank_diff_formula(const RankDiffKey& key, Exponent order) {
  return evaluate(theorem_entry(key).formula, order);
}

IdentityReport verify_theorem(const TheoremEntry& entry, Exponent order) {
  IdentityReport r =
      compare_series(to_string(entry.key), evaluate(entry.formula, order), rank_diff_oracle(entry.key, order), order);
  if (entry.key.d == 0) r.notes.push_back("constant term uses Nbar(s,m,0) = 0 from the generating function");
  return r;
}

void validate(const FinalFormSpec& spec) {
  const bool ok = (spec.ell == 3 && spec.m == 1) || (spec.ell == 5 && (spec.m == 1 || spec.m == 2));
  if (!ok) throw Error(ErrorCode::InvalidArgument, "final form is tabulated for (3,1), (5,1), (5,2) only");
}

std::vector<int> restricted_indices(const FinalFormSpec& spec) {
  std::vector<int> out;
  for (int a = 1; a <= (spec.ell - 1) / 2; ++a) {
    if ((a - spec.m) % spec.ell != 0 && (a + spec.m) % spec.ell != 0) out.push_back(a);
  }
  return out;
}

Formula s_b_decomposition(const FinalFormSpec& spec) {
  validate(spec);
  const int ell = spec.ell;
  const int m = spec.m;
  Formula f;
  f.add(monomial(q_pow(m * (ell - m), sign_of_power(m))), lambert::sigma_ab(m, 0, ell));
  f.add(ProductSpec{}, lambert::sigma_0b(-2 * m, ell));
  f.add(monomial(y_pow(spec, 2 * m)), lambert::sigma_ab(2 * m, 2 * m, ell));
  for (const int a : restricted_indices(spec)) {
    const SignedMonomial w = a_weight(spec, a);
    f.add(monomial(w), lambert::sigma_ab(m + a, 2 * a, ell));
    f.add(monomial(w * y_pow(spec, -2 * a)), lambert::sigma_ab(m - a, -2 * a, ell));
  }
  return f;
}

Formula bracket_terms(const FinalFormSpec& spec) {
  validate(spec);
  const Exponent base = static_cast<Exponent>(spec.ell) * spec.ell;
  const SignedMonomial minus_one{-1, 0};
  const int m = spec.m;
  // y^c P(2k) P(-1) / (P(k) P(-y^k))
  auto ratio = [&](SignedMonomial c, Exponent k) {
    return monomial(c)
        .big_p(y_pow(spec, 2 * k), base)
        .big_p(minus_one, base)
        .big_p(y_pow(spec, k), base, -1)
        .big_p(y_pow(spec, k).negated(), base, -1);
  };
  Formula f;
  f.add(monomial(q_pow(m * (spec.ell - m), sign_of_power(m))));
  f.add(ratio(y_pow(spec, m), m));
  for (const int a : restricted_indices(spec)) f.add(ratio(a_weight(spec, a) * y_pow(spec, -a), a));
  return f;
}

Formula s_bar_final_form(const FinalFormSpec& spec) {
  validate(spec);
  const Exponent base = static_cast<Exponent>(spec.ell) * spec.ell;
  const int m = spec.m;
  auto y = [&](Exponent k) { return y_pow(spec, k); };
  Formula f;
  f.add(ProductSpec{}.times(Coefficient(-1)), GFuncSpec{m, spec.ell});
  for (const int a : restricted_indices(spec)) {
    f.add(monomial(a_weight(spec, a) * y(-2 * a))
              .poch(1, base, base, 2)
              .big_p(y(a), base)
              .big_p(y(2 * a), base)
              .big_p(y(m).negated(), base)
              .big_p(y(m), base, -1)
              .big_p(y(m + a), base, -1)
              .big_p(y(m - a), base, -1)
              .big_p(y(a).negated(), base, -1));
  }
  for (const Term& t : bracket_terms(spec).terms) f.add(t.product, lambert::sigma_ab(m, 0, spec.ell));
  return f;
}

ProductSpec bracket_closed_form(const FinalFormSpec& spec) {
  validate(spec);
  if (spec.ell == 3) return bracket_shape(3).times(q_pow(2, -1));
  if (spec.m == 2) return bracket_shape(5).times(q_pow(6));
  return bracket_shape(5).times(q_pow(4, -1));
}

namespace {

std::string final_suffix(const FinalFormSpec& spec) {
  return "@ell=" + std::to_string(spec.ell) + ",m=" + std::to_string(spec.m);
}

LaurentSeries final_target(const FinalFormSpec& spec, Exponent order) {
  return lambert::s_bar(spec.ell - 2 * spec.m, spec.ell, order);
}

}  // namespace

IdentityReport verify_s_b(const FinalFormSpec& spec, Exponent order) {
  return compare_series("s(b)" + final_suffix(spec), final_target(spec, order),
                        evaluate(s_b_decomposition(spec), order), order);
}

IdentityReport verify_final(const FinalFormSpec& spec, Exponent order) {
  return compare_series("final" + final_suffix(spec), final_target(spec, order),
                        evaluate(s_bar_final_form(spec), order), order);
}

IdentityReport brackets(const FinalFormSpec& spec, Exponent order) {
  return compare_series("brackets" + final_suffix(spec), evaluate(bracket_terms(spec), order),
                        products::eval_product(bracket_closed_form(spec), order), order);
}

std::string to_string(Pair pair) {
  switch (pair) {
    case Pair::Ell3_01: return "ell3_01";
    case Pair::Ell5_12: return "ell5_12";
    case Pair::Ell5_02: return "ell5_02";
  }
  return "?";
}

RankDiffKey pair_key(Pair pair, int d) {
  switch (pair) {
    case Pair::Ell3_01: return {3, 0, 1, d};
    case Pair::Ell5_12: return {5, 1, 2, d};
    case Pair::Ell5_02: return {5, 0, 2, d};
  }
  return {};
}

LaurentSeries combination_lhs(Pair pair, Exponent order) {
  using lambert::s_bar;
  switch (pair) {
    case Pair::Ell3_01: return s_bar(1, 3, order) * Coefficient(3) + s_bar(3, 3, order);
    case Pair::Ell5_12: return -s_bar(1, 5, order) - s_bar(3, 5, order) * Coefficient(3);
    case Pair::Ell5_02: return s_bar(5, 5, order) + s_bar(1, 5, order) * Coefficient(2) + s_bar(3, 5, order);
  }
  return {};
}

LaurentSeries combination_target(Pair pair, Exponent order) {
  const RankDiffKey key = pair_key(pair, 0);
  const LaurentSeries diff =
      combinat::nbar_class_series(key.s, key.ell, order) - combinat::nbar_class_series(key.t, key.ell, order);
  return (diff * products::eval_product(half_q_ratio(), order)).truncated(order);
}

LaurentSeries combination_from_formulas(Pair pair, Exponent order) {
  const int ell = pair_key(pair, 0).ell;
  const Exponent dissected = (order + ell - 1) / ell;
  LaurentSeries sum = LaurentSeries::zero(order);
  for (int d = 0; d < ell; ++d) {
    sum += qseries::substitute_power(rank_diff_formula(pair_key(pair, d), dissected), ell).shifted(d);
  }
  return (sum * products::eval_product(half_q_ratio(), order)).truncated(order);
}

IdentityReport verify_combination(Pair pair, Exponent order) {
  const char* id = pair == Pair::Ell3_01 ? "gen3too" : pair == Pair::Ell5_12 ? "gen3" : "gen4";
  IdentityReport r = compare_series(id, combination_lhs(pair, order), combination_target(pair, order), order);
  r.notes.push_back("constant term uses Nbar(s,m,0) = 0 from the generating function");
  return r;
}

IdentityReport verify_decomposition(Pair pair, Exponent order) {
  return compare_series("term@" + to_string(pair), combination_from_formulas(pair, order),
                        combination_lhs(pair, order), order);
}

IdentityReport verify_specialization(const std::string& name, Exponent order) {
  const ProductSpec t2 = ProductSpec{}
                             .poch(1, 25, 25, 2)
                             .poch_list(-1, {10, 15}, 25)
                             .poch_list(1, {10, 15}, 25, -1)
                             .poch_list(-1, {5, 20}, 25, -1);
  const ProductSpec t3 = ProductSpec{}
                             .poch(1, 25, 25, 2)
                             .poch_list(-1, {5, 20}, 25)
                             .poch_list(1, {5, 20}, 25, -1)
                             .poch_list(-1, {10, 15}, 25, -1);
  const ProductSpec minus = ProductSpec{}.times(Coefficient(-1));
  Formula rhs;
  LaurentSeries lhs;
  if (name == "s1too") {
    lhs = lambert::s_bar(1, 3, order);
    rhs.add(minus, GFuncSpec{1, 3}).add(bracket_shape(3).times(q_pow(2, -1)), lambert::sigma_ab(1, 0, 3));
  } else if (name == "s1") {
    lhs = lambert::s_bar(1, 5, order);
    rhs.add(minus, GFuncSpec{2, 5})
        .add(bracket_shape(5).times(q_pow(6)), lambert::sigma_ab(2, 0, 5))
        .add(ProductSpec(t2).times(q_pow(2, -1)));
  } else if (name == "s3") {
    lhs = lambert::s_bar(3, 5, order);
    rhs.add(minus, GFuncSpec{1, 5})
        .add(bracket_shape(5).times(q_pow(4, -1)), lambert::sigma_ab(1, 0, 5))
        .add(ProductSpec(t3).times(q_pow(3)));
  } else {
    throw Error(ErrorCode::UnknownIdentity, "no specialization named '" + name + "'");
  }
  return compare_series(name, lhs, evaluate(rhs, order), order);
}

}  // namespace overrank::rankdiff
