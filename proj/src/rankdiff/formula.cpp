#include "rankdiff/formula.hpp"

#include "core/error.hpp"

namespace overrank::rankdiff {

Formula& Formula::add(ProductSpec product) {
  terms.push_back({std::move(product), std::monostate{}});
  return *this;
}

Formula& Formula::add(ProductSpec product, LambertSpec sum) {
  terms.push_back({std::move(product), sum});
  return *this;
}

Formula& Formula::add(ProductSpec product, GFuncSpec g) {
  terms.push_back({std::move(product), g});
  return *this;
}

Formula& Formula::plus(const Coefficient& c) {
  constant += c;
  return *this;
}

namespace {

struct TermEvaluator {
  const ProductSpec& product;
  Exponent order;

  LaurentSeries operator()(std::monostate) const { return products::eval_product(product, order); }
  LaurentSeries operator()(const LambertSpec& sum) const { return lambert::times_sigma(product, sum, order); }
  LaurentSeries operator()(const GFuncSpec& g) const {
    // g(a) is a power series, so the product only needs `order`.
    const Exponent vp = products::valuation(product);
    if (vp >= order) return LaurentSeries::zero(order);
    return (products::eval_product(product, order) * lambert::g_func(g, order - vp)).truncated(order);
  }
};

}  // namespace

LaurentSeries evaluate(const Formula& formula, Exponent order) {
  LaurentSeries total = LaurentSeries::constant(formula.constant, order);
  for (const Term& term : formula.terms) total += std::visit(TermEvaluator{term.product, order}, term.factor);
  return total;
}

Formula mutated(Formula formula, const Mutation& mutation) {
  if (mutation.term >= formula.terms.size()) throw Error(ErrorCode::InvalidArgument, "mutation term out of range");
  ProductSpec& spec = formula.terms[mutation.term].product;
  switch (mutation.kind) {
    case Mutation::Kind::FlipPrefactorSign:
      spec.prefactor = -spec.prefactor;
      return formula;
    case Mutation::Kind::BumpLeadingExponent:
      spec.leading_exp += 1;
      return formula;
    case Mutation::Kind::FlipFactorSign:
    case Mutation::Kind::BumpFactorExponent:
      break;
  }
  if (mutation.factor >= spec.factors.size()) throw Error(ErrorCode::InvalidArgument, "mutation factor out of range");
  auto& arg = spec.factors[mutation.factor].arg;
  if (mutation.kind == Mutation::Kind::FlipFactorSign) {
    arg = arg.negated();
  } else {
    arg.exp += 1;
  }
  return formula;
}

std::string to_string(Mutation::Kind kind) {
  switch (kind) {
    case Mutation::Kind::FlipFactorSign: return "flip-factor-sign";
    case Mutation::Kind::BumpFactorExponent: return "bump-factor-exponent";
    case Mutation::Kind::FlipPrefactorSign: return "flip-prefactor-sign";
    case Mutation::Kind::BumpLeadingExponent: return "bump-leading-exponent";
  }
  return "?";
}

}  // namespace overrank::rankdiff
