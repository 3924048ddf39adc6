#pragma once

#include <string>
#include <variant>
#include <vector>

#include "lambert/lambert.hpp"

namespace overrank::rankdiff {

using lambert::GFuncSpec;
using lambert::LambertSpec;
using products::Coefficient;
using products::Exponent;
using products::LaurentSeries;
using products::ProductSpec;
using products::SignedMonomial;

/// A product optionally multiplied by a Lambert sum or by g(a).
struct Term {
  ProductSpec product;
  std::variant<std::monostate, LambertSpec, GFuncSpec> factor;
};

/// constant + sum of terms.
struct Formula {
  std::vector<Term> terms;
  Coefficient constant{0};

  Formula& add(ProductSpec product);
  Formula& add(ProductSpec product, LambertSpec sum);
  Formula& add(ProductSpec product, GFuncSpec g);
  Formula& plus(const Coefficient& c);
};

/// Exact to `order`.
LaurentSeries evaluate(const Formula& formula, Exponent order);

/// A single transcription error, used to check that verification notices it.
struct Mutation {
  enum class Kind { FlipFactorSign, BumpFactorExponent, FlipPrefactorSign, BumpLeadingExponent };
  Kind kind = Kind::FlipFactorSign;
  std::size_t term = 0;
  std::size_t factor = 0;
};

/// Throws InvalidArgument when the mutation does not address an existing slot.
Formula mutated(Formula formula, const Mutation& mutation);

std::string to_string(Mutation::Kind kind);

}  // namespace overrank::rankdiff
