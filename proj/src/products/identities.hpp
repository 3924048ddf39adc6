#pragma once

#include <string>

#include "core/identity_report.hpp"
#include "products/products.hpp"

namespace overrank::products {

/// Compact monomial form used inside identity ids: "q5", "-q10", "1".
std::string id_string(SignedMonomial m);

enum class Lemma31Variant { Eq1, Eq2 };

/// 3- and 5-dissections of (q)_inf/(-q)_inf.
IdentityReport verify_lemma31(Lemma31Variant variant, Exponent order);

enum class Hickerson { Lemma32, Lemma33, Lemma34, Lemma35 };

std::string to_string(Hickerson which);

/// Two-term (Lemma32..34) or three-term (Lemma35) product identities with
/// P(., q) against P(., q^2), instantiated at x, z and q -> q^base.
IdentityReport verify_hickerson(Hickerson which, SignedMonomial x, SignedMonomial z, Exponent base,
                                Exponent order);

/// P^2(z)P(zeta t)P(zeta/t) - P^2(zeta)P(zt)P(z/t) + (zeta/t)P^2(t)P(z zeta)P(z/zeta) = 0.
IdentityReport verify_addition(SignedMonomial z, SignedMonomial zeta, SignedMonomial t, Exponent base,
                               Exponent order);

/// P(ell - a) = P(a) with P(a) = P(y^a, y^ell), y = q^ell.
IdentityReport verify_p_reflection(Exponent a, Exponent ell, Exponent order);

/// P(-a) = -y^-a P(a), evaluating P(-a) by direct Laurent expansion.
IdentityReport verify_p_negation(Exponent a, Exponent ell, Exponent order);

/// P(z^-1 q, q) = P(z, q), both sides expanded directly.
IdentityReport verify_p1(SignedMonomial z, Exponent base, Exponent order);

/// P(zq, q) = -z^-1 P(z, q), both sides expanded directly.
IdentityReport verify_p2(SignedMonomial z, Exponent base, Exponent order);

/// sum z^n q^{base n^2} = (-zq, -q/z, q^2; q^2)_inf with q -> q^base.
IdentityReport verify_triple_product(SignedMonomial z, Exponent base, Exponent order);

}  // namespace overrank::products
