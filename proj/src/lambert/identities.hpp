#pragma once

#include "core/identity_report.hpp"
#include "lambert/lambert.hpp"

namespace overrank::lambert {

/// S(ell) = 1/2 - (q)_inf / (2(-q)_inf).
IdentityReport verify_lemma21(Exponent ell, Exponent order);

/// S(b) = -S(ell - b).
IdentityReport verify_rels(Exponent b, Exponent ell, Exponent order);

/// Sigma(z/zeta, zeta^-2) + zeta^2 Sigma(z zeta, zeta^2) against a Sigma(z, 1)
/// term plus a product, all at q -> q^base.
IdentityReport verify_lemma41(SignedMonomial zeta, SignedMonomial z, Exponent base, Exponent order);

/// The index form with zeta = y^a, z = y^b, q -> y^ell, rearranged to == 0.
IdentityReport verify_lem1(Exponent a, Exponent b, Exponent ell, Exponent order);

enum class Lemma42Part { Part1, Part2 };

/// Part1: 2g(z) - g(z^2) + 1/2 as a sum of two products.
/// Part2: g(z) + g(q/z) = 1.
IdentityReport verify_lemma42(Lemma42Part part, SignedMonomial z, Exponent base, Exponent order);

/// g(z) - g(zq) = -2.
IdentityReport verify_constant(SignedMonomial z, Exponent base, Exponent order);

/// g(1/z) + g(z) = -1.
IdentityReport verify_gees(SignedMonomial z, Exponent base, Exponent order);

/// 2g(a) - g(2a) + 1/2 in the P(a), P(0) notation.
IdentityReport verify_g1(Exponent a, Exponent ell, Exponent order);

/// g(a) + g(ell - a) = 1.
IdentityReport verify_g2(Exponent a, Exponent ell, Exponent order);

/// z^2 Sigma(z, zeta) + zeta Sigma(zq, zeta) = -sum (-1)^n zeta^n q^{n(n-1)} (1 + z q^n).
IdentityReport verify_sigma_shift(SignedMonomial z, SignedMonomial zeta, Exponent base, Exponent order);

/// z^2 Sigma(z, 1) + Sigma(zq, 1) = -z (q)_inf / (-q)_inf.
IdentityReport verify_step(SignedMonomial z, Exponent base, Exponent order);

/// Sigma(z, 1) + z^-2 Sigma(1/z, 1) = -z^-1 sum (-1)^n q^{n^2}.
IdentityReport verify_short(SignedMonomial z, Exponent base, Exponent order);

/// Expansion with the n-range doubled agrees with the default range.
IdentityReport verify_range_doubling(const LambertSpec& spec, Exponent order);

}  // namespace overrank::lambert
