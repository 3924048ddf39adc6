#include "combinat/combinat.hpp"
#include "core/error.hpp"
#include "rankdiff/rankdiff.hpp"
#include "support.hpp"

using namespace overrank;
using namespace overrank::rankdiff;
using testing::first_difference;

namespace {

constexpr RankDiffKey kAllKeys[] = {{3, 0, 1, 0}, {3, 0, 1, 1}, {3, 0, 1, 2}, {5, 1, 2, 0}, {5, 1, 2, 1},
                                    {5, 1, 2, 2}, {5, 1, 2, 3}, {5, 1, 2, 4}, {5, 0, 2, 0}, {5, 0, 2, 1},
                                    {5, 0, 2, 2}, {5, 0, 2, 3}, {5, 0, 2, 4}};

// Coefficient of q^n in R_st(d), straight from the enumeration.
std::int64_t enumerated(const RankDiffKey& k, int n) {
  const int N = k.ell * n + k.d;
  return combinat::nbar_class(k.s, k.ell, N) - combinat::nbar_class(k.t, k.ell, N);
}

}  // namespace

TEST_SUITE("rankdiff") {
  TEST_CASE("keys") {
    CHECK(to_string(RankDiffKey{3, 0, 1, 2}) == "thm3.R01.d2");
    CHECK(to_string(RankDiffKey{5, 0, 2, 2}) == "thm5.R02.d2");
    CHECK(parse_key("5,1,2,4") == RankDiffKey{5, 1, 2, 4});
    CHECK_THROWS_AS(validate(RankDiffKey{5, 0, 1, 0}), Error);
    CHECK_THROWS_AS(validate(RankDiffKey{3, 0, 1, 3}), Error);
    CHECK(theorem_table().size() == 13);
  }

  TEST_CASE("dissected oracle: small coefficients") {
    CHECK(rank_diff_oracle({3, 0, 1, 1}, 5).coeff(0) == 2);
    CHECK(rank_diff_oracle({3, 0, 1, 2}, 5).coeff(0) == -2);
    CHECK(rank_diff_oracle({5, 0, 2, 2}, 40).is_zero());
  }

  TEST_CASE("dissected oracle agrees with enumeration for n >= 1") {
    for (const RankDiffKey& k : kAllKeys) {
      const LaurentSeries s = rank_diff_oracle(k, 11);
      for (int n = 0; k.ell * n + k.d <= 30; ++n) {
        if (k.ell * n + k.d == 0) continue;
        INFO(to_string(k) << " n=" << n);
        CHECK(s.coeff(n) == static_cast<long>(enumerated(k, n)));
      }
    }
    for (int n = 0; 5 * n + 2 <= 30; ++n) CHECK(enumerated({5, 0, 2, 2}, n) == 0);
  }

  TEST_CASE("closed forms: small coefficients") {
    CHECK(rank_diff_formula({3, 0, 1, 1}, 5).coeff(0) == 2);
    CHECK(rank_diff_formula({3, 0, 1, 2}, 5).coeff(0) == -2);
    CHECK(rank_diff_formula({5, 0, 2, 2}, 40).is_zero());
  }

  TEST_CASE("every closed form equals the oracle to order 40") {
    for (const TheoremEntry& e : theorem_table()) {
      INFO(to_string(e.key));
      const LaurentSeries f = rank_diff_formula(e.key, 40);
      CHECK(f.all_integer());
      CHECK(first_difference(f, rank_diff_oracle(e.key, 40), 40) == 40);
      CHECK(verify_theorem(e, 40).pass);
    }
  }

  TEST_CASE("d = 0 reports carry the n = 0 convention note") {
    const IdentityReport r = verify_theorem(theorem_entry({3, 0, 1, 0}), 20);
    CHECK(r.pass);
    CHECK_FALSE(r.notes.empty());
  }

  TEST_CASE("restricted index sets") {
    CHECK(restricted_indices({3, 1}).empty());
    CHECK(restricted_indices({5, 2}) == std::vector<int>{1});
    CHECK(restricted_indices({5, 1}) == std::vector<int>{2});
    CHECK_THROWS_AS(validate(FinalFormSpec{5, 5}), Error);
  }

  TEST_CASE("S(ell - 2m): residue split, final form and brackets") {
    for (const FinalFormSpec f : {FinalFormSpec{3, 1}, FinalFormSpec{5, 2}, FinalFormSpec{5, 1}}) {
      INFO("ell=" << f.ell << " m=" << f.m);
      const LaurentSeries target = lambert::s_bar(f.ell - 2 * f.m, f.ell, 150);
      CHECK(first_difference(evaluate(s_b_decomposition(f), 150), target, 150) == 150);
      CHECK(first_difference(evaluate(s_bar_final_form(f), 150), target, 150) == 150);
      CHECK(verify_s_b(f, 150).pass);
      CHECK(verify_final(f, 150).pass);
      CHECK(brackets(f, f.ell == 3 ? 200 : 300).pass);
    }
    CHECK(verify_specialization("s1too", 150).pass);
    CHECK(verify_specialization("s1", 150).pass);
    CHECK(verify_specialization("s3", 150).pass);
  }

  TEST_CASE("bracket closed forms: leading terms") {
    struct Lead {
      FinalFormSpec f;
      Exponent exp;
      int sign;
    };
    for (const Lead l : {Lead{{3, 1}, 2, -1}, Lead{{5, 2}, 6, 1}, Lead{{5, 1}, 4, -1}}) {
      const LaurentSeries s = products::eval_product(bracket_closed_form(l.f), 30);
      CHECK(s.min_exp() == l.exp);
      CHECK(s.coeff(l.exp) == l.sign);
      CHECK(first_difference(evaluate(bracket_terms(l.f), 30), s, 30) == 30);
    }
  }

  TEST_CASE("rank-difference combinations of S") {
    for (const Pair p : {Pair::Ell3_01, Pair::Ell5_12, Pair::Ell5_02}) {
      INFO(to_string(p));
      const LaurentSeries target = combination_target(p, 100);
      CHECK(first_difference(combination_lhs(p, 100), target, 100) == 100);
      CHECK(first_difference(combination_from_formulas(p, 100), target, 100) == 100);
      CHECK(verify_combination(p, 100).pass);
      CHECK(verify_decomposition(p, 100).pass);
    }
  }

  TEST_CASE("with -S(5) the (0,2) mod 5 combination fails at q^1") {
    using lambert::s_bar;
    const LaurentSeries minus_variant = -s_bar(5, 5, 40) + Coefficient(2) * s_bar(1, 5, 40) + s_bar(3, 5, 40);
    CHECK(first_difference(minus_variant, combination_target(Pair::Ell5_02, 40), 40) == 1);
  }

  TEST_CASE("coefficient identities") {
    CHECK(coefficient_identities().size() >= 10);
    for (int i = 0; i < 10; ++i) {
      INFO("check" << i);
      CHECK(verify_check(i, 200).pass);
    }
    CHECK(verify_check(1, 400).pass);
    CHECK(verify_check(0, 400).pass);
    CHECK(verify_check(9, 400).pass);
    for (const IdentityForms& f : coefficient_identities()) {
      INFO(f.id);
      CHECK(verify_forms(f, 150).pass);
    }
    CHECK_THROWS_AS(coefficient_identity("check10"), Error);
  }

  TEST_CASE("a mutated transcription is caught") {
    const TheoremEntry& e = theorem_entry({5, 1, 2, 0});
    TheoremEntry broken = e;
    broken.formula = mutated(e.formula, {Mutation::Kind::FlipPrefactorSign, 0, 0});
    const IdentityReport r = verify_theorem(broken, 40);
    CHECK_FALSE(r.pass);
    CHECK(r.first_mismatch.has_value());
    CHECK_THROWS_AS(mutated(e.formula, {Mutation::Kind::FlipFactorSign, 99, 0}), Error);
  }
}
