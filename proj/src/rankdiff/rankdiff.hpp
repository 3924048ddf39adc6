#pragma once

#include <string>
#include <vector>

#include "core/identity_report.hpp"
#include "rankdiff/formula.hpp"

namespace overrank::rankdiff {

/// R_st(d) = sum_n (Nbar(s, ell, ell n + d) - Nbar(t, ell, ell n + d)) q^n.
/// Valid keys: ell = 3 with (s,t) = (0,1); ell = 5 with (1,2) or (0,2).
struct RankDiffKey {
  int ell = 3;
  int s = 0;
  int t = 1;
  int d = 0;

  friend bool operator==(const RankDiffKey&, const RankDiffKey&) = default;
};

/// Throws InvalidArgument for keys outside the table.
void validate(const RankDiffKey& key);

/// "thm3.R01.d2" style id.
std::string to_string(const RankDiffKey& key);

/// Parses "ell,s,t,d".
RankDiffKey parse_key(const std::string& text);

/// One closed form for R_st(d), as a reviewable list of terms.
struct TheoremEntry {
  RankDiffKey key;
  std::string anchor;
  Formula formula;
};

/// All 13 closed forms, ordered by (ell, s, t, d).
const std::vector<TheoremEntry>& theorem_table();
const TheoremEntry& theorem_entry(const RankDiffKey& key);

/// Dissection of the class generating functions; independent of the closed forms.
LaurentSeries rank_diff_oracle(const RankDiffKey& key, Exponent order);

/// The closed form evaluated in the dissected variable.
LaurentSeries rank_diff_formula(const RankDiffKey& key, Exponent order);

IdentityReport verify_theorem(const TheoremEntry& entry, Exponent order);

/// (ell, m) with the a-sum over 1..(ell-1)/2 omitting a = +-m mod ell.
struct FinalFormSpec {
  int ell = 3;
  int m = 1;
};

void validate(const FinalFormSpec& spec);

/// The a-values of the restricted sum.
std::vector<int> restricted_indices(const FinalFormSpec& spec);

/// S(ell - 2m) split by the residue of n into Sigma(a, b) pieces.
Formula s_b_decomposition(const FinalFormSpec& spec);

/// -g(m) + product terms + Sigma(m, 0) * bracket.
Formula s_bar_final_form(const FinalFormSpec& spec);

/// The coefficient of Sigma(m, 0) in the final form, as a sum of products.
Formula bracket_terms(const FinalFormSpec& spec);

/// Closed product for the bracket.
ProductSpec bracket_closed_form(const FinalFormSpec& spec);

IdentityReport verify_s_b(const FinalFormSpec& spec, Exponent order);
IdentityReport verify_final(const FinalFormSpec& spec, Exponent order);
IdentityReport brackets(const FinalFormSpec& spec, Exponent order);

/// Rank-difference pairs: (0,1) mod 3, (1,2) mod 5, (0,2) mod 5.
enum class Pair { Ell3_01, Ell5_12, Ell5_02 };

std::string to_string(Pair pair);
RankDiffKey pair_key(Pair pair, int d);

/// The S-combination equal to sum_n (Nbar(s,ell,n) - Nbar(t,ell,n)) q^n (q)_inf / (2(-q)_inf).
LaurentSeries combination_lhs(Pair pair, Exponent order);

/// The same quantity built from the class generating functions.
LaurentSeries combination_target(Pair pair, Exponent order);

/// The same quantity reassembled from the closed forms: sum_d R_st(d)(q^ell) q^d, times (q)_inf / (2(-q)_inf).
LaurentSeries combination_from_formulas(Pair pair, Exponent order);

IdentityReport verify_combination(Pair pair, Exponent order);
IdentityReport verify_decomposition(Pair pair, Exponent order);

/// Named specializations of the final form: "s1too" (ell 3), "s1", "s3" (ell 5).
IdentityReport verify_specialization(const std::string& name, Exponent order);

/// A two-sided identity stored as data.
struct IdentityForms {
  std::string id;
  std::string anchor;
  Formula lhs;
  Formula rhs;
};

/// check0 .. check9 followed by the g-forms, all in base q^50 / q^25 (q^9 for ell 3).
const std::vector<IdentityForms>& coefficient_identities();
const IdentityForms& coefficient_identity(const std::string& id);

IdentityReport verify_forms(const IdentityForms& forms, Exponent order);

/// check0 .. check9 by index.
IdentityReport verify_check(int idx, Exponent order);

}  // namespace overrank::rankdiff
