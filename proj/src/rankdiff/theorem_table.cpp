#include <algorithm>

#include "core/error.hpp"
#include "rankdiff/rankdiff.hpp"

namespace overrank::rankdiff {

namespace {

using products::q_pow;

ProductSpec scaled(const Coefficient& c, Exponent lead = 0) {
  ProductSpec p;
  p.prefactor = c;
  p.leading_exp = lead;
  return p;
}

// sum (-1)^n q^{base n^2 + base n} / (1 - q^{base n + r})
LambertSpec lam(Exponent r, Exponent base) { return LambertSpec{q_pow(r), q_pow(0), base, false}; }

// (-q^base; q^base)_inf / (q^base; q^base)_inf
ProductSpec minus_over_plus(ProductSpec p, Exponent base) {
  return p.poch(-1, base, base).poch(1, base, base, -1);
}

std::vector<TheoremEntry> build() {
  std::vector<TheoremEntry> t;
  auto entry = [&](int ell, int s, int tt, int d, Formula f) {
    const std::string st = std::to_string(s) + std::to_string(tt);
    t.push_back({{ell, s, tt, d}, "R_{" + st + "}(" + std::to_string(d) + ")", std::move(f)});
  };

  // ell = 3
  entry(3, 0, 1, 0,
        Formula{}.plus(-1).add(scaled(1).poch(1, 3, 3, 2).poch(-1, 1, 1).poch(1, 1, 1, -1).poch(-1, 3, 3, -2)));
  entry(3, 0, 1, 1, Formula{}.add(scaled(2).poch(1, 3, 3).poch(1, 6, 6).poch(1, 1, 1, -1)));
  entry(3, 0, 1, 2,
        Formula{}
            .add(scaled(4).poch(-1, 3, 3, 2).poch(1, 6, 6, 2).poch(1, 2, 2, -1))
            .add(minus_over_plus(scaled(-6), 3), lam(1, 3)));

  // ell = 5, (s, t) = (1, 2)
  entry(5, 1, 2, 0, Formula{}.add(scaled(2, 1).poch(1, 10, 10).poch_list(1, {3, 4, 6, 7}, 10, -1)));
  entry(5, 1, 2, 1, Formula{}.add(minus_over_plus(scaled(-2, 1), 5), lam(2, 5)));
  entry(5, 1, 2, 2, Formula{}.add(scaled(2).poch(1, 10, 10).poch_list(1, {1, 4}, 5, -1)));
  entry(5, 1, 2, 3, Formula{}.add(scaled(-2).poch(1, 10, 10).poch_list(1, {2, 3}, 5, -1)));
  entry(5, 1, 2, 4,
        Formula{}
            .add(minus_over_plus(scaled(6), 5), lam(1, 5))
            .add(scaled(-4).poch_list(1, {2, 8, 10}, 10).poch_list(1, {4, 6}, 10, -2).poch_list(1, {1, 9}, 10, -1)));

  // ell = 5, (s, t) = (0, 2)
  entry(5, 0, 2, 0,
        Formula{}.plus(-1).add(
            scaled(1).poch_list(-1, {2, 3}, 5).poch(1, 5, 5).poch_list(1, {2, 3}, 5, -1).poch(-1, 5, 5, -1)));
  entry(5, 0, 2, 1,
        Formula{}
            .add(scaled(2).poch_list(1, {4, 6, 10}, 10).poch_list(1, {2, 8}, 10, -2).poch_list(1, {3, 7}, 10, -1))
            .add(minus_over_plus(scaled(4, 1), 5), lam(2, 5)));
  entry(5, 0, 2, 2, Formula{});
  entry(5, 0, 2, 3, Formula{}.add(scaled(2).poch(1, 10, 10).poch_list(1, {2, 3}, 5, -1)));
  entry(5, 0, 2, 4,
        Formula{}
            .add(scaled(2).poch_list(1, {2, 8, 10}, 10).poch_list(1, {4, 6}, 10, -2).poch_list(1, {1, 9}, 10, -1))
            .add(minus_over_plus(scaled(-2), 5), lam(1, 5)));
  return t;
}

}  // namespace

void validate(const RankDiffKey& key) {
  const bool pair_ok = (key.ell == 3 && key.s == 0 && key.t == 1) ||
                       (key.ell == 5 && ((key.s == 1 && key.t == 2) || (key.s == 0 && key.t == 2)));
  if (!pair_ok || key.d < 0 || key.d >= key.ell) {
    throw Error(ErrorCode::InvalidArgument, "no closed form for " + std::to_string(key.ell) + "," +
                                                std::to_string(key.s) + "," + std::to_string(key.t) + "," +
                                                std::to_string(key.d));
  }
}

const std::vector<TheoremEntry>& theorem_table() {
  static const std::vector<TheoremEntry> table = build();
  return table;
}

const TheoremEntry& theorem_entry(const RankDiffKey& key) {
  validate(key);
  const auto& table = theorem_table();
  const auto it = std::find_if(table.begin(), table.end(), [&](const TheoremEntry& e) { return e.key == key; });
  return *it;
}

}  // namespace overrank::rankdiff
