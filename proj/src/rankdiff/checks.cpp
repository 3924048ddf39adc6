#include <algorithm>

#include "core/error.hpp"
#include "rankdiff/rankdiff.hpp"

namespace overrank::rankdiff {

namespace {

using Rs = std::initializer_list<Exponent>;

// Terse product builder: p50({..}) is (q^r1, q^r2, ...; q^50)_inf, m25 uses -q^r.
struct X {
  ProductSpec spec;

  explicit X(const Coefficient& pre = 1, Exponent lead = 0) {
    spec.prefactor = pre;
    spec.leading_exp = lead;
  }
  X& p(Rs rs, Exponent mod, int k = 1) {
    spec.poch_list(1, rs, mod, k);
    return *this;
  }
  X& m(Rs rs, Exponent mod, int k = 1) {
    spec.poch_list(-1, rs, mod, k);
    return *this;
  }
  X& p50(Rs rs, int k = 1) { return p(rs, 50, k); }
  X& p25(Rs rs, int k = 1) { return p(rs, 25, k); }
  X& m25(Rs rs, int k = 1) { return m(rs, 25, k); }
  operator ProductSpec() const { return spec; }
};

Formula sum(std::initializer_list<ProductSpec> terms) {
  Formula f;
  for (const ProductSpec& t : terms) f.add(t);
  return f;
}

Formula g_combination(std::initializer_list<std::pair<int, int>> weighted, int ell, const Coefficient& constant = 0) {
  Formula f;
  for (const auto& [w, a] : weighted) f.add(ProductSpec{}.times(Coefficient(w)), GFuncSpec{a, ell});
  return f.plus(constant);
}

const Coefficient kHalf(1, 2);

std::vector<IdentityForms> build() {
  std::vector<IdentityForms> t;
  auto add = [&](std::string id, Formula lhs, Formula rhs) {
    std::string anchor = id;
    t.push_back({std::move(id), std::move(anchor), std::move(lhs), std::move(rhs)});
  };

  add("check0", g_combination({{1, 2}, {3, 1}}, 5),
      sum({X(1, 5).p25({25}, 2).p50({15, 20, 30, 35}, -1),
           X(4, 5).p50({10, 15, 35, 40}).p50({50}, 2).p50({20, 30}, -2).p50({5, 45}, -1)}));
  add("check1", sum({X(1, 5).p50({50}).p50({15, 35, 50}).p50({15, 20, 30, 35}, -1)}),
      sum({X(1, 5).p50({50}).p50({5, 45, 50}).p25({5, 20}, -1)}));
  add("check2", sum({X().p25({25}, 2).m25({10, 15}).p25({10, 15}, -1).m25({5, 20}, -1)}),
      sum({X().p25({25}, 2).p25({5, 20}, -1), X(-2, 5).p50({50}, 2).p50({5, 45}).p25({10, 15}, -1)}));
  add("check3", sum({X(3).p25({25}, 2).m25({5, 20}).p25({5, 20}, -1).m25({10, 15}, -1)}),
      sum({X().p25({25}, 2).p25({10, 15}, -1), X(2).p50({50}, 2).p50({15, 35}).p25({5, 20}, -1),
           X(4, 5).p50({10, 40}).p50({50}, 2).p50({20, 30}, -2)}));
  add("check4", sum({X().p50({10, 40, 50}).p25({25}).p50({20, 30}, -2).p50({5, 45}, -1).m25({25}, -1)}),
      sum({X().p50({50}, 2).p50({15, 35}).p25({10, 15}, -1),
           X(1, 5).p50({50}, 2).p50({5, 45}).p50({15, 20, 30, 35}, -1)}));
  {
    Formula rhs = sum({X(kHalf).m25({10, 15}).p25({25}, 2).p25({10, 15}, -1).m25({25}, -2),
                       X(-2, 5).p50({10, 40, 15, 35}).p50({50}, 2).p50({20, 30}, -2).p50({5, 45}, -1),
                       X(2, 5).p50({20, 30, 5, 45}).p50({50}, 2).p50({10, 40}, -2).p50({15, 35}, -1)});
    add("check5", g_combination({{-2, 2}, {-1, 1}}, 5, kHalf), std::move(rhs));
  }
  add("check6", sum({X().p50({20, 30, 50}).p25({25}).p50({10, 40}, -2).p50({15, 35}, -1).m25({25}, -1)}),
      sum({X().m25({10, 15}).p25({25}).p50({15, 35, 50}).p25({10, 15}, -1).m25({25}, -1)}));
  add("check7", sum({X().p25({25}, 2).m25({10, 15}).m25({5, 20}, -1).p25({10, 15}, -1)}),
      sum({X().p50({50}, 2).p50({20, 30}).p50({10, 40}, -2),
           X(-1, 5).p50({50}, 2).p50({5, 45}).p25({10, 15}, -1)}));
  add("check8", sum({X().p25({25}, 2).m25({5, 20}).m25({10, 15}, -1).p25({5, 20}, -1)}),
      sum({X().p25({25}, 2).p25({10, 15}, -1), X(2, 5).p50({50}, 2).p50({10, 40}).p50({20, 30}, -2)}));
  add("check9",
      sum({X().p50({10, 40, 50}).p25({25}).p50({20, 30}, -2).p50({5, 45}, -1).m25({25}, -1),
           X().m25({10, 15}).p25({25}).p50({5, 45, 50}).p25({10, 15}, -1).m25({25}, -1)}),
      sum({X(2).p50({50}, 2).p50({15, 35}).p25({10, 15}, -1)}));

  // g-forms: the same g-combinations reduced through the duplication identity.
  add("check0.g1form", g_combination({{3, 1}, {1, 2}}, 5),
      sum({X(kHalf).m25({5, 20}).p25({25}, 2).p25({5, 20}, -1).m25({25}, -2),
           X(4, 5).p50({15, 35, 50, 50}).p50({10, 25, 25, 40}, -1),
           X(-kHalf).m25({10, 15}).p25({25}, 2).p25({10, 15}, -1).m25({25}, -2),
           X(4, 10).p50({5, 45, 50, 50}).p50({20, 25, 25, 30}, -1)}));
  add("check5.g1form", g_combination({{-2, 2}, {-1, 1}}, 5, kHalf),
      sum({X(kHalf).m25({10, 15}).p25({25}, 2).p25({10, 15}, -1).m25({25}, -2),
           X(-4, 10).p50({5, 45}).p50({50}, 2).p50({20, 30}, -1).p50({25}, -2)}));
  add("thm3.const", g_combination({{-3, 1}}, 3, kHalf),
      sum({X(kHalf).p({9}, 9, 3).m({3}, 3).p({3}, 3, -1).m({9}, 9, -3),
           X(-4, 3).m({9}, 9, 3).p({18}, 18, 3).p({6}, 6, -1).m({3}, 3, -1)}));

  std::sort(t.begin(), t.end(), [](const IdentityForms& a, const IdentityForms& b) { return a.id < b.id; });
  return t;
}

}  // namespace

const std::vector<IdentityForms>& coefficient_identities() {
  static const std::vector<IdentityForms> table = build();
  return table;
}

const IdentityForms& coefficient_identity(const std::string& id) {
  const auto& table = coefficient_identities();
  const auto it = std::find_if(table.begin(), table.end(), [&](const IdentityForms& f) { return f.id == id; });
  if (it == table.end()) throw Error(ErrorCode::UnknownIdentity, "no coefficient identity '" + id + "'");
  return *it;
}

IdentityReport verify_forms(const IdentityForms& forms, Exponent order) {
  return compare_series(forms.id, evaluate(forms.lhs, order), evaluate(forms.rhs, order), order);
}

IdentityReport verify_check(int idx, Exponent order) {
  if (idx < 0 || idx > 9) throw Error(ErrorCode::InvalidArgument, "check index must be in 0..9");
  return verify_forms(coefficient_identity("check" + std::to_string(idx)), order);
}

}  // namespace overrank::rankdiff
