#include <random>

#include "combinat/combinat.hpp"
#include "lambert/identities.hpp"
#include "products/identities.hpp"
#include "rankdiff/rankdiff.hpp"
#include "registry/registry.hpp"

namespace overrank::registry {

namespace {

using lambert::LambertSpec;
using products::Hickerson;
using products::q_pow;
using products::SignedMonomial;
using qseries::Coefficient;
using qseries::LaurentSeries;

using Runner = std::function<IdentityReport(Exponent)>;

class Catalogue {
 public:
  explicit Catalogue(const RegistryOptions& options) : options_(options) {}

  void add(std::string id, std::string anchor, Exponent order, Tier tier, Runner run) {
    out_.push_back({std::move(id), std::move(anchor), order, tier, std::move(run)});
  }

  const RegistryOptions& options() const { return options_; }

  std::vector<IdentityEntry> take() { return std::move(out_); }

 private:
  const RegistryOptions& options_;
  std::vector<IdentityEntry> out_;
};

std::string two_digits(int k) { return (k < 10 ? "0" : "") + std::to_string(k); }

// Independent stream per sampled family, so adding a family never shifts another's draws.
class Sampler {
 public:
  Sampler(std::uint64_t seed, std::uint64_t family) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(family)};
    rng_.seed(seq);
  }

  Exponent uniform(Exponent lo, Exponent hi) { return std::uniform_int_distribution<Exponent>(lo, hi)(rng_); }
  int sign() { return uniform(0, 1) == 0 ? 1 : -1; }
  SignedMonomial monomial(Exponent lo, Exponent hi) {
    const Exponent e = uniform(lo, hi);
    return q_pow(e, sign());
  }

 private:
  std::mt19937_64 rng_;
};

std::string seed_note(std::uint64_t seed, const std::string& instance) {
  return "seed=" + std::to_string(seed) + " " + instance;
}

Runner sampled(std::uint64_t seed, std::function<IdentityReport(Exponent)> check) {
  return [seed, check = std::move(check)](Exponent order) {
    IdentityReport r = check(order);
    r.notes.insert(r.notes.begin(), seed_note(seed, r.id));
    return r;
  };
}

rankdiff::Formula corrupt_if(const RegistryOptions& options, const std::string& id, rankdiff::Formula f) {
  if (options.corruption && options.corruption->id == id) return rankdiff::mutated(std::move(f), options.corruption->mutation);
  return f;
}

// Mutation term indices run over the left side, then the right side.
rankdiff::IdentityForms corrupt_if(const RegistryOptions& options, rankdiff::IdentityForms forms) {
  if (!options.corruption || options.corruption->id != forms.id) return forms;
  rankdiff::Mutation m = options.corruption->mutation;
  if (m.term < forms.lhs.terms.size()) {
    forms.lhs = rankdiff::mutated(std::move(forms.lhs), m);
  } else {
    m.term -= forms.lhs.terms.size();
    forms.rhs = rankdiff::mutated(std::move(forms.rhs), m);
  }
  return forms;
}

void add_theorems(Catalogue& c) {
  for (const rankdiff::TheoremEntry& entry : rankdiff::theorem_table()) {
    const std::string id = rankdiff::to_string(entry.key);
    rankdiff::TheoremEntry copy = entry;
    copy.formula = corrupt_if(c.options(), id, copy.formula);
    std::string anchor = "r_{" + std::to_string(entry.key.s) + std::to_string(entry.key.t) + "}(" +
                         std::to_string(entry.key.d) + ")";
    c.add(id, anchor, 40, Tier::Oracle, [copy](Exponent order) { return rankdiff::verify_theorem(copy, order); });
  }
}

void add_coefficient_identities(Catalogue& c) {
  for (const rankdiff::IdentityForms& forms : rankdiff::coefficient_identities()) {
    const rankdiff::IdentityForms copy = corrupt_if(c.options(), forms);
    const bool is_check = forms.id.size() == 6;
    const std::string anchor = is_check ? forms.id : forms.id == "thm3.const" ? "g2" : "g1";
    c.add(forms.id, anchor, is_check ? 400 : 300, Tier::Combination,
          [copy](Exponent order) { return rankdiff::verify_forms(copy, order); });
  }
}

void add_final_forms(Catalogue& c) {
  for (const rankdiff::FinalFormSpec spec : {rankdiff::FinalFormSpec{3, 1}, {5, 1}, {5, 2}}) {
    const std::string at = "@ell=" + std::to_string(spec.ell) + ",m=" + std::to_string(spec.m);
    c.add("s(b)" + at, "s(b)", 200, Tier::Combination, [spec](Exponent o) { return rankdiff::verify_s_b(spec, o); });
    c.add("final" + at, "final", 200, Tier::Combination,
          [spec](Exponent o) { return rankdiff::verify_final(spec, o); });
    c.add("brackets" + at, "brackets", spec.ell == 3 ? 200 : 300, Tier::Combination,
          [spec](Exponent o) { return rankdiff::brackets(spec, o); });
  }
  for (const char* name : {"s1too", "s1", "s3"}) {
    c.add(name, name, 200, Tier::Combination,
          [n = std::string(name)](Exponent o) { return rankdiff::verify_specialization(n, o); });
  }
  using rankdiff::Pair;
  const std::pair<Pair, const char*> combos[] = {
      {Pair::Ell3_01, "gen3too"}, {Pair::Ell5_12, "gen3"}, {Pair::Ell5_02, "gen4"}};
  for (const auto& [pair, label] : combos) {
    c.add(label, label, 200, Tier::Combination, [pair](Exponent o) { return rankdiff::verify_combination(pair, o); });
    c.add("term@" + rankdiff::to_string(pair), "term", 200, Tier::Combination,
          [pair](Exponent o) { return rankdiff::verify_decomposition(pair, o); });
  }
}

void add_product_identities(Catalogue& c) {
  const std::uint64_t seed = c.options().seed;
  c.add("lemma3.1.eq1", "lem6eq1", 150, Tier::Product,
        [](Exponent o) { return products::verify_lemma31(products::Lemma31Variant::Eq1, o); });
  c.add("lemma3.1.eq2", "lem6eq2", 150, Tier::Product,
        [](Exponent o) { return products::verify_lemma31(products::Lemma31Variant::Eq2, o); });

  struct Instance {
    Hickerson which;
    SignedMonomial x, z;
  };
  const Instance used[] = {{Hickerson::Lemma32, q_pow(5), q_pow(10)},
                           {Hickerson::Lemma33, q_pow(5, -1), q_pow(10, -1)},
                           {Hickerson::Lemma33, q_pow(5), q_pow(10)},
                           {Hickerson::Lemma34, q_pow(5), q_pow(10)},
                           {Hickerson::Lemma35, q_pow(5), q_pow(10)}};
  const char* anchors[] = {"Hick1", "Hick2", "Hick2.5", "Hick3"};
  for (const Instance& in : used) {
    const std::string id = products::to_string(in.which) + "@x=" + products::id_string(in.x) +
                           ",z=" + products::id_string(in.z) + ",base=25";
    c.add(id, anchors[static_cast<int>(in.which)], 300, Tier::Product,
          [in](Exponent o) { return products::verify_hickerson(in.which, in.x, in.z, 25, o); });
  }
  for (const Hickerson which : {Hickerson::Lemma32, Hickerson::Lemma33, Hickerson::Lemma34, Hickerson::Lemma35}) {
    Sampler s(seed, 100 + static_cast<std::uint64_t>(which));
    for (int k = 1; k <= 10; ++k) {
      const SignedMonomial x = s.monomial(1, 10);
      const SignedMonomial z = s.monomial(1, 10);
      c.add(products::to_string(which) + ".sample" + two_digits(k), anchors[static_cast<int>(which)], 300,
            Tier::Product,
            sampled(seed, [which, x, z](Exponent o) { return products::verify_hickerson(which, x, z, 11, o); }));
    }
  }

  struct Addition {
    SignedMonomial z, zeta, t;
  };
  for (const Addition& a : {Addition{q_pow(20), q_pow(10), q_pow(5)}, Addition{q_pow(20), q_pow(15), q_pow(10)}}) {
    const std::string id = "lemma3.6@z=" + products::id_string(a.z) + ",zeta=" + products::id_string(a.zeta) +
                           ",t=" + products::id_string(a.t) + ",base=50";
    c.add(id, "addition", 400, Tier::Product,
          [a](Exponent o) { return products::verify_addition(a.z, a.zeta, a.t, 50, o); });
  }
  {
    Sampler s(seed, 106);
    for (int k = 1; k <= 10; ++k) {
      const Addition a{s.monomial(1, 10), s.monomial(1, 10), s.monomial(1, 10)};
      c.add("lemma3.6.sample" + two_digits(k), "addition", 300, Tier::Product,
            sampled(seed, [a](Exponent o) { return products::verify_addition(a.z, a.zeta, a.t, 11, o); }));
    }
  }

  for (const Exponent ell : {3, 5}) {
    for (Exponent a = 1; a < ell; ++a) {
      const std::string at = "@a=" + std::to_string(a) + ",ell=" + std::to_string(ell);
      c.add("p3" + at, "p3", 200, Tier::Product, [a, ell](Exponent o) { return products::verify_p_reflection(a, ell, o); });
      c.add("p4" + at, "p4", 200, Tier::Product, [a, ell](Exponent o) { return products::verify_p_negation(a, ell, o); });
    }
  }
  {
    Sampler s(seed, 110);
    for (int k = 1; k <= 5; ++k) {
      const Exponent base = s.uniform(3, 7);
      const SignedMonomial z1 = s.monomial(-2 * base, 2 * base);
      const SignedMonomial z2 = s.monomial(-2 * base, 2 * base);
      const SignedMonomial z3 = s.monomial(-base, base);
      c.add("p1.sample" + two_digits(k), "p1", 200, Tier::Product,
            sampled(seed, [z1, base](Exponent o) { return products::verify_p1(z1, base, o); }));
      c.add("p2.sample" + two_digits(k), "p2", 200, Tier::Product,
            sampled(seed, [z2, base](Exponent o) { return products::verify_p2(z2, base, o); }));
      c.add("jtp.sample" + two_digits(k), "jtp", 200, Tier::Product,
            sampled(seed, [z3, base](Exponent o) { return products::verify_triple_product(z3, base, o); }));
    }
  }
}

void add_lambert_identities(Catalogue& c) {
  const std::uint64_t seed = c.options().seed;
  for (const Exponent ell : {3, 5}) {
    c.add("lemma2.1@ell=" + std::to_string(ell), "Sofq", 200, Tier::Lambert,
          [ell](Exponent o) { return lambert::verify_lemma21(ell, o); });
    for (Exponent b = 0; b <= ell; ++b) {
      c.add("rels@b=" + std::to_string(b) + ",ell=" + std::to_string(ell), "rels", 200, Tier::Lambert,
            [b, ell](Exponent o) { return lambert::verify_rels(b, ell, o); });
    }
  }

  struct Spec41 {
    Exponent a, b, ell;
  };
  for (const Spec41 s : {Spec41{1, 2, 5}, Spec41{2, 1, 5}, Spec41{1, 3, 5}}) {
    const SignedMonomial zeta = q_pow(s.a * s.ell);
    const SignedMonomial z = q_pow(s.b * s.ell);
    const Exponent base = s.ell * s.ell;
    c.add("lemma4.1@zeta=" + products::id_string(zeta) + ",z=" + products::id_string(z) + ",base=" +
              std::to_string(base),
          "jackeq", 300, Tier::Lambert, [=](Exponent o) { return lambert::verify_lemma41(zeta, z, base, o); });
    c.add("lem1@a=" + std::to_string(s.a) + ",b=" + std::to_string(s.b) + ",ell=" + std::to_string(s.ell), "lem1", 300,
          Tier::Lambert, [s](Exponent o) { return lambert::verify_lem1(s.a, s.b, s.ell, o); });
  }
  c.add("lemma4.1@zeta=q2,z=-q3,base=7", "jackeq", 300, Tier::Lambert,
        [](Exponent o) { return lambert::verify_lemma41(q_pow(2), q_pow(3, -1), 7, o); });

  struct ZBase {
    SignedMonomial z;
    Exponent base;
    Exponent part1_order;
  };
  for (const ZBase zb : {ZBase{q_pow(1), 5, 300}, ZBase{q_pow(1), 3, 200}, ZBase{q_pow(2), 7, 200},
                         ZBase{q_pow(1, -1), 5, 200}}) {
    const std::string at = "@z=" + products::id_string(zb.z) + ",base=" + std::to_string(zb.base);
    c.add("part1" + at, "part1", zb.part1_order, Tier::Lambert, [zb](Exponent o) {
      return lambert::verify_lemma42(lambert::Lemma42Part::Part1, zb.z, zb.base, o);
    });
    c.add("part2" + at, "part2", 200, Tier::Lambert, [zb](Exponent o) {
      return lambert::verify_lemma42(lambert::Lemma42Part::Part2, zb.z, zb.base, o);
    });
    c.add("constant" + at, "constant", 200, Tier::Lambert,
          [zb](Exponent o) { return lambert::verify_constant(zb.z, zb.base, o); });
    c.add("gees" + at, "gees", 200, Tier::Lambert, [zb](Exponent o) { return lambert::verify_gees(zb.z, zb.base, o); });
  }
  for (const Exponent a : {1, 2}) {
    c.add("g1@a=" + std::to_string(a) + ",ell=5", "g1", 300, Tier::Lambert,
          [a](Exponent o) { return lambert::verify_g1(a, 5, o); });
  }
  for (const Exponent ell : {3, 5}) {
    for (Exponent a = 1; a < ell; ++a) {
      c.add("g2@a=" + std::to_string(a) + ",ell=" + std::to_string(ell), "g2", 200, Tier::Lambert,
            [a, ell](Exponent o) { return lambert::verify_g2(a, ell, o); });
    }
  }

  {
    Sampler s(seed, 200);
    for (int k = 1; k <= 5; ++k) {
      const Exponent base = s.uniform(3, 7);
      const SignedMonomial z = s.monomial(1, base - 1);
      const SignedMonomial zeta = s.monomial(-base, base);
      c.add("sigma.sample" + two_digits(k), "sigma", 150, Tier::Lambert,
            sampled(seed, [=](Exponent o) { return lambert::verify_sigma_shift(z, zeta, base, o); }));
    }
    for (int k = 1; k <= 3; ++k) {
      const Exponent base = s.uniform(3, 7);
      const SignedMonomial z1 = s.monomial(1, base - 1);
      const SignedMonomial z2 = s.monomial(1, base - 1);
      c.add("step.sample" + two_digits(k), "step", 150, Tier::Lambert,
            sampled(seed, [=](Exponent o) { return lambert::verify_step(z1, base, o); }));
      c.add("short.sample" + two_digits(k), "short", 150, Tier::Lambert,
            sampled(seed, [=](Exponent o) { return lambert::verify_short(z2, base, o); }));
    }
  }

  c.add("range.lambert", "Sofq", 100, Tier::Lambert, [](Exponent order) {
    // Every Lambert sum the closed forms and final forms evaluate.
    std::vector<LambertSpec> specs;
    for (const auto& e : rankdiff::theorem_table()) {
      for (const auto& t : e.formula.terms) {
        if (const auto* l = std::get_if<LambertSpec>(&t.factor)) specs.push_back(*l);
      }
    }
    for (const rankdiff::FinalFormSpec f : {rankdiff::FinalFormSpec{3, 1}, {5, 1}, {5, 2}}) {
      for (const auto& formula : {rankdiff::s_b_decomposition(f), rankdiff::s_bar_final_form(f)}) {
        for (const auto& t : formula.terms) {
          if (const auto* l = std::get_if<LambertSpec>(&t.factor)) specs.push_back(*l);
        }
      }
    }
    IdentityReport last;
    for (const LambertSpec& spec : specs) {
      last = lambert::verify_range_doubling(spec, order);
      if (!last.pass) return last;
    }
    last.notes.push_back(std::to_string(specs.size()) + " sums checked");
    return last;
  });
}

// Enumeration-side series: coefficient n is f(n) for 1 <= n < order, constant term 0.
template <class F>
LaurentSeries enumerated(Exponent order, F&& f, Coefficient constant = 0) {
  std::vector<Coefficient> c(static_cast<std::size_t>(order));
  if (order > 0) c[0] = constant;
  for (Exponent n = 1; n < order; ++n) c[static_cast<std::size_t>(n)] = f(static_cast<int>(n));
  return LaurentSeries(0, std::move(c), order);
}

const char* kConventionNote = "constant term uses Nbar(s,m,0) = 0 from the generating function";

void add_oracles(Catalogue& c) {
  c.add("oracle.pbar", "gen", 31, Tier::Oracle, [](Exponent order) {
    const LaurentSeries counted = enumerated(
        order, [](int n) { return Coefficient(static_cast<long>(combinat::enumerate(n).size())); }, 1);
    return compare_series("oracle.pbar", counted, combinat::pbar_series(order), order);
  });
  for (const int m : {0, 1, 2, 3}) {
    c.add("oracle.nbar@m=" + std::to_string(m), "gen", 31, Tier::Oracle, [m](Exponent order) {
      const LaurentSeries counted =
          enumerated(order, [m](int n) { return Coefficient(static_cast<long>(combinat::rank_table(n).count(m))); });
      IdentityReport r = compare_series("", counted, combinat::nbar_series(m, order), order);
      r.notes.push_back(kConventionNote);
      return r;
    });
  }
  for (const int m : {3, 5}) {
    for (int s = 0; s < m; ++s) {
      c.add("oracle.class@s=" + std::to_string(s) + ",m=" + std::to_string(m), "gen1", 31, Tier::Oracle,
            [s, m](Exponent order) {
              const LaurentSeries counted = enumerated(
                  order, [s, m](int n) { return Coefficient(static_cast<long>(combinat::nbar_class(s, m, n))); });
              IdentityReport r = compare_series("", counted, combinat::nbar_class_series(s, m, order), order);
              r.notes.push_back(kConventionNote);
              return r;
            });
    }
    c.add("oracle.classsum@m=" + std::to_string(m), "gen1", 200, Tier::Oracle, [m](Exponent order) {
      LaurentSeries sum = LaurentSeries::constant(1, order);
      for (int s = 0; s < m; ++s) sum += combinat::nbar_class_series(s, m, order);
      IdentityReport r = compare_series("", sum, combinat::pbar_series(order), order);
      r.notes.push_back(kConventionNote);
      return r;
    });
  }
  // Nbar(0,5,5n+2) = Nbar(2,5,5n+2) while 5n+2 stays within the enumeration range.
  c.add("oracle.R02.d2", "r_{02}(2)", 6, Tier::Oracle, [](Exponent order) {
    const LaurentSeries diff = enumerated(
        order,
        [](int n) {
          const int k = 5 * n + 2;
          return Coefficient(static_cast<long>(combinat::nbar_class(0, 5, k) - combinat::nbar_class(2, 5, k)));
        },
        Coefficient(static_cast<long>(combinat::nbar_class(0, 5, 2) - combinat::nbar_class(2, 5, 2))));
    return compare_to_zero("", diff, order);
  });
}

}  // namespace

std::vector<IdentityEntry> build_entries(const RegistryOptions& options) {
  Catalogue c(options);
  add_theorems(c);
  add_coefficient_identities(c);
  add_final_forms(c);
  add_product_identities(c);
  add_lambert_identities(c);
  add_oracles(c);
  return c.take();
}

}  // namespace overrank::registry
