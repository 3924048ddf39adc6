// One line per acceptance criterion; exit status 0 iff every line is PASS.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "combinat/combinat.hpp"
#include "core/error.hpp"
#include "qseries/laurent_series.hpp"
#include "rankdiff/rankdiff.hpp"
#include "registry/registry.hpp"
#include "registry/report_json.hpp"

namespace {

using namespace overrank;
using qseries::Coefficient;
using qseries::Exponent;
using qseries::LaurentSeries;
using registry::Registry;
using registry::RegistryOptions;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

const Registry& reg() {
  static const Registry r(RegistryOptions{registry::kDefaultSeed, std::nullopt});
  return r;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

// Verifies every entry whose id starts with one of the prefixes, at `order`
// when given and at the entry's default order otherwise.
void verify_family(Outcome& out, const std::vector<std::string>& prefixes, Exponent order, std::size_t& count) {
  for (const auto& e : reg().entries()) {
    bool hit = false;
    for (const auto& p : prefixes) hit = hit || starts_with(e.id, p);
    if (!hit) continue;
    ++count;
    const IdentityReport r = reg().verify(e.id, order > 0 ? std::max(order, e.default_order) : e.default_order);
    out.require(r.pass, e.id + ": " + registry::report_text(r));
  }
}

std::size_t count_prefix(const std::string& prefix) {
  std::size_t n = 0;
  for (const auto& e : reg().entries()) n += starts_with(e.id, prefix) ? 1 : 0;
  return n;
}

Outcome criterion1() {
  Outcome o;
  const LaurentSeries pbar = combinat::pbar_series(31);
  o.require(combinat::enumerate(4).size() == 14, "enumerate(4) size");
  o.require(pbar.coeff(4) == 14, "pbar q^4");
  for (int n = 0; n <= 30; ++n) {
    o.require(pbar.coeff(n) == static_cast<long>(combinat::enumerate(n).size()), "pbar(" + std::to_string(n) + ")");
  }
  return o;
}

Outcome theorems(int ell) {
  Outcome o;
  int seen = 0;
  for (const auto& e : rankdiff::theorem_table()) {
    if (e.key.ell != ell) continue;
    ++seen;
    const LaurentSeries f = rankdiff::rank_diff_formula(e.key, 40);
    const LaurentSeries g = rankdiff::rank_diff_oracle(e.key, 40);
    o.require(f.order() >= 40 && g.order() >= 40 && f.truncated(40) == g.truncated(40), rankdiff::to_string(e.key));
  }
  o.require(seen == (ell == 3 ? 3 : 10), "theorem count");
  return o;
}

Outcome criterion3() {
  Outcome o = theorems(5);
  o.require(rankdiff::rank_diff_formula({5, 0, 2, 2}, 40).is_zero(), "R02(2) formula not zero");
  o.require(rankdiff::rank_diff_oracle({5, 0, 2, 2}, 40).is_zero(), "R02(2) oracle not zero");
  for (int n = 2; n <= 30; n += 5) {
    o.require(combinat::nbar_class(0, 5, n) == combinat::nbar_class(2, 5, n), "enumeration at " + std::to_string(n));
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::size_t n = 0;
  verify_family(o, {"lemma2.1@", "rels@", "p1.", "p2.", "p3@", "p4@"}, 200, n);
  o.require(count_prefix("lemma2.1@") == 2 && count_prefix("rels@") == 10, "coverage");
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t n = 0;
  verify_family(o, {"lemma3.1."}, 150, n);
  verify_family(o, {"lemma3.2", "lemma3.3", "lemma3.4", "lemma3.5", "lemma3.6"}, 300, n);
  for (const char* f : {"lemma3.2.sample", "lemma3.3.sample", "lemma3.4.sample", "lemma3.5.sample", "lemma3.6.sample"}) {
    o.require(count_prefix(f) >= 10, std::string("fewer than 10 samples for ") + f);
  }
  o.require(count_prefix("lemma3.1.") == 2, "both dissections");
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t n = 0;
  verify_family(o, {"lemma4.1@", "lem1@", "part1@", "part2@", "constant@", "gees@", "g1@", "g2@"}, 0, n);
  o.require(n >= 30, "coverage");
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::size_t n = 0;
  verify_family(o, {"s(b)@", "final@", "brackets@", "gen3too", "gen3", "gen4", "check"}, 0, n);
  for (int i = 0; i < 10; ++i) o.require(count_prefix("check" + std::to_string(i)) >= 1, "check" + std::to_string(i));
  o.require(count_prefix("s(b)@") == 3 && count_prefix("final@") == 3 && count_prefix("brackets@") == 3, "coverage");
  return o;
}

LaurentSeries random_series(std::mt19937& rng, Exponent order, int lowest = -4) {
  std::uniform_int_distribution<int> c(-9, 9), lo(lowest, 3);
  const Exponent start = lo(rng);
  std::vector<Coefficient> v;
  for (Exponent e = start; e < order; ++e) v.emplace_back(c(rng), 1 + (c(rng) & 3));
  return LaurentSeries(start, std::move(v), order);
}

Outcome criterion8() {
  Outcome o;
  std::mt19937 rng(8);
  for (int k = 0; k < 25; ++k) {
    const LaurentSeries a = random_series(rng, 30), b = random_series(rng, 28), c = random_series(rng, 31);
    o.require((a + b) == (b + a), "additive commutativity");
    o.require((a * b) == (b * a), "multiplicative commutativity");
    o.require(((a * b) * c) == (a * (b * c)), "associativity");
    o.require((a * (b + c)) == (a * b + a * c), "distributivity");
    o.require((a - a).is_zero(), "additive inverse");
    if (!a.is_zero()) {
      const LaurentSeries one = a * qseries::inverse(a);
      o.require(one == LaurentSeries::constant(1, one.order()), "multiplicative inverse");
    }
    const LaurentSeries p = random_series(rng, 40, 0);
    LaurentSeries whole = LaurentSeries::zero(p.order());
    const Exponent m = 2 + k % 4;
    for (Exponent d = 0; d < m; ++d) {
      whole += qseries::substitute_power(qseries::extract_progression(p, m, d), m).shifted(d);
    }
    o.require(whole.truncated(p.order() - m) == p.truncated(p.order() - m), "dissection completeness");
  }
  const IdentityReport range = reg().verify("range.lambert", 100);
  o.require(range.pass, registry::report_text(range));
  for (int n = 1; n <= 30; ++n) {
    const combinat::RankTable t = combinat::rank_table(n);
    for (const auto& [r, c] : t.counts) o.require(t.count(-r) == c, "rank symmetry at n=" + std::to_string(n));
  }
  for (const int m : {3, 5}) {
    LaurentSeries sum = LaurentSeries::constant(1, 40);
    for (int s = 0; s < m; ++s) sum += combinat::nbar_class_series(s, m, 40);
    o.require(sum == combinat::pbar_series(40), "class-sum completeness m=" + std::to_string(m));
  }
  return o;
}

Outcome criterion9() {
  using rankdiff::Mutation;
  struct Case {
    std::string id;
    Mutation m;
  };
  const Case cases[] = {{"thm5.R12.d1", {Mutation::Kind::FlipPrefactorSign, 0, 0}},
                        {"thm3.R01.d1", {Mutation::Kind::BumpLeadingExponent, 0, 0}},
                        {"check4", {Mutation::Kind::BumpFactorExponent, 0, 0}},
                        {"thm5.R02.d4", {Mutation::Kind::FlipFactorSign, 0, 0}}};
  Outcome o;
  const int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  for (const Case& c : cases) {
    const Registry r(RegistryOptions{registry::kDefaultSeed, RegistryOptions::Corruption{c.id, c.m}});
    std::vector<std::string> failed;
    bool located = true;
    for (const IdentityReport& rep : r.run_suite(1.0, jobs)) {
      if (rep.pass) continue;
      failed.push_back(rep.id);
      located = located && rep.first_mismatch.has_value();
    }
    o.require(failed == std::vector<std::string>{c.id} && located,
              c.id + " " + rankdiff::to_string(c.m.kind) + ": " + std::to_string(failed.size()) + " failing entries");
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const auto serial = reg().run_suite(1.0, 1);
  const auto parallel = reg().run_suite(1.0, jobs);
  const auto again = reg().run_suite(1.0, jobs);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::size_t failures = 0;
  for (const auto& r : serial) failures += r.pass ? 0 : 1;
  o.require(failures == 0, std::to_string(failures) + " failing entries");
  const std::string json = registry::suite_json(serial);
  o.require(json == registry::suite_json(parallel) && json == registry::suite_json(again), "output differs between runs");
  o.require(secs < 600.0, "three full runs took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = std::to_string(serial.size()) + " entries, three runs in " + std::to_string(secs) + " s";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"overpartition counts", criterion1},
      {"closed forms mod 3", [] { return theorems(3); }},
      {"closed forms mod 5", criterion3},
      {"S(ell), S(b) relations, p1-p4", criterion4},
      {"product lemmas", criterion5},
      {"Lambert lemmas and g", criterion6},
      {"final forms, brackets, combinations, check0-check9", criterion7},
      {"property suites", criterion8},
      {"mutation sensitivity", criterion9},
      {"full suite determinism and runtime", criterion10},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all = all && o.pass;
    std::printf("%s %zu %s%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.empty() ? "" : ": ",
                o.detail.c_str());
  }
  return all ? 0 : 1;
}
