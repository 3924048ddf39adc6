#include <algorithm>

#include "combinat/combinat.hpp"
#include "core/error.hpp"
#include "support.hpp"

using namespace overrank;
using namespace overrank::combinat;
using testing::first_difference;

namespace {

using Op = Overpartition;

std::vector<Op> sorted(std::vector<Op> v) {
  std::sort(v.begin(), v.end(), [](const Op& a, const Op& b) {
    return std::tie(a.parts, a.overlined) < std::tie(b.parts, b.overlined);
  });
  return v;
}

// Partition numbers of n by distinct-part counting: pbar(n) = sum_k Q(k) p(n - k).
std::vector<std::int64_t> pbar_by_convolution(std::size_t order) {
  std::vector<std::int64_t> p(order), qd(order);
  p[0] = qd[0] = 1;
  for (std::size_t k = 1; k < order; ++k) {
    for (std::size_t n = k; n < order; ++n) p[n] += p[n - k];
    for (std::size_t n = order - 1; n >= k; --n) qd[n] += qd[n - k];
  }
  return testing::poly_mul(p, qd, order);
}

}  // namespace

TEST_SUITE("combinat") {
  TEST_CASE("the fourteen overpartitions of 4") {
    const std::vector<Op> expected = {
        {{4}, {}},        {{4}, {4}},          {{3, 1}, {}},     {{3, 1}, {3}},       {{3, 1}, {1}},
        {{3, 1}, {3, 1}}, {{2, 2}, {}},        {{2, 2}, {2}},    {{2, 1, 1}, {}},     {{2, 1, 1}, {2}},
        {{2, 1, 1}, {1}}, {{2, 1, 1}, {2, 1}}, {{1, 1, 1, 1}, {}}, {{1, 1, 1, 1}, {1}}};
    const auto got = enumerate(4);
    CHECK(got.size() == 14);
    CHECK(sorted(got) == sorted(expected));
  }

  TEST_CASE("overpartitions of 3 and of 0") {
    const std::vector<Op> expected = {{{3}, {}},    {{3}, {3}},       {{2, 1}, {}}, {{2, 1}, {2}},
                                      {{2, 1}, {1}}, {{2, 1}, {2, 1}}, {{1, 1, 1}, {}}, {{1, 1, 1}, {1}}};
    CHECK(sorted(enumerate(3)) == sorted(expected));
    const auto empty = enumerate(0);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].parts.empty());
    CHECK(rank(empty[0]) == 0);
  }

  TEST_CASE("enumerated objects are well formed") {
    for (int n = 1; n <= 12; ++n) {
      for_each_overpartition(n, [n](const Op& op) {
        int sum = 0;
        for (const int p : op.parts) sum += p;
        CHECK(sum == n);
        CHECK(std::is_sorted(op.parts.rbegin(), op.parts.rend()));
        CHECK(std::adjacent_find(op.overlined.begin(), op.overlined.end(), std::less_equal<>()) == op.overlined.end());
        for (const int v : op.overlined) CHECK(std::find(op.parts.begin(), op.parts.end(), v) != op.parts.end());
      });
    }
  }

  TEST_CASE("rank is largest part minus number of parts") {
    CHECK(rank({{2, 2}, {}}) == 0);
    CHECK(rank({{4}, {4}}) == 3);
    CHECK(rank({{1, 1, 1, 1}, {}}) == -3);
  }

  TEST_CASE("class counts for small n") {
    CHECK(nbar_class(0, 3, 3) == 4);
    CHECK(nbar_class(1, 3, 3) == 2);
    CHECK(nbar_class(2, 3, 3) == 2);
    CHECK(nbar_class(1, 2, 2) == 4);
    std::int64_t total = 0;
    for (int s = 0; s < 5; ++s) total += nbar_class(s, 5, 7);
    CHECK(total == rank_table(7).total());
    CHECK(total == enumerate(7).size());
  }

  TEST_CASE("enumeration above the cap is refused") {
    try {
      enumerate(kEnumerationCap + 1);
      FAIL("expected CapExceeded");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::CapExceeded);
    }
    CHECK_THROWS_AS(enumerate(-1), Error);
  }

  TEST_CASE("overpartition generating function") {
    const LaurentSeries pbar = pbar_series(40);
    CHECK(pbar.coeff(0) == 1);
    CHECK(pbar.coeff(4) == 14);
    const auto conv = pbar_by_convolution(40);
    for (Exponent n = 0; n < 40; ++n) CHECK(pbar.coeff(n) == static_cast<long>(conv[n]));
    for (int n = 0; n <= 30; ++n) CHECK(pbar.coeff(n) == static_cast<long>(rank_table(n).total()));
  }

  TEST_CASE("rank generating function") {
    const LaurentSeries m0 = nbar_series(0, 10);
    const int expected[] = {0, 2, 0, 4, 2};
    for (int n = 0; n < 5; ++n) CHECK(m0.coeff(n) == expected[n]);
    CHECK(nbar_series(1, 10).coeff(2) == 2);
    for (int m = 1; m <= 4; ++m) CHECK(nbar_series(m, 60) == nbar_series(-m, 60));
  }

  TEST_CASE("class generating function") {
    const LaurentSeries c03 = nbar_class_series(0, 3, 10);
    CHECK(c03.coeff(1) == 2);
    CHECK(c03.coeff(2) == 0);
    CHECK(c03.coeff(3) == 4);
    CHECK((nbar_class_series(1, 5, 80) - nbar_class_series(4, 5, 80)).is_zero());
    for (const int m : {3, 5}) {
      LaurentSeries sum = LaurentSeries::constant(1, 40);
      for (int s = 0; s < m; ++s) sum += nbar_class_series(s, m, 40);
      CHECK(first_difference(sum, pbar_series(40), 40) == 40);
    }
  }

  TEST_CASE("rank symmetry and class symmetry") {
    for (int n = 1; n <= 30; ++n) {
      const RankTable t = rank_table(n);
      for (const auto& [r, c] : t.counts) CHECK(t.count(-r) == c);
      for (const int m : {3, 5}) {
        for (int s = 1; s < m; ++s) CHECK(nbar_class(s, m, n) == nbar_class(m - s, m, n));
      }
    }
  }

  TEST_CASE("series agree with enumeration for 1 <= n <= 30") {
    std::vector<RankTable> tables;
    for (int n = 0; n <= 30; ++n) tables.push_back(rank_table(n));
    for (int m = -8; m <= 8; ++m) {
      const LaurentSeries s = nbar_series(m, 31);
      for (int n = 1; n <= 30; ++n) {
        INFO("m=" << m << " n=" << n);
        CHECK(s.coeff(n) == static_cast<long>(tables[n].count(m)));
      }
    }
    for (const int m : {3, 5}) {
      for (int s = 0; s < m; ++s) {
        const LaurentSeries c = nbar_class_series(s, m, 31);
        for (int n = 1; n <= 30; ++n) {
          std::int64_t want = 0;
          for (const auto& [r, k] : tables[n].counts) {
            if (((r % m) + m) % m == s) want += k;
          }
          INFO("s=" << s << " m=" << m << " n=" << n);
          CHECK(c.coeff(n) == static_cast<long>(want));
        }
      }
    }
  }
}
