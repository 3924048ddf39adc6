#include "combinat/combinat.hpp"

#include <string>

#include "core/error.hpp"
#include "products/products.hpp"

namespace overrank::combinat {

using qseries::Coefficient;

namespace {

void check_cap(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be nonnegative");
  if (n > kEnumerationCap) {
    throw Error(ErrorCode::CapExceeded,
                "enumeration is capped at n = " + std::to_string(kEnumerationCap) + ", got " + std::to_string(n));
  }
}

// Chooses the distinct part values in decreasing order, below `below`.
void extend(Overpartition& op, int remaining, int below, const std::function<void(const Overpartition&)>& visit) {
  if (remaining == 0) {
    visit(op);
    return;
  }
  for (int v = std::min(remaining, below - 1); v >= 1; --v) {
    for (int k = 1; k * v <= remaining; ++k) {
      op.parts.insert(op.parts.end(), static_cast<std::size_t>(k), v);
      extend(op, remaining - k * v, v, visit);
      op.overlined.push_back(v);
      extend(op, remaining - k * v, v, visit);
      op.overlined.pop_back();
      op.parts.resize(op.parts.size() - static_cast<std::size_t>(k));
    }
  }
}

int mod(int a, int m) { return ((a % m) + m) % m; }

LaurentSeries pbar_factor(Exponent order) {
  return products::eval_product(products::ProductSpec{}.poch(-1, 1, 1).poch(1, 1, 1, -1).times(Coefficient(2)),
                                order);
}

}  // namespace

void for_each_overpartition(int n, const std::function<void(const Overpartition&)>& visit) {
  check_cap(n);
  Overpartition op;
  extend(op, n, n + 1, visit);
}

std::vector<Overpartition> enumerate(int n) {
  std::vector<Overpartition> out;
  for_each_overpartition(n, [&](const Overpartition& op) { out.push_back(op); });
  return out;
}

int rank(const Overpartition& op) {
  if (op.parts.empty()) return 0;
  return op.parts.front() - static_cast<int>(op.parts.size());
}

std::int64_t RankTable::total() const {
  std::int64_t t = 0;
  for (const auto& [r, c] : counts) t += c;
  return t;
}

std::int64_t RankTable::count(int r) const {
  const auto it = counts.find(r);
  return it == counts.end() ? 0 : it->second;
}

RankTable rank_table(int n) {
  RankTable table{n, {}};
  for_each_overpartition(n, [&](const Overpartition& op) { ++table.counts[rank(op)]; });
  return table;
}

std::int64_t nbar_class(int s, int m, int n) {
  if (m < 1 || s < 0 || s >= m) throw Error(ErrorCode::InvalidArgument, "need 0 <= s < m");
  std::int64_t total = 0;
  for_each_overpartition(n, [&](const Overpartition& op) {
    if (mod(rank(op), m) == s) ++total;
  });
  return total;
}

LaurentSeries nbar_series(int m, Exponent order) {
  const Exponent am = m < 0 ? -m : m;
  // sum_{n>=1} (-1)^{n-1} q^{n^2+|m|n} (1 - q^n)/(1 + q^n)
  LaurentSeries sum = LaurentSeries::zero(order);
  for (Exponent n = 1; n * n + am * n < order; ++n) {
    LaurentSeries term = LaurentSeries::monomial(n % 2 ? 1 : -1, n * n + am * n, order);
    term = qseries::divide_binomial(qseries::multiply_binomial(term, 1, n), -1, n);
    sum += term;
  }
  return (pbar_factor(order) * sum).truncated(order);
}

LaurentSeries nbar_class_series(int s, int m, Exponent order) {
  if (m < 1 || s < 0 || s >= m) throw Error(ErrorCode::InvalidArgument, "need 0 <= s < m");
  // (-1)^n q^{n^2+n+cn} / ((1 + q^n)(1 - q^{mn})) for c in {s, m - s}, n != 0.
  // For n < 0 the two denominators lift the valuation by |n| + m|n|.
  auto valuation = [&](Exponent n, Exponent c) {
    const Exponent e = n * n + n + c * n;
    return n > 0 ? e : e - n - m * n;
  };
  LaurentSeries sum = LaurentSeries::zero(order);
  for (const Exponent c : {static_cast<Exponent>(s), static_cast<Exponent>(m - s)}) {
    for (const int dir : {1, -1}) {
      for (Exponent k = 1;; ++k) {
        const Exponent n = dir * k;
        // valuation is increasing in k for both directions
        if (valuation(n, c) >= order) break;
        const Exponent lift = n > 0 ? 0 : -n - m * n;
        LaurentSeries term = LaurentSeries::monomial(n % 2 ? -1 : 1, n * n + n + c * n, order - lift);
        term = qseries::divide_binomial(qseries::divide_binomial(term, -1, n), 1, m * n);
        sum += term.truncated(order);
      }
    }
  }
  return (pbar_factor(order) * sum).truncated(order);
}

LaurentSeries pbar_series(Exponent order) {
  return products::eval_product(products::ProductSpec{}.poch(-1, 1, 1).poch(1, 1, 1, -1), order);
}

}  // namespace overrank::combinat
