#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "qseries/laurent_series.hpp"

namespace overrank::combinat {

using qseries::Exponent;
using qseries::LaurentSeries;

/// Enumeration is refused above this n (CapExceeded).
inline constexpr int kEnumerationCap = 40;

/// Parts in nonincreasing order; `overlined` lists the overlined part values
/// in decreasing order, each value at most once.
struct Overpartition {
  std::vector<int> parts;
  std::vector<int> overlined;

  friend bool operator==(const Overpartition&, const Overpartition&) = default;
};

/// Calls `visit` once per overpartition of n. The argument is only valid
/// during the call.
void for_each_overpartition(int n, const std::function<void(const Overpartition&)>& visit);

std::vector<Overpartition> enumerate(int n);

/// Largest part minus the number of parts; 0 for the empty overpartition.
int rank(const Overpartition& op);

struct RankTable {
  int n = 0;
  std::map<int, std::int64_t> counts;

  std::int64_t total() const;
  std::int64_t count(int rank) const;
};

RankTable rank_table(int n);

/// Number of overpartitions of n with rank congruent to s mod m.
std::int64_t nbar_class(int s, int m, int n);

/// sum_n Nbar(m, n) q^n from the two-variable generating function; the
/// constant term is 0.
LaurentSeries nbar_series(int m, Exponent order);

/// sum_n Nbar(s, m, n) q^n from the bilateral form; the constant term is 0,
/// so summing over s gives pbar - 1.
LaurentSeries nbar_class_series(int s, int m, Exponent order);

/// (-q)_inf / (q)_inf.
LaurentSeries pbar_series(Exponent order);

}  // namespace overrank::combinat
