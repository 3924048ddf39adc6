#include "core/identity_report.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace overrank {

using qseries::Exponent;
using qseries::LaurentSeries;

IdentityReport compare_series(std::string id, const LaurentSeries& lhs, const LaurentSeries& rhs,
                              Exponent order) {
  if (lhs.order() < order || rhs.order() < order) {
    throw Error(ErrorCode::InsufficientPrecision,
                id + ": sides known to orders " + std::to_string(lhs.order()) + " and " +
                    std::to_string(rhs.order()) + ", need " + std::to_string(order));
  }
  IdentityReport report;
  report.id = std::move(id);
  report.checked_order = order;
  report.pass = true;

  const Exponent lo = std::min(lhs.min_exp(), rhs.min_exp());
  for (Exponent n = lo; n < order; ++n) {
    const auto& a = lhs.at(n);
    const auto& b = rhs.at(n);
    if (a != b) {
      Mismatch m{n, a, b, {}};
      for (Exponent k = std::max(lo, n - 2); k <= n + 2 && k < order; ++k) {
        m.window.push_back({k, lhs.at(k), rhs.at(k)});
      }
      report.first_mismatch = std::move(m);
      report.pass = false;
      break;
    }
  }
  for (Exponent n = lo; n < order; ++n) {
    if (!qseries::has_dyadic_denominator(lhs.at(n)) || !qseries::has_dyadic_denominator(rhs.at(n))) {
      report.notes.push_back("non-dyadic denominator at q^" + std::to_string(n));
      report.pass = false;
      break;
    }
  }
  return report;
}

IdentityReport compare_to_zero(std::string id, const LaurentSeries& expr, Exponent order) {
  return compare_series(std::move(id), expr, LaurentSeries::zero(order), order);
}

}  // namespace overrank
