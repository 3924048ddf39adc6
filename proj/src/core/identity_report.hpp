#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qseries/laurent_series.hpp"

namespace overrank {

struct CoefficientPair {
  qseries::Exponent exp = 0;
  qseries::Coefficient lhs;
  qseries::Coefficient rhs;
};

struct Mismatch {
  qseries::Exponent exp = 0;
  qseries::Coefficient lhs;
  qseries::Coefficient rhs;
  /// Up to five coefficients centred on the mismatch, from both sides.
  std::vector<CoefficientPair> window;
};

/// Outcome of checking one identity to a finite order.
struct IdentityReport {
  std::string id;
  bool pass = false;
  qseries::Exponent checked_order = 0;
  std::optional<Mismatch> first_mismatch;
  double runtime_ms = 0.0;
  std::vector<std::string> notes;
};

/// Compares lhs and rhs coefficientwise on every exponent below `order`.
/// Both sides must be known to at least `order` (InsufficientPrecision
/// otherwise). A coefficient whose denominator is not a power of two is
/// flagged in the notes and fails the report.
IdentityReport compare_series(std::string id, const qseries::LaurentSeries& lhs,
                              const qseries::LaurentSeries& rhs, qseries::Exponent order);

/// Convenience for identities of the form expr == 0.
IdentityReport compare_to_zero(std::string id, const qseries::LaurentSeries& expr,
                               qseries::Exponent order);

}  // namespace overrank
