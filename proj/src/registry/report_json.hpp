#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "core/identity_report.hpp"
#include "registry/registry.hpp"

namespace overrank::registry {

/// { id, pass, checked_order, first_mismatch: {exp, lhs, rhs, window} | null, runtime_ms, notes }
/// with coefficients as "num/den" strings.
nlohmann::ordered_json to_json(const IdentityReport& report);

std::string report_json(const IdentityReport& report);

/// "PASS id (order N)" or "FAIL id at q^e: lhs != rhs", then the notes.
std::string report_text(const IdentityReport& report);
std::string suite_text(const std::vector<IdentityReport>& reports);
std::string suite_json(const std::vector<IdentityReport>& reports);

/// id,pass,checked_order,mismatch_exp,lhs,rhs,runtime_ms,notes
std::string suite_csv(const std::vector<IdentityReport>& reports);

/// One "id<TAB>tier<TAB>default_order<TAB>anchor" line per entry.
std::string list_text(const Registry& registry);

/// exponent,numerator,denominator rows for every stored coefficient.
std::string series_csv(const qseries::LaurentSeries& series);

/// pbar, nbar:s,m, rankdiff-oracle:ell,s,t,d, rankdiff-formula:ell,s,t,d, sbar:b,ell.
qseries::LaurentSeries named_series(const std::string& name, Exponent order);

/// n followed by Nbar(s, mod, n) for s = 0..mod-1, one row per 0 <= n <= max_n.
std::string count_table_csv(int max_n, int mod);

}  // namespace overrank::registry
