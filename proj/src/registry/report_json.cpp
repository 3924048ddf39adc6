#include "registry/report_json.hpp"

#include <algorithm>
#include <sstream>

#include "combinat/combinat.hpp"
#include "core/error.hpp"
#include "lambert/lambert.hpp"
#include "rankdiff/rankdiff.hpp"

namespace overrank::registry {

using qseries::to_fraction_string;

nlohmann::ordered_json to_json(const IdentityReport& report) {
  nlohmann::ordered_json j;
  j["id"] = report.id;
  j["pass"] = report.pass;
  j["checked_order"] = report.checked_order;
  if (report.first_mismatch) {
    const Mismatch& m = *report.first_mismatch;
    nlohmann::ordered_json window = nlohmann::ordered_json::array();
    for (const CoefficientPair& p : m.window) {
      window.push_back({{"exp", p.exp}, {"lhs", to_fraction_string(p.lhs)}, {"rhs", to_fraction_string(p.rhs)}});
    }
    j["first_mismatch"] = {{"exp", m.exp},
                           {"lhs", to_fraction_string(m.lhs)},
                           {"rhs", to_fraction_string(m.rhs)},
                           {"window", window}};
  } else {
    j["first_mismatch"] = nullptr;
  }
  j["runtime_ms"] = report.runtime_ms;
  j["notes"] = report.notes;
  return j;
}

std::string report_json(const IdentityReport& report) { return to_json(report).dump(2) + "\n"; }

std::string suite_json(const std::vector<IdentityReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const IdentityReport& r : reports) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

std::string report_text(const IdentityReport& report) {
  std::ostringstream out;
  if (report.pass) {
    out << "PASS " << report.id << " (order " << report.checked_order << ")\n";
  } else if (report.first_mismatch) {
    const Mismatch& m = *report.first_mismatch;
    out << "FAIL " << report.id << " at q^" << m.exp << ": " << to_fraction_string(m.lhs)
        << " != " << to_fraction_string(m.rhs) << '\n';
    for (const CoefficientPair& p : m.window) {
      out << "  q^" << p.exp << ": " << to_fraction_string(p.lhs) << " | " << to_fraction_string(p.rhs) << '\n';
    }
  } else {
    out << "FAIL " << report.id << " (order " << report.checked_order << ")\n";
  }
  for (const std::string& n : report.notes) out << "  note: " << n << '\n';
  return out.str();
}

std::string suite_text(const std::vector<IdentityReport>& reports) {
  std::string out;
  std::size_t failed = 0;
  for (const IdentityReport& r : reports) {
    out += report_text(r);
    if (!r.pass) ++failed;
  }
  return out + std::to_string(reports.size() - failed) + "/" + std::to_string(reports.size()) + " passed\n";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string suite_csv(const std::vector<IdentityReport>& reports) {
  std::ostringstream out;
  out << "id,pass,checked_order,mismatch_exp,lhs,rhs,runtime_ms,notes\n";
  for (const IdentityReport& r : reports) {
    std::string notes;
    for (const std::string& n : r.notes) notes += (notes.empty() ? "" : "; ") + n;
    out << csv_field(r.id) << ',' << (r.pass ? "true" : "false") << ',' << r.checked_order << ',';
    if (r.first_mismatch) {
      out << r.first_mismatch->exp << ',' << to_fraction_string(r.first_mismatch->lhs) << ','
          << to_fraction_string(r.first_mismatch->rhs);
    } else {
      out << ",,";
    }
    out << ',' << r.runtime_ms << ',' << csv_field(notes) << '\n';
  }
  return out.str();
}

std::string list_text(const Registry& registry) {
  std::ostringstream out;
  for (const IdentityEntry& e : registry.entries()) {
    out << e.id << '\t' << to_string(e.tier) << '\t' << e.default_order << '\t' << e.anchor << '\n';
  }
  return out.str();
}

std::string series_csv(const qseries::LaurentSeries& series) {
  std::ostringstream out;
  out << "exponent,numerator,denominator\n";
  for (Exponent e = std::min<Exponent>(series.min_exp(), 0); e < series.order(); ++e) {
    const qseries::Coefficient& c = series.at(e);
    out << e << ',' << c.get_num().get_str() << ',' << c.get_den().get_str() << '\n';
  }
  return out.str();
}

namespace {

std::vector<long> parse_ints(const std::string& text, std::size_t expected, const std::string& name) {
  std::vector<long> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw Error(ErrorCode::InvalidArgument, "bad integer in '" + name + "'");
    out.push_back(v);
  }
  if (out.size() != expected) throw Error(ErrorCode::InvalidArgument, "wrong number of arguments in '" + name + "'");
  return out;
}

}  // namespace

qseries::LaurentSeries named_series(const std::string& name, Exponent order) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "order must be nonnegative");
  const auto colon = name.find(':');
  const std::string head = name.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : name.substr(colon + 1);
  if (head == "pbar" && colon == std::string::npos) return combinat::pbar_series(order);
  if (head == "nbar") {
    const auto v = parse_ints(args, 2, name);
    return combinat::nbar_class_series(static_cast<int>(v[0]), static_cast<int>(v[1]), order);
  }
  if (head == "rankdiff-oracle") return rankdiff::rank_diff_oracle(rankdiff::parse_key(args), order);
  if (head == "rankdiff-formula") return rankdiff::rank_diff_formula(rankdiff::parse_key(args), order);
  if (head == "sbar") {
    const auto v = parse_ints(args, 2, name);
    if (v[1] < 1) throw Error(ErrorCode::InvalidArgument, "ell must be positive");
    return lambert::s_bar(v[0], v[1], order);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown series '" + name + "'");
}

std::string count_table_csv(int max_n, int mod) {
  if (mod < 1) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  std::ostringstream out;
  out << 'n';
  for (int s = 0; s < mod; ++s) out << ",s=" << s;
  out << '\n';
  for (int n = 0; n <= max_n; ++n) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(mod));
    combinat::for_each_overpartition(n, [&](const combinat::Overpartition& op) {
      const int r = combinat::rank(op);
      ++counts[static_cast<std::size_t>(((r % mod) + mod) % mod)];
    });
    out << n;
    for (const auto c : counts) out << ',' << c;
    out << '\n';
  }
  return out.str();
}

}  // namespace overrank::registry
