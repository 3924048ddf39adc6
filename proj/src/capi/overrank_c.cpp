#include "overrank/overrank.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/error.hpp"
#include "registry/report_json.hpp"

struct ovr_series {
  overrank::qseries::LaurentSeries value;
};

struct ovr_report {
  overrank::IdentityReport value;
};

struct ovr_suite {
  std::vector<overrank::IdentityReport> reports;
};

namespace {

thread_local std::string last_error;

ovr_status status_of(overrank::ErrorCode code) {
  using overrank::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return OVR_INVALID_ARGUMENT;
    case ErrorCode::ZeroLeadingTerm: return OVR_ZERO_LEADING_TERM;
    case ErrorCode::BeyondTruncation: return OVR_BEYOND_TRUNCATION;
    case ErrorCode::NegativeExponent: return OVR_NEGATIVE_EXPONENT;
    case ErrorCode::ZeroExponent: return OVR_ZERO_EXPONENT;
    case ErrorCode::PoleHit: return OVR_POLE_HIT;
    case ErrorCode::CapExceeded: return OVR_CAP_EXCEEDED;
    case ErrorCode::UnknownIdentity: return OVR_UNKNOWN_IDENTITY;
    case ErrorCode::NotPowerSeries: return OVR_NOT_POWER_SERIES;
    case ErrorCode::InsufficientPrecision: return OVR_INSUFFICIENT_PRECISION;
  }
  return OVR_INTERNAL;
}

// Runs f, mapping exceptions to status codes; no exception crosses the C boundary.
template <class F>
ovr_status guarded(F&& f) noexcept {
  try {
    last_error.clear();
    f();
    return OVR_OK;
  } catch (const overrank::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return OVR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return OVR_INTERNAL;
  }
}

ovr_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return OVR_NULL_ARGUMENT;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* ovr_last_error(void) { return last_error.c_str(); }

void ovr_string_free(char* s) { std::free(s); }

ovr_status ovr_series_named(const char* name, int64_t order, ovr_series** out) {
  if (name == nullptr) return null_argument("name");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new ovr_series{overrank::registry::named_series(name, order)}; });
}

void ovr_series_free(ovr_series* s) { delete s; }

int64_t ovr_series_min_exp(const ovr_series* s) { return s == nullptr ? 0 : s->value.min_exp(); }

int64_t ovr_series_order(const ovr_series* s) { return s == nullptr ? 0 : s->value.order(); }

ovr_status ovr_series_coefficient(const ovr_series* s, int64_t exp, char** fraction) {
  if (s == nullptr) return null_argument("series");
  if (fraction == nullptr) return null_argument("fraction");
  return guarded([&] { *fraction = duplicate(overrank::qseries::to_fraction_string(s->value.coeff(exp))); });
}

ovr_status ovr_series_csv(const ovr_series* s, char** out) {
  if (s == nullptr) return null_argument("series");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = duplicate(overrank::registry::series_csv(s->value)); });
}

size_t ovr_identity_count(void) {
  size_t n = 0;
  guarded([&] { n = overrank::registry::default_registry().entries().size(); });
  return n;
}

ovr_status ovr_list(char** out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = duplicate(overrank::registry::list_text(overrank::registry::default_registry())); });
}

ovr_status ovr_verify(const char* id, int64_t order, int timings, ovr_report** out) {
  if (id == nullptr) return null_argument("id");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    *out = new ovr_report{overrank::registry::default_registry().verify(id, order, timings != 0)};
  });
}

int ovr_report_pass(const ovr_report* r) { return r != nullptr && r->value.pass ? 1 : 0; }

ovr_status ovr_report_render(const ovr_report* r, ovr_format format, char** out) {
  if (r == nullptr) return null_argument("report");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    using namespace overrank::registry;
    switch (format) {
      case OVR_FORMAT_JSON: *out = duplicate(report_json(r->value)); return;
      case OVR_FORMAT_CSV: *out = duplicate(suite_csv({r->value})); return;
      case OVR_FORMAT_TEXT: *out = duplicate(report_text(r->value)); return;
    }
    throw overrank::Error(overrank::ErrorCode::InvalidArgument, "unknown format");
  });
}

void ovr_report_free(ovr_report* r) { delete r; }

ovr_status ovr_suite_run(double order_scale, int jobs, int timings, ovr_suite** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    *out = new ovr_suite{overrank::registry::default_registry().run_suite(order_scale, jobs, timings != 0)};
  });
}

size_t ovr_suite_size(const ovr_suite* s) { return s == nullptr ? 0 : s->reports.size(); }

size_t ovr_suite_failures(const ovr_suite* s) {
  if (s == nullptr) return 0;
  size_t n = 0;
  for (const auto& r : s->reports) n += r.pass ? 0 : 1;
  return n;
}

ovr_status ovr_suite_render(const ovr_suite* s, ovr_format format, char** out) {
  if (s == nullptr) return null_argument("suite");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    using namespace overrank::registry;
    switch (format) {
      case OVR_FORMAT_JSON: *out = duplicate(suite_json(s->reports)); return;
      case OVR_FORMAT_CSV: *out = duplicate(suite_csv(s->reports)); return;
      case OVR_FORMAT_TEXT: *out = duplicate(suite_text(s->reports)); return;
    }
    throw overrank::Error(overrank::ErrorCode::InvalidArgument, "unknown format");
  });
}

void ovr_suite_free(ovr_suite* s) { delete s; }

ovr_status ovr_count_table(int max_n, int mod, char** out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = duplicate(overrank::registry::count_table_csv(max_n, mod)); });
}

}  // extern "C"
