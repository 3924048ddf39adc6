#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "overrank/overrank.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct StringDeleter {
  void operator()(char* s) const { ovr_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

int fail(ovr_status status) {
  std::fprintf(stderr, "error (%d): %s\n", static_cast<int>(status), ovr_last_error());
  return kExitUsage;
}

int print(char* text) {
  OwnedString owned(text);
  std::fputs(owned.get(), stdout);
  return kExitPass;
}

int run_verify(const std::string& id, long long order, bool json, bool timings) {
  ovr_report* raw = nullptr;
  const ovr_status st = ovr_verify(id.c_str(), order, timings ? 1 : 0, &raw);
  if (st != OVR_OK) return fail(st);
  std::unique_ptr<ovr_report, decltype(&ovr_report_free)> report(raw, ovr_report_free);
  char* text = nullptr;
  const ovr_status rs = ovr_report_render(report.get(), json ? OVR_FORMAT_JSON : OVR_FORMAT_TEXT, &text);
  if (rs != OVR_OK) return fail(rs);
  print(text);
  return ovr_report_pass(report.get()) ? kExitPass : kExitMismatch;
}

int run_suite(double scale, int jobs, ovr_format format, bool timings) {
  ovr_suite* raw = nullptr;
  const ovr_status st = ovr_suite_run(scale, jobs, timings ? 1 : 0, &raw);
  if (st != OVR_OK) return fail(st);
  std::unique_ptr<ovr_suite, decltype(&ovr_suite_free)> suite(raw, ovr_suite_free);
  char* text = nullptr;
  const ovr_status rs = ovr_suite_render(suite.get(), format, &text);
  if (rs != OVR_OK) return fail(rs);
  print(text);
  return ovr_suite_failures(suite.get()) == 0 ? kExitPass : kExitMismatch;
}

int run_series(const std::string& name, long long order) {
  ovr_series* raw = nullptr;
  const ovr_status st = ovr_series_named(name.c_str(), order, &raw);
  if (st != OVR_OK) return fail(st);
  std::unique_ptr<ovr_series, decltype(&ovr_series_free)> series(raw, ovr_series_free);
  char* text = nullptr;
  const ovr_status rs = ovr_series_csv(series.get(), &text);
  return rs == OVR_OK ? print(text) : fail(rs);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of overpartition rank-difference identities"};
  app.require_subcommand(1);

  std::string id;
  long long order = 0;
  bool json = false;
  bool csv = false;
  bool timings = false;
  auto* verify = app.add_subcommand("verify", "Check one registered identity to a given order");
  verify->add_option("--id", id, "Identity id (see `list`)")->required();
  verify->add_option("--order", order, "Truncation order")->required()->check(CLI::PositiveNumber);
  verify->add_flag("--json", json, "Print the report as JSON");
  verify->add_flag("--timings", timings, "Record wall-clock runtime in the report");

  double scale = 1.0;
  int jobs = 1;
  auto* suite = app.add_subcommand("suite", "Check every registered identity at its default order");
  suite->add_option("--order-scale", scale, "Multiplier for every default order")->check(CLI::PositiveNumber);
  suite->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  auto* suite_json = suite->add_flag("--json", json, "JSON array of reports");
  auto* suite_csv = suite->add_flag("--csv", csv, "CSV table of reports");
  suite_json->excludes(suite_csv);
  suite->add_flag("--timings", timings, "Record wall-clock runtimes (output is then not reproducible)");

  std::string name;
  auto* series = app.add_subcommand("series", "Print coefficients of a named series");
  series->add_option("--name", name, "pbar | nbar:s,m | rankdiff-oracle:KEY | rankdiff-formula:KEY | sbar:b,ell")
      ->required();
  series->add_option("--order", order, "Truncation order")->required()->check(CLI::NonNegativeNumber);
  series->add_flag("--csv", csv, "CSV output (the only format)");

  int max_n = 0;
  int mod = 0;
  auto* count = app.add_subcommand("count", "Tabulate Nbar(s, mod, n) by enumeration");
  count->add_option("--n", max_n, "Largest n")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--mod", mod, "Modulus")->required()->check(CLI::PositiveNumber);

  auto* list = app.add_subcommand("list", "List registered identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (verify->parsed()) return run_verify(id, order, json, timings);
  if (suite->parsed()) return run_suite(scale, jobs, json ? OVR_FORMAT_JSON : csv ? OVR_FORMAT_CSV : OVR_FORMAT_TEXT, timings);
  if (series->parsed()) return run_series(name, order);
  if (count->parsed()) {
    char* text = nullptr;
    const ovr_status st = ovr_count_table(max_n, mod, &text);
    return st == OVR_OK ? print(text) : fail(st);
  }
  if (list->parsed()) {
    char* text = nullptr;
    const ovr_status st = ovr_list(&text);
    return st == OVR_OK ? print(text) : fail(st);
  }
  return kExitUsage;
}
