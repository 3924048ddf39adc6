#include "registry/registry.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "core/error.hpp"

namespace overrank::registry {

std::string to_string(Tier tier) {
  switch (tier) {
    case Tier::Product: return "product";
    case Tier::Lambert: return "lambert";
    case Tier::Oracle: return "oracle";
    case Tier::Combination: return "combination";
  }
  return "?";
}

std::uint64_t seed_from_environment() {
  const char* text = std::getenv("OVERRANK_SEED");
  if (text == nullptr || *text == '\0') return kDefaultSeed;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(text, &end, 10);
  return *end == '\0' ? static_cast<std::uint64_t>(v) : kDefaultSeed;
}

Registry::Registry(RegistryOptions options) : options_(std::move(options)), entries_(build_entries(options_)) {
  std::sort(entries_.begin(), entries_.end(), [](const IdentityEntry& a, const IdentityEntry& b) { return a.id < b.id; });
  const auto dup = std::adjacent_find(entries_.begin(), entries_.end(),
                                      [](const IdentityEntry& a, const IdentityEntry& b) { return a.id == b.id; });
  if (dup != entries_.end()) throw Error(ErrorCode::InvalidArgument, "duplicate identity id " + dup->id);
}

const IdentityEntry& Registry::find(const std::string& id) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), id,
                                   [](const IdentityEntry& e, const std::string& key) { return e.id < key; });
  if (it == entries_.end() || it->id != id) throw Error(ErrorCode::UnknownIdentity, "no identity with id '" + id + "'");
  return *it;
}

IdentityReport Registry::run_entry(const IdentityEntry& entry, Exponent order, bool timings) const {
  const auto start = std::chrono::steady_clock::now();
  IdentityReport report;
  try {
    report = entry.run(order);
  } catch (const Error& e) {
    report = IdentityReport{};
    report.pass = false;
    report.checked_order = order;
    report.notes.push_back(e.what());
  }
  report.id = entry.id;
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  report.runtime_ms = timings ? elapsed.count() : 0.0;
  return report;
}

IdentityReport Registry::verify(const std::string& id, Exponent order, bool timings) const {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "order must be positive");
  return run_entry(find(id), order, timings);
}

Exponent scaled_order(Exponent default_order, double order_scale) {
  if (!(order_scale > 0)) throw Error(ErrorCode::InvalidArgument, "order scale must be positive");
  return std::max<Exponent>(1, std::llround(static_cast<double>(default_order) * order_scale));
}

std::vector<IdentityReport> Registry::run_suite(double order_scale, int jobs, bool timings) const {
  if (jobs < 1) throw Error(ErrorCode::InvalidArgument, "jobs must be positive");
  std::vector<Exponent> orders;
  for (const IdentityEntry& e : entries_) orders.push_back(scaled_order(e.default_order, order_scale));

  // Slots are written by index, so the output order does not depend on scheduling.
  std::vector<IdentityReport> reports(entries_.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries_.size(); i = next++) reports[i] = run_entry(entries_[i], orders[i], timings);
  };
  const auto n = static_cast<std::size_t>(std::min<std::size_t>(static_cast<std::size_t>(jobs), entries_.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return reports;
}

const Registry& default_registry() {
  static const Registry registry(RegistryOptions{seed_from_environment(), std::nullopt});
  return registry;
}

}  // namespace overrank::registry
