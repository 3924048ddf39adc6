#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core/identity_report.hpp"
#include "rankdiff/formula.hpp"

namespace overrank::registry {

using qseries::Exponent;

enum class Tier { Product, Lambert, Oracle, Combination };

std::string to_string(Tier tier);

struct IdentityEntry {
  std::string id;
  std::string anchor;
  Exponent default_order = 0;
  Tier tier = Tier::Product;
  std::function<IdentityReport(Exponent)> run;
};

/// Seed for sampled instantiations when OVERRANK_SEED is unset.
inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// OVERRANK_SEED if set and numeric, kDefaultSeed otherwise.
std::uint64_t seed_from_environment();

struct RegistryOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Corrupts the transcription behind one table-driven entry.
  struct Corruption {
    std::string id;
    rankdiff::Mutation mutation;
  };
  std::optional<Corruption> corruption;
};

class Registry {
 public:
  explicit Registry(RegistryOptions options = {});

  /// Sorted by id.
  const std::vector<IdentityEntry>& entries() const { return entries_; }
  std::uint64_t seed() const { return options_.seed; }

  /// Throws UnknownIdentity.
  const IdentityEntry& find(const std::string& id) const;

  /// Library errors raised while checking become a failing report with the
  /// error in its notes. runtime_ms stays 0 unless `timings` is set.
  IdentityReport verify(const std::string& id, Exponent order, bool timings = false) const;

  /// Every entry at round(default_order * order_scale), reports in id order.
  std::vector<IdentityReport> run_suite(double order_scale, int jobs, bool timings = false) const;

 private:
  IdentityReport run_entry(const IdentityEntry& entry, Exponent order, bool timings) const;

  RegistryOptions options_;
  std::vector<IdentityEntry> entries_;
};

/// Registry seeded from the environment, built once.
const Registry& default_registry();

/// Entry list for the given options; defined alongside the entry catalogue.
std::vector<IdentityEntry> build_entries(const RegistryOptions& options);

Exponent scaled_order(Exponent default_order, double order_scale);

}  // namespace overrank::registry
