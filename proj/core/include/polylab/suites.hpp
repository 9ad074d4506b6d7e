#pragma once

// Seeded property suites. Each property runs a fixed number of cases and
// records the worst residual against its threshold; the CLI `verify`
// subcommand and the acceptance tests drive these.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polylab {

/// Named thresholds with defaults. Unknown names are rejected.
class Tolerances {
 public:
  Tolerances();

  double get(std::string_view name) const;
  /// Throws UsageError for an unknown name or a negative / non-finite value.
  void set(std::string_view name, double value);
  /// Parses "name=value". Throws UsageError.
  void set_from_string(std::string_view assignment);

  const std::map<std::string, double, std::less<>>& values() const { return values_; }

 private:
  std::map<std::string, double, std::less<>> values_;
};

struct SuiteConfig {
  std::uint64_t seed = 42;
  /// Overrides every property's default case count when set.
  std::optional<std::size_t> samples;
  Tolerances tol;
};

struct PropertyResult {
  std::string suite;
  std::string name;
  std::string description;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double worst = 0.0;       // worst observed residual (or measure)
  double threshold = 0.0;   // tolerance it was held to
  std::string note;

  bool passed() const { return failures == 0; }
};

std::vector<std::string> suite_names();  // metrics, representation, rigidity
bool is_known_suite(std::string_view name);  // also accepts "all"

/// Throws UsageError for an unknown suite.
std::vector<PropertyResult> run_suite(std::string_view name, const SuiteConfig& config);

// Individual properties. `cases` falls back to the documented default.
namespace properties {

PropertyResult tracial_identity(const SuiteConfig& c);
PropertyResult pythagoras(const SuiteConfig& c);
PropertyResult holder(const SuiteConfig& c);
PropertyResult holder_equality(const SuiteConfig& c);
PropertyResult converse_pythagoras(const SuiteConfig& c);
PropertyResult eigen_reconstruction(const SuiteConfig& c);
PropertyResult power_roundtrip(const SuiteConfig& c);

PropertyResult oa_sa(const SuiteConfig& c);
PropertyResult representation_roundtrip(const SuiteConfig& c);
PropertyResult uniqueness(const SuiteConfig& c);
PropertyResult extremal_attainment(const SuiteConfig& c);
PropertyResult sandwich_scalar(const SuiteConfig& c);
PropertyResult sandwich_vector(const SuiteConfig& c);
PropertyResult hermitian_correspondence(const SuiteConfig& c);

PropertyResult rigidity_witness(const SuiteConfig& c);
PropertyResult rigidity_none(const SuiteConfig& c);
PropertyResult zero_chain(const SuiteConfig& c);

}  // namespace properties

}  // namespace polylab
