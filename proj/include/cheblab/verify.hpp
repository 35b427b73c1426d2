#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cheblab/character.hpp"
#include "json.hpp"

namespace cheblab {

using Json = nlohmann::json;

enum class OutputFormat { Json, Csv, Text };

/// Caps, constant multipliers (default 1) and output settings shared by every subcommand.
struct RunConfig {
  std::map<std::string, double> constants;
  std::size_t subgroup_cap = 512;
  std::size_t monomial_cap = 384;
  std::uint64_t census_cap = 10000000;
  OutputFormat format = OutputFormat::Json;
  std::uint64_t seed = 0;

  double constant(const std::string& name) const;
  /// Throws std::invalid_argument for nonpositive caps or overrides.
  void validate() const;
  /// Reads {"c1": 2.0, ...} into `constants`.
  void load_constants(const Json& j);
};

struct Corpus {
  std::string name;
  std::vector<GroupSpec> groups;
  double budget_seconds = 600;
};
std::vector<std::vector<int>> quaternion_cayley_table();
Corpus default_corpus();
/// "default", or "small" (groups of order <= 24 from the default list).
Corpus corpus_by_name(const std::string& name);

/// Rounds to 12 significant digits so dumps are stable across platforms.
double round12(double v);
/// Exact row and column orthogonality plus sum chi(1)^2 = |G|.
bool table_orthogonal(const CharacterTable& T);

struct TensorConstituentReport {
  std::size_t pairs = 0;
  std::size_t tau_checks = 0;
  bool holds = true;
  std::string first_failure;
};
/// 1 in chi (x) psi iff psi = conj chi; multiplicity one in chi (x) conj chi;
/// for chi(1) >= 2 some constituent tau outside {chi, conj chi, 1} exists, and
/// every such tau has chi in chi (x) tau and 1 not in it.
TensorConstituentReport tensor_constituent_check(const CharacterTable& T);

struct SuiteResult {
  std::string name;
  bool pass = false;
  double seconds = 0;
  Json detail;
};

SuiteResult suite_character_tables(const Corpus& corpus);
SuiteResult suite_section2();
SuiteResult suite_coefficients(const Corpus& corpus, std::size_t max_order = 48, int l_max = 6);
SuiteResult suite_tensor_constituents(const Corpus& corpus);
SuiteResult suite_cauchy(std::uint64_t seed);
SuiteResult suite_zeta();
SuiteResult suite_conductor_discriminant();
SuiteResult suite_census();
SuiteResult suite_least_prime();
SuiteResult suite_base_change();
SuiteResult suite_smoothing(std::uint64_t seed);
SuiteResult suite_sieve(std::uint64_t seed);
SuiteResult suite_ahc(const Corpus& corpus, const RunConfig& config);

/// Every suite above, in a fixed order.
std::vector<SuiteResult> verify_all(const Corpus& corpus, const RunConfig& config);
Json suites_json(const std::vector<SuiteResult>& suites, bool include_timing = false);

}  // namespace cheblab
