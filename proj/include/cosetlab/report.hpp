#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cosetlab/geometry.hpp"
#include "cosetlab/low_index.hpp"
#include "cosetlab/mic.hpp"

namespace cosetlab {

struct RunConfig {
  /// Catalog name or presentation file path.
  std::string group;
  std::size_t index_min = 1;
  std::size_t index_max = 1;
  Convention convention = Convention::TrivialIncluded;
  double rank_tolerance = default_rank_tolerance;
  double cluster_tolerance = default_cluster_tolerance;
  std::size_t element_cap = default_element_cap;
  bool exhaustive = false;
  std::uint64_t seed = 0;
  std::uint64_t node_budget = LowIndexOptions{}.node_budget;
  BasisLabeling labeling = BasisLabeling::Forward;
  std::string out_json;
  std::string out_tsv;

  friend bool operator==(const RunConfig &, const RunConfig &) = default;
};

inline constexpr std::size_t max_report_index = 24;

/// Throws InvalidArgument for an empty or out-of-range index range or
/// non-positive tolerances.
void validate(const RunConfig &config);

enum class RuleVerdict {
  Consistent,
  ExceptionContextual,
  FalseDetection,
  /// Inconsistent with the rule but not one of the two named classes.
  Exception,
};
const char *to_string(RuleVerdict v);
std::optional<RuleVerdict> parse_rule_verdict(std::string_view text);

/// consistent iff mic <=> (i and ii) or (not i and not ii).
RuleVerdict classify(bool is_mic, bool axiom_i, bool axiom_ii, bool contextual);

struct AnalysisRow {
  std::string group;
  std::size_t index = 0;
  std::size_t class_ordinal = 0;
  /// Always 1: each row is one conjugacy class.
  std::size_t multiplicity = 1;
  /// Classes at this index whose analysis columns coincide with this row's,
  /// this one included (the "(xk)" grouping).
  std::size_t identical_analyses = 1;
  /// Number of conjugate subgroups in the class.
  std::size_t class_size = 0;
  std::vector<std::string> subgroup_generators;
  std::string covering;
  /// Decimal |P|.
  std::string p_order;
  std::string structure;
  bool abelian = false;
  std::optional<std::vector<std::uint64_t>> abelian_invariants;
  std::optional<bool> simple;
  std::size_t rank = 0;

  bool axiom_i = false;
  bool axiom_ii_trivial_excluded = false;
  bool axiom_ii_trivial_included = false;
  /// Under the active convention.
  bool axiom_ii = false;
  std::string geometry;
  std::size_t line_count = 0;
  std::size_t contextual_line_count = 0;
  bool contextual = false;

  bool is_mic = false;
  std::optional<std::size_t> pp;
  std::vector<double> pp_values;
  std::vector<std::size_t> pp_spectrum;
  std::size_t gram_rank = 0;
  std::size_t candidates_tested = 0;
  bool mic_budget_limited = false;
  std::string pauli;
  std::string stabilizer;
  /// Fiducial amplitudes as (re, im).
  std::vector<std::pair<double, double>> fiducial;

  RuleVerdict verdict = RuleVerdict::Consistent;

  friend bool operator==(const AnalysisRow &, const AnalysisRow &) = default;
};

struct RowError {
  std::string group;
  std::size_t index = 0;
  std::optional<std::size_t> class_ordinal;
  std::string code;
  std::string message;

  friend bool operator==(const RowError &, const RowError &) = default;
};

struct Report {
  std::optional<RunConfig> config;
  std::vector<AnalysisRow> rows;
  std::vector<RowError> errors;

  friend bool operator==(const Report &, const Report &) = default;
};

/// Analysis of one subgroup class; identical_analyses is left at 1.
AnalysisRow analyze_class(const std::string &group, const Presentation &pres,
                          const SubgroupRecord &record, const RunConfig &config);

/// One row per class per index in config order; failures become RowErrors
/// and the run continues. The group is resolved from config.group.
Report analyze(const RunConfig &config);
/// `progress` receives (index, search nodes) during low-index searches.
using AnalyzeProgress = std::function<void(std::size_t, std::uint64_t)>;
Report analyze(const Presentation &pres, const RunConfig &config,
               const AnalyzeProgress &progress = {});

/// JSON with floats at 17 significant digits; byte-deterministic.
std::string to_json(const Report &report);
/// Throws Error(Parse) on malformed input.
Report report_from_json(const std::string &text);

inline constexpr const char *tsv_header =
    "d\tclass\tP_order\taxiom_i\taxiom_ii\tgeometry\tcontextual\tmic\tpp\tverdict";
std::string to_tsv(const Report &report);

/// Geometry details for one class: lines, stabilizer orders, contextual flags,
/// contextual triangles with their representative words.
std::string geometry_json(const Presentation &pres, const SubgroupRecord &record,
                          Convention convention);

/// MIC scan details for one class.
std::string mic_json(const SubgroupRecord &record, const MicOptions &opts);

/// The class with the given 1-based ordinal at index d.
SubgroupRecord find_class(const Presentation &pres, std::size_t d, std::size_t ordinal,
                          const LowIndexOptions &opts = {});

} // namespace cosetlab
