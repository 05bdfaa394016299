#include "cosetlab/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "cosetlab/error.hpp"

namespace cosetlab {

void validate(const RunConfig &config) {
  if (config.index_min < 1 || config.index_min > config.index_max)
    throw Error(ErrorCode::InvalidArgument,
                "index range " + std::to_string(config.index_min) + ".." +
                    std::to_string(config.index_max) + " is empty");
  if (config.index_max > max_report_index)
    throw Error(ErrorCode::InvalidArgument,
                "index range exceeds " + std::to_string(max_report_index));
  if (!(config.rank_tolerance > 0) || !(config.cluster_tolerance > 0))
    throw Error(ErrorCode::InvalidArgument, "tolerances must be positive");
  if (config.element_cap == 0)
    throw Error(ErrorCode::InvalidArgument, "element cap must be positive");
}

const char *to_string(RuleVerdict v) {
  switch (v) {
  case RuleVerdict::Consistent:
    return "consistent";
  case RuleVerdict::ExceptionContextual:
    return "exception-contextual";
  case RuleVerdict::FalseDetection:
    return "false-detection";
  case RuleVerdict::Exception:
    return "exception";
  }
  return "?";
}

std::optional<RuleVerdict> parse_rule_verdict(std::string_view text) {
  for (auto v : {RuleVerdict::Consistent, RuleVerdict::ExceptionContextual,
                 RuleVerdict::FalseDetection, RuleVerdict::Exception})
    if (text == to_string(v))
      return v;
  return std::nullopt;
}

RuleVerdict classify(bool is_mic, bool axiom_i, bool axiom_ii, bool contextual) {
  if (is_mic == (axiom_i == axiom_ii))
    return RuleVerdict::Consistent;
  if (is_mic && axiom_i && !axiom_ii && contextual)
    return RuleVerdict::ExceptionContextual;
  if (!is_mic && axiom_i && axiom_ii)
    return RuleVerdict::FalseDetection;
  return RuleVerdict::Exception;
}

namespace {

MicOptions mic_options(const RunConfig &config) {
  MicOptions o;
  o.element_cap = config.element_cap;
  o.exhaustive = config.exhaustive;
  o.seed = config.seed;
  o.rank_tolerance = config.rank_tolerance;
  o.cluster_tolerance = config.cluster_tolerance;
  o.labeling = config.labeling;
  return o;
}

LowIndexOptions low_index_options(const RunConfig &config) {
  LowIndexOptions o;
  o.node_budget = config.node_budget;
  return o;
}

std::string sanitize(std::string s) {
  std::replace_if(s.begin(), s.end(), [](char c) { return c == '\t' || c == '\n'; }, ' ');
  return s;
}

} // namespace

AnalysisRow analyze_class(const std::string &group, const Presentation &pres,
                          const SubgroupRecord &record, const RunConfig &config) {
  AnalysisRow row;
  row.group = group;
  row.index = record.index;
  row.class_ordinal = record.class_ordinal;
  row.class_size = record.class_size;
  for (const auto &w : record.generators.generators)
    row.subgroup_generators.push_back(to_string(w, pres.generator_names));

  const PermGroup p = coset_group(record);
  const auto note = structure_describe(p, config.element_cap);
  row.covering = to_string(covering_type(p));
  row.p_order = to_string(note.order);
  row.structure = note.name;
  row.abelian = note.abelian;
  row.abelian_invariants = note.abelian_invariants;
  row.simple = note.simple;
  row.rank = rank(p);
  row.axiom_i = axiom_i(p);

  if (record.index >= 2) {
    const auto excl = build_geometry(p, Convention::TrivialExcluded);
    const auto incl = build_geometry(p, Convention::TrivialIncluded);
    row.axiom_ii_trivial_excluded = axiom_ii(excl);
    row.axiom_ii_trivial_included = axiom_ii(incl);
    const auto &active = config.convention == Convention::TrivialExcluded ? excl : incl;
    row.axiom_ii = axiom_ii(active);
    row.geometry = sanitize(recognize(active).label());
    row.line_count = active.lines.size();
    row.contextual_line_count = contextual_lines(active, record.table).size();
    row.contextual = row.contextual_line_count > 0;
  } else {
    row.axiom_ii_trivial_excluded = row.axiom_ii_trivial_included = row.axiom_ii = true;
    row.geometry = "point";
  }

  const auto mic = mic_scan(p, mic_options(config));
  row.is_mic = mic.is_mic;
  row.pp = mic.pp;
  row.pp_values = mic.pp_values;
  row.pp_spectrum = mic.pp_spectrum;
  row.gram_rank = mic.gram_rank;
  row.candidates_tested = mic.candidates_tested;
  row.mic_budget_limited = mic.budget_limited;
  row.pauli = mic.pauli_label;
  row.stabilizer = to_string(mic.stabilizer_verdict);
  if (mic.fiducial)
    for (const auto &a : mic.fiducial->amplitudes)
      row.fiducial.emplace_back(a.real(), a.imag());

  row.verdict = classify(row.is_mic, row.axiom_i, row.axiom_ii, row.contextual);
  return row;
}

namespace {

void group_identical(std::vector<AnalysisRow> &rows) {
  using Key = std::tuple<std::size_t, std::string, std::string, bool, bool, std::string,
                         bool, bool, std::optional<std::size_t>, RuleVerdict>;
  auto key = [](const AnalysisRow &r) {
    return Key{r.index,      r.p_order,  r.structure, r.axiom_i, r.axiom_ii,
               r.geometry,   r.contextual, r.is_mic,  r.pp,      r.verdict};
  };
  std::map<Key, std::size_t> count;
  for (const auto &r : rows)
    ++count[key(r)];
  for (auto &r : rows)
    r.identical_analyses = count[key(r)];
}

} // namespace

Report analyze(const Presentation &pres, const RunConfig &config,
               const AnalyzeProgress &progress) {
  validate(config);
  Report report;
  report.config = config;
  for (std::size_t d = config.index_min; d <= config.index_max; ++d) {
    std::vector<SubgroupRecord> classes;
    try {
      auto opts = low_index_options(config);
      if (progress)
        opts.progress = [&](std::uint64_t nodes) { progress(d, nodes); };
      classes = low_index_subgroups(pres, d, opts);
    } catch (const Error &e) {
      report.errors.push_back({config.group, d, std::nullopt, to_string(e.code()), e.what()});
      continue;
    }
    for (const auto &rec : classes) {
      try {
        report.rows.push_back(analyze_class(config.group, pres, rec, config));
      } catch (const Error &e) {
        report.errors.push_back(
            {config.group, d, rec.class_ordinal, to_string(e.code()), e.what()});
      }
    }
  }
  group_identical(report.rows);
  return report;
}

Report analyze(const RunConfig &config) {
  validate(config);
  return analyze(resolve_group(config.group), config);
}

std::string to_tsv(const Report &report) {
  std::ostringstream out;
  out << tsv_header << '\n';
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  for (const auto &r : report.rows) {
    out << r.index << '\t' << r.class_ordinal << '\t' << r.p_order << '\t' << yn(r.axiom_i)
        << '\t' << yn(r.axiom_ii) << '\t' << sanitize(r.geometry) << '\t'
        << yn(r.contextual) << '\t' << yn(r.is_mic) << '\t';
    if (r.pp)
      out << *r.pp;
    else
      out << '-';
    out << '\t' << to_string(r.verdict) << '\n';
  }
  return out.str();
}

SubgroupRecord find_class(const Presentation &pres, std::size_t d, std::size_t ordinal,
                          const LowIndexOptions &opts) {
  if (d < 1)
    throw Error(ErrorCode::InvalidArgument, "index must be at least 1");
  auto classes = low_index_subgroups(pres, d, opts);
  if (ordinal < 1 || ordinal > classes.size())
    throw Error(ErrorCode::InvalidArgument,
                "class " + std::to_string(ordinal) + " does not exist at index " +
                    std::to_string(d) + " (" + std::to_string(classes.size()) +
                    " classes)");
  return std::move(classes[ordinal - 1]);
}

} // namespace cosetlab
