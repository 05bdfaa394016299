#include "cosetlab/cosetlab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "cosetlab/error.hpp"
#include "cosetlab/report.hpp"

struct cl_group {
  cosetlab::Presentation pres;
};

struct cl_report {
  cosetlab::Report report;
};

namespace {

thread_local std::string last_error;

cl_status status_of(cosetlab::ErrorCode code) {
  using cosetlab::ErrorCode;
  switch (code) {
  case ErrorCode::Parse:
    return CL_ERR_PARSE;
  case ErrorCode::UndeclaredGenerator:
    return CL_ERR_UNDECLARED_GENERATOR;
  case ErrorCode::UnknownGroup:
    return CL_ERR_UNKNOWN_GROUP;
  case ErrorCode::Overflow:
    return CL_ERR_OVERFLOW;
  case ErrorCode::BudgetExceeded:
    return CL_ERR_BUDGET;
  case ErrorCode::NotTransitive:
    return CL_ERR_NOT_TRANSITIVE;
  case ErrorCode::InvalidArgument:
    return CL_ERR_INVALID_ARGUMENT;
  case ErrorCode::Io:
    return CL_ERR_IO;
  }
  return CL_ERR_INTERNAL;
}

template <class F> cl_status guarded(F &&f) {
  last_error.clear();
  try {
    f();
    return CL_OK;
  } catch (const cosetlab::Error &e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc &) {
    last_error = "out of memory";
    return CL_ERR_INTERNAL;
  } catch (const std::exception &e) {
    last_error = e.what();
    return CL_ERR_INTERNAL;
  }
}

void require(const void *p, const char *what) {
  if (!p)
    throw cosetlab::Error(cosetlab::ErrorCode::InvalidArgument,
                          std::string(what) + " must not be null");
}

char *copy_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cosetlab::Convention convention_of(cl_convention c) {
  return c == CL_TRIVIAL_EXCLUDED ? cosetlab::Convention::TrivialExcluded
                                  : cosetlab::Convention::TrivialIncluded;
}

cosetlab::BasisLabeling labeling_of(cl_labeling l) {
  return l == CL_LABEL_COSET ? cosetlab::BasisLabeling::Coset
                             : cosetlab::BasisLabeling::Forward;
}

cosetlab::RunConfig run_config(const cl_config &c, const char *label) {
  cosetlab::RunConfig r;
  r.group = label ? label : "";
  r.index_min = c.index_min;
  r.index_max = c.index_max;
  r.convention = convention_of(c.convention);
  r.rank_tolerance = c.rank_tolerance;
  r.cluster_tolerance = c.cluster_tolerance;
  r.element_cap = c.element_cap;
  r.exhaustive = c.exhaustive != 0;
  r.seed = c.seed;
  r.node_budget = c.node_budget;
  r.labeling = labeling_of(c.labeling);
  r.out_json = c.out_json ? c.out_json : "";
  r.out_tsv = c.out_tsv ? c.out_tsv : "";
  return r;
}

} // namespace

extern "C" {

const char *cl_status_string(cl_status status) {
  switch (status) {
  case CL_OK:
    return "ok";
  case CL_ERR_PARSE:
    return "parse error";
  case CL_ERR_UNDECLARED_GENERATOR:
    return "undeclared generator";
  case CL_ERR_UNKNOWN_GROUP:
    return "unknown group";
  case CL_ERR_OVERFLOW:
    return "coset overflow";
  case CL_ERR_BUDGET:
    return "budget exceeded";
  case CL_ERR_NOT_TRANSITIVE:
    return "not transitive";
  case CL_ERR_INVALID_ARGUMENT:
    return "invalid argument";
  case CL_ERR_IO:
    return "i/o error";
  case CL_ERR_INTERNAL:
    return "internal error";
  }
  return "unknown status";
}

const char *cl_last_error(void) { return last_error.c_str(); }

void cl_string_free(char *s) { std::free(s); }

void cl_config_default(cl_config *config) {
  if (!config)
    return;
  const cosetlab::RunConfig d;
  config->index_min = d.index_min;
  config->index_max = d.index_max;
  config->convention = d.convention == cosetlab::Convention::TrivialExcluded
                           ? CL_TRIVIAL_EXCLUDED
                           : CL_TRIVIAL_INCLUDED;
  config->rank_tolerance = d.rank_tolerance;
  config->cluster_tolerance = d.cluster_tolerance;
  config->element_cap = d.element_cap;
  config->exhaustive = d.exhaustive ? 1 : 0;
  config->seed = d.seed;
  config->node_budget = d.node_budget;
  config->labeling =
      d.labeling == cosetlab::BasisLabeling::Coset ? CL_LABEL_COSET : CL_LABEL_FORWARD;
  config->out_json = nullptr;
  config->out_tsv = nullptr;
  config->progress = nullptr;
  config->progress_user = nullptr;
}

cl_status cl_catalog_names(char **out) {
  return guarded([&] {
    require(out, "out");
    std::string s;
    for (const auto &n : cosetlab::catalog_names())
      s += n + "\n";
    *out = copy_string(s);
  });
}

cl_status cl_group_resolve(const char *selector, cl_group **out) {
  return guarded([&] {
    require(selector, "selector");
    require(out, "out");
    *out = new cl_group{cosetlab::resolve_group(selector)};
  });
}

cl_status cl_group_parse(const char *text, cl_group **out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new cl_group{cosetlab::parse_presentation(text)};
  });
}

void cl_group_free(cl_group *group) { delete group; }

cl_status cl_group_to_string(const cl_group *group, char **out) {
  return guarded([&] {
    require(group, "group");
    require(out, "out");
    *out = copy_string(cosetlab::to_string(group->pres));
  });
}

cl_status cl_eta(const cl_group *group, size_t d_max, uint64_t node_budget,
                 size_t *counts) {
  return guarded([&] {
    require(group, "group");
    require(counts, "counts");
    cosetlab::LowIndexOptions opts;
    opts.node_budget = node_budget;
    const auto eta = cosetlab::eta_sequence(group->pres, d_max, opts);
    for (size_t i = 0; i < d_max; ++i)
      counts[i] = i < eta.size() ? eta[i] : 0;
  });
}

cl_status cl_analyze(const cl_group *group, const char *label, const cl_config *config,
                     cl_report **out) {
  return guarded([&] {
    require(group, "group");
    require(config, "config");
    require(out, "out");
    cosetlab::AnalyzeProgress progress;
    if (config->progress)
      progress = [config](std::size_t d, std::uint64_t nodes) {
        config->progress(d, nodes, config->progress_user);
      };
    *out = new cl_report{
        cosetlab::analyze(group->pres, run_config(*config, label), progress)};
  });
}

void cl_report_free(cl_report *report) { delete report; }

size_t cl_report_row_count(const cl_report *report) {
  return report ? report->report.rows.size() : 0;
}

size_t cl_report_error_count(const cl_report *report) {
  return report ? report->report.errors.size() : 0;
}

cl_status cl_report_json(const cl_report *report, char **out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = copy_string(cosetlab::to_json(report->report));
  });
}

cl_status cl_report_tsv(const cl_report *report, char **out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = copy_string(cosetlab::to_tsv(report->report));
  });
}

cl_status cl_report_parse(const char *json, cl_report **out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new cl_report{cosetlab::report_from_json(json)};
  });
}

cl_status cl_geometry_json(const cl_group *group, size_t d, size_t class_ordinal,
                           cl_convention convention, uint64_t node_budget, char **out) {
  return guarded([&] {
    require(group, "group");
    require(out, "out");
    cosetlab::LowIndexOptions opts;
    opts.node_budget = node_budget;
    const auto rec = cosetlab::find_class(group->pres, d, class_ordinal, opts);
    *out = copy_string(cosetlab::geometry_json(group->pres, rec, convention_of(convention)));
  });
}

cl_status cl_mic_json(const cl_group *group, size_t d, size_t class_ordinal,
                      const cl_config *config, char **out) {
  return guarded([&] {
    require(group, "group");
    require(config, "config");
    require(out, "out");
    cosetlab::LowIndexOptions lopts;
    lopts.node_budget = config->node_budget;
    const auto rec = cosetlab::find_class(group->pres, d, class_ordinal, lopts);
    cosetlab::MicOptions m;
    m.element_cap = config->element_cap;
    m.exhaustive = config->exhaustive != 0;
    m.seed = config->seed;
    m.rank_tolerance = config->rank_tolerance;
    m.cluster_tolerance = config->cluster_tolerance;
    m.labeling = labeling_of(config->labeling);
    *out = copy_string(cosetlab::mic_json(rec, m));
  });
}

} // extern "C"
