/* C interface to the cosetlab core. Strings returned through char** are owned
 * by the caller and released with cl_string_free. All calls are thread-safe
 * on distinct handles; cl_last_error is per thread. */
#ifndef COSETLAB_H
#define COSETLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define CL_API __attribute__((visibility("default")))
#else
#define CL_API
#endif

typedef enum cl_status {
  CL_OK = 0,
  CL_ERR_PARSE = 1,
  CL_ERR_UNDECLARED_GENERATOR = 2,
  CL_ERR_UNKNOWN_GROUP = 3,
  CL_ERR_OVERFLOW = 4,
  CL_ERR_BUDGET = 5,
  CL_ERR_NOT_TRANSITIVE = 6,
  CL_ERR_INVALID_ARGUMENT = 7,
  CL_ERR_IO = 8,
  CL_ERR_INTERNAL = 9
} cl_status;

typedef enum cl_convention {
  CL_TRIVIAL_EXCLUDED = 0,
  CL_TRIVIAL_INCLUDED = 1
} cl_convention;

typedef enum cl_labeling {
  /* Basis state k is coset k of the standardized coset table. */
  CL_LABEL_COSET = 0,
  /* Breadth-first renumbering along forward generator images. */
  CL_LABEL_FORWARD = 1
} cl_labeling;

typedef struct cl_group cl_group;
typedef struct cl_report cl_report;

typedef struct cl_config {
  size_t index_min;
  size_t index_max;
  cl_convention convention;
  double rank_tolerance;
  double cluster_tolerance;
  size_t element_cap;
  int exhaustive;
  uint64_t seed;
  uint64_t node_budget;
  cl_labeling labeling;
  /* Echoed into the report's config block; may be NULL. */
  const char *out_json;
  const char *out_tsv;
  /* Called during low-index searches with (index, nodes so far); may be NULL. */
  void (*progress)(size_t index, uint64_t nodes, void *user);
  void *progress_user;
} cl_config;

CL_API const char *cl_status_string(cl_status status);
/* Message of the last failed call on this thread; "" when none. */
CL_API const char *cl_last_error(void);
CL_API void cl_string_free(char *s);

CL_API void cl_config_default(cl_config *config);

/* Newline-separated catalog names. */
CL_API cl_status cl_catalog_names(char **out);

/* Catalog name, or a path to a presentation file. */
CL_API cl_status cl_group_resolve(const char *selector, cl_group **out);
CL_API cl_status cl_group_parse(const char *text, cl_group **out);
CL_API void cl_group_free(cl_group *group);
CL_API cl_status cl_group_to_string(const cl_group *group, char **out);

/* counts[d-1] = number of conjugacy classes of index-d subgroups. */
CL_API cl_status cl_eta(const cl_group *group, size_t d_max, uint64_t node_budget,
                        size_t *counts);

/* Per-class failures are recorded in the report, not returned. */
CL_API cl_status cl_analyze(const cl_group *group, const char *label,
                            const cl_config *config, cl_report **out);
CL_API void cl_report_free(cl_report *report);
CL_API size_t cl_report_row_count(const cl_report *report);
CL_API size_t cl_report_error_count(const cl_report *report);
CL_API cl_status cl_report_json(const cl_report *report, char **out);
CL_API cl_status cl_report_tsv(const cl_report *report, char **out);
/* Parses a report document produced by cl_report_json. */
CL_API cl_status cl_report_parse(const char *json, cl_report **out);

/* Details for class `class_ordinal` (1-based) at index d. */
CL_API cl_status cl_geometry_json(const cl_group *group, size_t d, size_t class_ordinal,
                                  cl_convention convention, uint64_t node_budget,
                                  char **out);
CL_API cl_status cl_mic_json(const cl_group *group, size_t d, size_t class_ordinal,
                             const cl_config *config, char **out);

#ifdef __cplusplus
}
#endif

#endif
