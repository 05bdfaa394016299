// Command-line front end over the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cosetlab/cosetlab.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_fatal = 1;
constexpr int exit_row_errors = 2;

struct Failure {
  std::string message;
};

void check(cl_status s, const std::string &context) {
  if (s != CL_OK)
    throw Failure{context + ": " + cl_status_string(s) + ": " + cl_last_error()};
}

struct GroupHandle {
  cl_group *g = nullptr;
  explicit GroupHandle(const std::string &selector) {
    check(cl_group_resolve(selector.c_str(), &g), "group '" + selector + "'");
  }
  ~GroupHandle() { cl_group_free(g); }
  GroupHandle(const GroupHandle &) = delete;
  GroupHandle &operator=(const GroupHandle &) = delete;
};

std::string take(char *s) {
  std::string out = s ? s : "";
  cl_string_free(s);
  return out;
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text))
    throw Failure{"cannot write " + path};
}

// "A..B" or a single "D".
std::pair<std::size_t, std::size_t> parse_range(const std::string &text) {
  auto number = [&](const std::string &s) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &pos);
    } catch (const std::exception &) {
      pos = 0;
    }
    if (s.empty() || pos != s.size())
      throw Failure{"bad index range '" + text + "'"};
    return static_cast<std::size_t>(v);
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto d = number(text);
    return {d, d};
  }
  return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

cl_convention parse_convention(const std::string &s) {
  if (s == "excl" || s == "trivial-excluded")
    return CL_TRIVIAL_EXCLUDED;
  if (s == "incl" || s == "trivial-included")
    return CL_TRIVIAL_INCLUDED;
  throw Failure{"unknown convention '" + s + "' (expected excl or incl)"};
}

void report_progress(size_t index, uint64_t nodes, void *) {
  std::fprintf(stderr, "index %zu: %llu search nodes\n", index,
               static_cast<unsigned long long>(nodes));
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Coset geometries, contextuality and MIC detection for finitely presented groups"};
  app.require_subcommand(1);

  cl_config config;
  cl_config_default(&config);
  std::string group, range, convention = "incl", labeling = "forward", out_json, out_tsv;
  std::size_t max_index = 0, index = 0, class_ordinal = 0;
  bool quiet = false;

  auto add_common = [&](CLI::App *cmd) {
    cmd->add_option("--group", group, "catalog name or presentation file")->required();
    cmd->add_option("--node-budget", config.node_budget, "low-index search node budget");
  };
  auto add_mic = [&](CLI::App *cmd) {
    cmd->add_option("--tol", config.rank_tolerance, "relative Gram rank tolerance");
    cmd->add_option("--element-cap", config.element_cap,
                    "largest |P| scanned element by element");
    cmd->add_flag("--exhaustive", config.exhaustive, "all elements, all commuting families");
    cmd->add_option("--seed", config.seed, "seed for sampled scans");
    cmd->add_option("--labeling", labeling, "coset-to-basis map: forward or coset");
  };

  auto *analyze = app.add_subcommand("analyze", "analyze every subgroup class in an index range");
  add_common(analyze);
  add_mic(analyze);
  analyze->add_option("--index", range, "index range A..B")->required();
  analyze->add_option("--convention", convention, "excl or incl");
  analyze->add_option("--out", out_json, "JSON report path")->required();
  analyze->add_option("--tsv", out_tsv, "TSV summary path");
  analyze->add_flag("--quiet", quiet, "no progress output");

  auto *eta = app.add_subcommand("eta", "subgroup class counts per index");
  add_common(eta);
  eta->add_option("--max", max_index, "largest index")->required();

  auto *geometry = app.add_subcommand("geometry", "coset geometry of one class");
  add_common(geometry);
  geometry->add_option("--index", index, "index d")->required();
  geometry->add_option("--class", class_ordinal, "1-based class ordinal")->required();
  geometry->add_option("--convention", convention, "excl or incl");

  auto *mic = app.add_subcommand("mic", "MIC scan of one class");
  add_common(mic);
  add_mic(mic);
  mic->add_option("--index", index, "index d")->required();
  mic->add_option("--class", class_ordinal, "1-based class ordinal")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_fatal;
  }

  try {
    if (labeling != "forward" && labeling != "coset")
      throw Failure{"unknown labeling '" + labeling + "' (expected forward or coset)"};
    config.labeling = labeling == "coset" ? CL_LABEL_COSET : CL_LABEL_FORWARD;
    GroupHandle g(group);
    if (*analyze) {
      const auto [lo, hi] = parse_range(range);
      config.index_min = lo;
      config.index_max = hi;
      config.convention = parse_convention(convention);
      config.out_json = out_json.c_str();
      config.out_tsv = out_tsv.c_str();
      if (!quiet)
        config.progress = report_progress;
      cl_report *raw = nullptr;
      check(cl_analyze(g.g, group.c_str(), &config, &raw), "analyze");
      std::unique_ptr<cl_report, void (*)(cl_report *)> report(raw, cl_report_free);
      char *text = nullptr;
      check(cl_report_json(report.get(), &text), "json");
      write_file(out_json, take(text));
      if (!out_tsv.empty()) {
        check(cl_report_tsv(report.get(), &text), "tsv");
        write_file(out_tsv, take(text));
      }
      const auto errors = cl_report_error_count(report.get());
      std::cerr << cl_report_row_count(report.get()) << " rows, " << errors << " errors\n";
      return errors ? exit_row_errors : exit_ok;
    }
    if (*eta) {
      std::vector<size_t> counts(max_index);
      check(cl_eta(g.g, max_index, config.node_budget, counts.data()), "eta");
      for (std::size_t d = 0; d < max_index; ++d)
        std::cout << d + 1 << '\t' << counts[d] << '\n';
      return exit_ok;
    }
    char *text = nullptr;
    if (*geometry) {
      check(cl_geometry_json(g.g, index, class_ordinal, parse_convention(convention),
                             config.node_budget, &text),
            "geometry");
    } else {
      check(cl_mic_json(g.g, index, class_ordinal, &config, &text), "mic");
    }
    std::cout << take(text) << '\n';
    return exit_ok;
  } catch (const Failure &f) {
    std::cerr << "cosetlab: " << f.message << '\n';
    return exit_fatal;
  }
}
