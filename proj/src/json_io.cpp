#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "cosetlab/error.hpp"
#include "cosetlab/report.hpp"

namespace cosetlab {

namespace {

using Json = nlohmann::ordered_json;

// Compact output; doubles at 17 significant digits so parsing recovers them
// bit for bit.
void write(const Json &j, std::string &out) {
  switch (j.type()) {
  case Json::value_t::object: {
    out += '{';
    bool first = true;
    for (const auto &[k, v] : j.items()) {
      if (!first)
        out += ',';
      first = false;
      out += Json(k).dump();
      out += ':';
      write(v, out);
    }
    out += '}';
    return;
  }
  case Json::value_t::array: {
    out += '[';
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i)
        out += ',';
      write(j[i], out);
    }
    out += ']';
    return;
  }
  case Json::value_t::number_float: {
    const double x = j.get<double>();
    if (!std::isfinite(x)) {
      out += "null";
      return;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    std::string s = buf;
    if (s.find_first_of(".eE") == std::string::npos)
      s += ".0";
    out += s;
    return;
  }
  default:
    out += j.dump();
  }
}

std::string dump(const Json &j) {
  std::string out;
  write(j, out);
  return out;
}

template <class T> Json optional_json(const std::optional<T> &v) {
  return v ? Json(*v) : Json(nullptr);
}

Json config_json(const RunConfig &c) {
  Json j;
  j["group"] = c.group;
  j["index_min"] = c.index_min;
  j["index_max"] = c.index_max;
  j["convention"] = to_string(c.convention);
  j["rank_tolerance"] = c.rank_tolerance;
  j["cluster_tolerance"] = c.cluster_tolerance;
  j["element_cap"] = c.element_cap;
  j["exhaustive"] = c.exhaustive;
  j["seed"] = c.seed;
  j["node_budget"] = c.node_budget;
  j["labeling"] = to_string(c.labeling);
  j["out_json"] = c.out_json;
  j["out_tsv"] = c.out_tsv;
  return j;
}

Json row_json(const AnalysisRow &r) {
  Json j;
  j["group"] = r.group;
  j["d"] = r.index;
  j["class"] = r.class_ordinal;
  j["multiplicity"] = r.multiplicity;
  j["identical_analyses"] = r.identical_analyses;
  j["class_size"] = r.class_size;
  j["subgroup_generators"] = r.subgroup_generators;
  j["covering"] = r.covering;
  j["P_order"] = r.p_order;
  j["structure"] = r.structure;
  j["abelian"] = r.abelian;
  j["abelian_invariants"] = optional_json(r.abelian_invariants);
  j["simple"] = optional_json(r.simple);
  j["rank"] = r.rank;
  j["axiom_i"] = r.axiom_i;
  j["axiom_ii_trivial_excluded"] = r.axiom_ii_trivial_excluded;
  j["axiom_ii_trivial_included"] = r.axiom_ii_trivial_included;
  j["axiom_ii"] = r.axiom_ii;
  j["geometry"] = r.geometry;
  j["line_count"] = r.line_count;
  j["contextual_line_count"] = r.contextual_line_count;
  j["contextual"] = r.contextual;
  j["is_mic"] = r.is_mic;
  j["pp"] = optional_json(r.pp);
  j["pp_values"] = r.pp_values;
  j["pp_spectrum"] = r.pp_spectrum;
  j["gram_rank"] = r.gram_rank;
  j["candidates_tested"] = r.candidates_tested;
  j["mic_budget_limited"] = r.mic_budget_limited;
  j["pauli"] = r.pauli;
  j["stabilizer"] = r.stabilizer;
  Json fid = Json::array();
  for (auto [re, im] : r.fiducial)
    fid.push_back(Json::array({re, im}));
  j["fiducial"] = fid;
  j["verdict"] = to_string(r.verdict);
  return j;
}

Json error_json(const RowError &e) {
  Json j;
  j["group"] = e.group;
  j["d"] = e.index;
  j["class"] = optional_json(e.class_ordinal);
  j["code"] = e.code;
  j["message"] = e.message;
  return j;
}

template <class T> std::optional<T> read_optional(const Json &j, const char *key) {
  const auto &v = j.at(key);
  if (v.is_null())
    return std::nullopt;
  return v.get<T>();
}

RunConfig config_from(const Json &j) {
  RunConfig c;
  c.group = j.at("group").get<std::string>();
  c.index_min = j.at("index_min").get<std::size_t>();
  c.index_max = j.at("index_max").get<std::size_t>();
  const auto conv = parse_convention(j.at("convention").get<std::string>());
  if (!conv)
    throw Error(ErrorCode::Parse, "unknown convention in config");
  c.convention = *conv;
  c.rank_tolerance = j.at("rank_tolerance").get<double>();
  c.cluster_tolerance = j.at("cluster_tolerance").get<double>();
  c.element_cap = j.at("element_cap").get<std::size_t>();
  c.exhaustive = j.at("exhaustive").get<bool>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.node_budget = j.at("node_budget").get<std::uint64_t>();
  const auto labeling = j.at("labeling").get<std::string>();
  if (labeling != "coset" && labeling != "forward")
    throw Error(ErrorCode::Parse, "unknown labeling in config");
  c.labeling = labeling == "coset" ? BasisLabeling::Coset : BasisLabeling::Forward;
  c.out_json = j.at("out_json").get<std::string>();
  c.out_tsv = j.at("out_tsv").get<std::string>();
  return c;
}

AnalysisRow row_from(const Json &j) {
  AnalysisRow r;
  r.group = j.at("group").get<std::string>();
  r.index = j.at("d").get<std::size_t>();
  r.class_ordinal = j.at("class").get<std::size_t>();
  r.multiplicity = j.at("multiplicity").get<std::size_t>();
  r.identical_analyses = j.at("identical_analyses").get<std::size_t>();
  r.class_size = j.at("class_size").get<std::size_t>();
  r.subgroup_generators = j.at("subgroup_generators").get<std::vector<std::string>>();
  r.covering = j.at("covering").get<std::string>();
  r.p_order = j.at("P_order").get<std::string>();
  r.structure = j.at("structure").get<std::string>();
  r.abelian = j.at("abelian").get<bool>();
  r.abelian_invariants = read_optional<std::vector<std::uint64_t>>(j, "abelian_invariants");
  r.simple = read_optional<bool>(j, "simple");
  r.rank = j.at("rank").get<std::size_t>();
  r.axiom_i = j.at("axiom_i").get<bool>();
  r.axiom_ii_trivial_excluded = j.at("axiom_ii_trivial_excluded").get<bool>();
  r.axiom_ii_trivial_included = j.at("axiom_ii_trivial_included").get<bool>();
  r.axiom_ii = j.at("axiom_ii").get<bool>();
  r.geometry = j.at("geometry").get<std::string>();
  r.line_count = j.at("line_count").get<std::size_t>();
  r.contextual_line_count = j.at("contextual_line_count").get<std::size_t>();
  r.contextual = j.at("contextual").get<bool>();
  r.is_mic = j.at("is_mic").get<bool>();
  r.pp = read_optional<std::size_t>(j, "pp");
  r.pp_values = j.at("pp_values").get<std::vector<double>>();
  r.pp_spectrum = j.at("pp_spectrum").get<std::vector<std::size_t>>();
  r.gram_rank = j.at("gram_rank").get<std::size_t>();
  r.candidates_tested = j.at("candidates_tested").get<std::size_t>();
  r.mic_budget_limited = j.at("mic_budget_limited").get<bool>();
  r.pauli = j.at("pauli").get<std::string>();
  r.stabilizer = j.at("stabilizer").get<std::string>();
  for (const auto &a : j.at("fiducial")) {
    if (!a.is_array() || a.size() != 2)
      throw Error(ErrorCode::Parse, "fiducial amplitude must be [re, im]");
    r.fiducial.emplace_back(a[0].get<double>(), a[1].get<double>());
  }
  const auto v = parse_rule_verdict(j.at("verdict").get<std::string>());
  if (!v)
    throw Error(ErrorCode::Parse, "unknown verdict");
  r.verdict = *v;
  return r;
}

RowError error_from(const Json &j) {
  RowError e;
  e.group = j.at("group").get<std::string>();
  e.index = j.at("d").get<std::size_t>();
  e.class_ordinal = read_optional<std::size_t>(j, "class");
  e.code = j.at("code").get<std::string>();
  e.message = j.at("message").get<std::string>();
  return e;
}

Json points_json(const std::vector<Point> &pts) {
  Json a = Json::array();
  for (Point p : pts)
    a.push_back(p);
  return a;
}

Json recognition_json(const Recognition &rec) {
  Json j;
  j["label"] = rec.label();
  j["name"] = rec.name;
  j["fingerprint"] = to_string(rec.fingerprint);
  j["spectrum"] = rec.fingerprint.spectrum;
  Json comps = Json::array();
  for (const auto &c : rec.components)
    comps.push_back(recognition_json(c));
  j["components"] = comps;
  return j;
}

} // namespace

std::string to_json(const Report &report) {
  Json j = Json::object();
  if (report.config)
    j["config"] = config_json(*report.config);
  Json rows = Json::array();
  for (const auto &r : report.rows)
    rows.push_back(row_json(r));
  j["rows"] = rows;
  if (report.config || !report.errors.empty()) {
    Json errs = Json::array();
    for (const auto &e : report.errors)
      errs.push_back(error_json(e));
    j["errors"] = errs;
  }
  return dump(j);
}

Report report_from_json(const std::string &text) {
  try {
    const Json j = Json::parse(text);
    if (!j.is_object())
      throw Error(ErrorCode::Parse, "report must be a JSON object");
    Report report;
    if (j.contains("config"))
      report.config = config_from(j.at("config"));
    for (const auto &r : j.at("rows"))
      report.rows.push_back(row_from(r));
    if (j.contains("errors"))
      for (const auto &e : j.at("errors"))
        report.errors.push_back(error_from(e));
    return report;
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::Parse, std::string("malformed report: ") + e.what());
  }
}

std::string geometry_json(const Presentation &pres, const SubgroupRecord &record,
                          Convention convention) {
  const PermGroup p = coset_group(record);
  Json j;
  j["d"] = record.index;
  j["class"] = record.class_ordinal;
  j["convention"] = to_string(convention);
  j["P_order"] = to_string(p.order());
  j["axiom_i"] = axiom_i(p);
  Json reps = Json::array();
  for (const auto &w : record.table.schreier_reps())
    reps.push_back(to_string(w, pres.generator_names));
  j["coset_representatives"] = reps;
  if (record.index < 2) {
    j["axiom_ii"] = true;
    j["lines"] = Json::array();
    j["contextual_triangles"] = Json::array();
    j["recognition"] = nullptr;
    return dump(j);
  }

  const auto geom = build_geometry(p, convention);
  const auto ctx = contextual_lines(geom, record.table);
  j["axiom_ii"] = axiom_ii(geom);
  Json lines = Json::array();
  for (std::size_t i = 0; i < geom.lines.size(); ++i) {
    Json l;
    l["points"] = points_json(geom.lines[i]);
    l["stabilizer_order"] = to_string(geom.line_stabilizers[i].order());
    l["orbit"] = geom.line_orbit[i];
    l["contextual"] = std::binary_search(ctx.begin(), ctx.end(), i);
    lines.push_back(l);
  }
  j["lines"] = lines;
  Json tris = Json::array();
  for (const auto &t : contextual_triangles(geom, record.table)) {
    Json tj;
    tj["points"] = points_json({t.begin(), t.end()});
    Json words = Json::array();
    for (Point x : t)
      words.push_back(reps[x]);
    tj["words"] = words;
    tris.push_back(tj);
  }
  j["contextual_triangles"] = tris;
  j["recognition"] = recognition_json(recognize(geom));
  return dump(j);
}

std::string mic_json(const SubgroupRecord &record, const MicOptions &opts) {
  const auto m = mic_scan(record, opts);
  Json j;
  j["d"] = record.index;
  j["class"] = record.class_ordinal;
  j["pauli"] = m.pauli_label;
  j["candidates_tested"] = m.candidates_tested;
  j["mic_candidates"] = m.mic_candidates;
  j["is_mic"] = m.is_mic;
  j["exhaustive"] = m.exhaustive;
  j["budget_limited"] = m.budget_limited;
  j["gram_rank"] = m.gram_rank;
  j["pp"] = optional_json(m.pp);
  j["pp_values"] = m.pp_values;
  j["pp_spectrum"] = m.pp_spectrum;
  j["stabilizer"] = to_string(m.stabilizer_verdict);
  Json fid = Json::array();
  if (m.fiducial)
    for (const auto &a : m.fiducial->amplitudes)
      fid.push_back(Json::array({a.real(), a.imag()}));
  j["fiducial"] = fid;
  return dump(j);
}

} // namespace cosetlab
