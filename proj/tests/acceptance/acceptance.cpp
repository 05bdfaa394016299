// Acceptance run: one PASS/FAIL line per criterion with timing and details.
// Exit status is 0 when every criterion ran to completion, whatever its
// verdict; pass --strict to also fail on a red criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cosetlab/error.hpp"
#include "cosetlab/geometry.hpp"
#include "cosetlab/low_index.hpp"
#include "cosetlab/mic.hpp"
#include "cosetlab/perm_group.hpp"
#include "cosetlab/report.hpp"
#include "oracles.hpp"

using namespace cosetlab;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string &what) {
    if (!ok)
      pass = false;
    notes.push_back(std::string(ok ? "ok: " : "MISMATCH: ") + what);
  }
  void note(const std::string &what) { notes.push_back(what); }
};

std::string join(const std::vector<std::size_t> &v) {
  std::string s;
  for (std::size_t x : v)
    s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

const Presentation &group(const char *name) { return catalog_lookup(name).presentation; }

RunConfig exhaustive_config(const char *name, std::size_t d) {
  RunConfig c;
  c.group = name;
  c.index_min = c.index_max = d;
  c.exhaustive = true;
  return c;
}

const AnalysisRow *row_with_order(const Report &r, const std::string &order) {
  for (const auto &row : r.rows)
    if (row.p_order == order)
      return &row;
  return nullptr;
}

// 1. Class counts per index for the two surgery groups.
Outcome eta_sequences() {
  Outcome o;
  const std::vector<std::size_t> fig8_0 = {1, 1, 1, 2, 2, 5, 1, 2, 2, 4, 3, 17};
  const std::vector<std::size_t> trefoil_0 = {1, 1, 2, 2, 1, 5, 3, 2, 4, 1, 1, 12};
  const auto a = eta_sequence(group("fig8-0surgery"), 12);
  const auto b = eta_sequence(group("trefoil-0surgery"), 12);
  o.expect(a == fig8_0, "fig8-0surgery eta = " + join(a));
  o.expect(b == trefoil_0, "trefoil-0surgery eta = " + join(b));
  // Independent count of transitive actions for the small indices.
  for (const char *name : {"fig8-0surgery", "trefoil-0surgery"})
    for (std::size_t d = 1; d <= 5; ++d)
      if (oracle::transitive_action_classes(group(name), d) !=
          (std::strcmp(name, "fig8-0surgery") == 0 ? a : b)[d - 1])
        o.expect(false, std::string(name) + " Burnside count differs at d=" + std::to_string(d));
  o.note("Burnside oracle checked d=1..5");
  return o;
}

// 2. Rows per index, counting multiplicities.
Outcome row_counts() {
  Outcome o;
  auto count = [](const char *name, std::size_t lo, std::size_t hi) {
    RunConfig c;
    c.group = name;
    c.index_min = lo;
    c.index_max = hi;
    c.element_cap = 1; // row counts do not depend on the MIC scan
    const auto r = analyze(c);
    std::vector<std::size_t> n(hi - lo + 1, 0);
    for (const auto &row : r.rows)
      n[row.index - lo] += row.multiplicity;
    return n;
  };
  const auto t = count("trefoil", 2, 7);
  const auto f = count("fig8", 2, 6);
  o.expect(t == std::vector<std::size_t>{1, 2, 3, 2, 8, 7}, "trefoil d=2..7: " + join(t));
  o.expect(f == std::vector<std::size_t>{1, 1, 2, 4, 11}, "fig8 d=2..6: " + join(f));
  for (std::size_t d = 2; d <= 6; ++d)
    if (oracle::transitive_action_classes(group("fig8"), d) != f[d - 2])
      o.expect(false, "fig8 Burnside count differs at d=" + std::to_string(d));
  return o;
}

// 3. The doily inside the A6 action on 15 points.
Outcome gq22_demo() {
  Outcome o;
  const auto classes = low_index_subgroups(group("a6-demo"), 15);
  bool found = false;
  for (const auto &rec : classes) {
    const auto p = coset_group(rec);
    if (p.order() != 360 || rank(p) != 3)
      continue;
    const auto geom = build_geometry(p, Convention::TrivialExcluded);
    const auto ctx = contextual_lines(geom, rec.table);
    std::set<std::size_t> orbits(geom.line_orbit.begin(), geom.line_orbit.end());
    for (std::size_t orbit : orbits) {
      const auto comp = orbit_component(geom, orbit);
      if (comp.lines.size() != 15)
        continue;
      bool threes = true;
      std::vector<std::size_t> per_point(15, 0);
      for (const auto &l : comp.lines) {
        threes = threes && l.size() == 3;
        for (Point x : l)
          ++per_point[x];
      }
      const bool three_each = std::all_of(per_point.begin(), per_point.end(),
                                          [](std::size_t n) { return n == 3; });
      if (!threes || !three_each)
        continue;
      std::size_t avoiding = 0;
      for (std::size_t i : ctx)
        if (geom.line_orbit[i] == orbit && geom.lines[i].front() != 0)
          ++avoiding;
      std::ostringstream os;
      os << "class " << rec.class_ordinal << ": |P|=360, rank 3, 15 points, 15 lines of 3, "
         << "3 lines per point, doily isomorphic="
         << (hypergraph_isomorphic(15, comp.lines, 15, shapes::doily()) ? "yes" : "no")
         << ", contextual lines avoiding e=" << avoiding << " (whole geometry has "
         << geom.lines.size() << " lines)";
      o.note(os.str());
      if (avoiding > 0 && hypergraph_isomorphic(15, comp.lines, 15, shapes::doily()))
        found = true;
    }
  }
  o.expect(found, "a class with the GQ(2,2) line orbit and a contextual line avoiding e");
  return o;
}

// 4. MIC verdicts under exhaustive scans.
Outcome mic_verdicts() {
  Outcome o;
  auto describe = [](const AnalysisRow &r) {
    std::ostringstream os;
    os << "|P|=" << r.p_order << " mic=" << (r.is_mic ? "yes" : "no") << " pp="
       << (r.pp ? std::to_string(*r.pp) : "-") << " values=[";
    for (std::size_t i = 0; i < r.pp_values.size(); ++i)
      os << (i ? "," : "") << r.pp_values[i];
    os << "] geometry=" << r.geometry;
    return os.str();
  };
  auto check = [&](const char *name, std::size_t d, const char *order, std::size_t pp,
                   double value, const char *geometry) {
    const auto r = analyze(exhaustive_config(name, d));
    const auto *row = row_with_order(r, order);
    const std::string where = std::string(name) + " d=" + std::to_string(d) + ": ";
    if (!row) {
      o.expect(false, where + "no class with |P|=" + order);
      return;
    }
    bool ok = row->is_mic && row->pp == pp;
    if (value > 0)
      ok = ok && row->pp_values.size() == 1 && std::abs(row->pp_values[0] - value) <= 1e-9;
    if (geometry)
      ok = ok && row->geometry == geometry;
    o.expect(ok, where + describe(*row));
  };
  check("trefoil", 3, "6", 1, 0.25, nullptr);
  check("trefoil", 4, "12", 2, 0, nullptr);
  check("trefoil", 5, "60", 1, 1.0 / 6.0, nullptr);
  check("fig8-0surgery", 6, "12", 2, 0, "K(2,2,2)");
  return o;
}

// 5. Axiom (i) on the fig8-0surgery rows, matched by |P|.
Outcome axiom_i_column() {
  Outcome o;
  struct Want {
    std::size_t d;
    const char *order;
    bool axiom_i;
  };
  const Want wants[] = {{4, "12", true},  {6, "12", false},  {9, "36", true},   {11, "55", true},
                        {16, "48", true}, {19, "171", true}, {20, "120", true}};
  for (const auto &w : wants) {
    RunConfig c;
    c.group = "fig8-0surgery";
    c.index_min = c.index_max = w.d;
    c.element_cap = 1;
    const auto r = analyze(c);
    const auto *row = row_with_order(r, w.order);
    const std::string where = "d=" + std::to_string(w.d) + " |P|=" + w.order + ": ";
    if (!row) {
      o.expect(false, where + "missing");
      continue;
    }
    o.expect(row->axiom_i == w.axiom_i, where + "axiom_i=" + (row->axiom_i ? "yes" : "no"));
  }
  return o;
}

// 6. Contextual exceptions.
Outcome contextuality() {
  Outcome o;
  const auto &pres = group("fig8-0surgery");
  const auto r = analyze(exhaustive_config("fig8-0surgery", 4));
  const auto *row = row_with_order(r, "12");
  if (!row) {
    o.expect(false, "fig8-0surgery d=4: no class with |P|=12");
  } else {
    o.expect(row->verdict == RuleVerdict::ExceptionContextual,
             "fig8-0surgery d=4 verdict " + std::string(to_string(row->verdict)));
    // Look for a contextual triple of cosets {a, ab, ab^-1}, a and b ranging
    // over Schreier representatives and generator letters.
    const auto rec = find_class(pres, 4, row->class_ordinal);
    const auto geom = build_geometry(coset_group(rec), Convention::TrivialIncluded);
    const auto tris = contextual_triangles(geom, rec.table);
    std::vector<Word> words = rec.table.schreier_reps();
    for (std::size_t g = 0; g < pres.generator_count(); ++g)
      for (bool inv : {false, true})
        words.push_back(Word{Word::letter(g, inv)});
    std::string hit, hit_identity;
    for (const auto &a : words)
      for (const auto &b : words) {
        std::array<Point, 3> t = {coset_of(rec.table, a), coset_of(rec.table, a * b),
                                  coset_of(rec.table, a * b.inverse())};
        std::sort(t.begin(), t.end());
        if (t[0] == t[1] || t[1] == t[2])
          continue;
        if (std::find(tris.begin(), tris.end(), t) == tris.end())
          continue;
        const std::string s = "a=" + (a.empty() ? std::string("e") : to_string(a, pres.generator_names)) +
                              " b=" + to_string(b, pres.generator_names) + " cosets {" +
                              std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                              std::to_string(t[2]) + "}";
        if (!a.empty() && hit.empty())
          hit = s;
        if (a.empty() && hit_identity.empty())
          hit_identity = s;
      }
    o.note(std::to_string(tris.size()) + " contextual triangles");
    if (!hit.empty())
      o.expect(true, "{a, ab, ab^-1} contextual triangle with a != e: " + hit);
    else if (!hit_identity.empty())
      o.expect(true, "{a, ab, ab^-1} contextual triangle only with a = e: " + hit_identity);
    else
      o.expect(false, "no contextual triangle of shape {a, ab, ab^-1}");
  }

  const auto f = analyze(exhaustive_config("fig8", 7));
  std::size_t mics = 0;
  for (const auto &row7 : f.rows) {
    if (!row7.is_mic)
      continue;
    ++mics;
    const auto rec = find_class(group("fig8"), 7, row7.class_ordinal);
    const auto geom = build_geometry(coset_group(rec), Convention::TrivialIncluded);
    bool order4 = !geom.line_stabilizers.empty();
    for (const auto &s : geom.line_stabilizers)
      order4 = order4 && s.order() == 4;
    const bool fano = geom.lines.size() == 7 &&
                      hypergraph_isomorphic(7, geom.lines, 7, shapes::fano_plane());
    o.expect(fano && order4 && row7.geometry == "Fano",
             "fig8 d=7 class " + std::to_string(row7.class_ordinal) + " |P|=" + row7.p_order +
                 ": " + row7.geometry + (order4 ? ", line stabilizers of order 4" : ""));
  }
  o.expect(mics > 0, "fig8 d=7 MIC classes: " + std::to_string(mics));
  return o;
}

// 7. Some fig8 d=8 class with (i) and (ii) is not a MIC.
Outcome false_detection() {
  Outcome o;
  const auto r = analyze(exhaustive_config("fig8", 8));
  std::size_t both = 0, negatives = 0;
  for (const auto &row : r.rows) {
    if (!(row.axiom_i && row.axiom_ii))
      continue;
    ++both;
    if (!row.is_mic)
      ++negatives;
    o.note("class " + std::to_string(row.class_ordinal) + " |P|=" + row.p_order +
           " mic=" + (row.is_mic ? "yes pp=" + std::to_string(*row.pp) : std::string("no")) +
           " candidates=" + std::to_string(row.candidates_tested));
  }
  o.expect(negatives > 0, std::to_string(negatives) + " of " + std::to_string(both) +
                              " classes with (i) and (ii) report is_mic=false");
  return o;
}

// 8. Property suites against independent oracles.
Presentation random_presentation(std::mt19937 &rng) {
  Presentation p;
  p.generator_names = {"a", "b"};
  const std::size_t nrel = 2 + rng() % 2;
  for (std::size_t i = 0; i < nrel; ++i) {
    std::vector<int> letters;
    const std::size_t len = 2 + rng() % 7;
    for (std::size_t k = 0; k < len; ++k)
      letters.push_back(Word::letter(rng() % 2, rng() % 2));
    Word w(letters);
    if (!w.empty())
      p.relators.push_back(w);
  }
  return p;
}

// Traces a word through the forward tables, inverting where needed.
bool closes(const CosetTable &t, const Word &w, Point start) {
  const std::size_t n = t.index();
  Point x = start;
  for (int l : w.letters()) {
    const auto &f = t.forward(Word::generator_of(l));
    if (l > 0) {
      x = f[x];
    } else {
      Point y = 0;
      while (y < n && f[y] != x)
        ++y;
      x = y;
    }
  }
  return x == start;
}

Outcome properties() {
  Outcome o;
  std::mt19937 rng(2024);

  std::size_t tables = 0, bad = 0;
  while (tables < 1000) {
    const auto p = random_presentation(rng);
    for (std::size_t d = 2; d <= 6 && tables < 1000; ++d) {
      LowIndexOptions opts;
      opts.node_budget = 200'000;
      std::vector<SubgroupRecord> recs;
      try {
        recs = low_index_subgroups(p, d, opts);
      } catch (const LowIndexBudgetError &) {
        continue;
      }
      for (const auto &r : recs) {
        ++tables;
        for (const auto &rel : p.relators)
          for (Point x = 0; x < r.table.index(); ++x)
            if (!closes(r.table, rel, x)) {
              ++bad;
              x = r.table.index();
            }
      }
    }
  }
  o.expect(bad == 0, "relator closure on " + std::to_string(tables) + " low-index tables");

  const char *finite[] = {
      "< a, b | a^2, b^3, (a*b)^4 >",        "< a, b | a^2, b^3, (a*b)^3 >",
      "< a, b | a^4, b^2, (a*b)^2 >",        "< a, b | a^4, a^2*b^-2, b^-1*a*b*a >",
      "< a, b | a^6, b^2, (a*b)^2 >",        "< a, b | a^3, b^3, (a*b)^3, (a*b^-1)^3 >",
      "< a, b | a^4, b^4, a*b*a^-1*b^-1 >",  "< a, b | a^3, b^8, b^-1*a*b*a >",
      "< a, b | a^2, b^3, (a*b)^8, (a*b*a*b^-1)^2 >"};
  std::size_t checked = 0, wrong = 0;
  for (const char *t : finite) {
    const auto p = parse_presentation(t);
    const auto counts = oracle::subgroup_classes_by_index(p);
    const std::size_t order = todd_coxeter(p, {}).index();
    for (std::size_t d = 1; d <= order; ++d) {
      const auto it = counts.find(d);
      ++checked;
      if (low_index_subgroups(p, d).size() != (it == counts.end() ? 0 : it->second))
        ++wrong;
    }
  }
  o.expect(wrong == 0, "low-index completeness on " + std::to_string(checked) +
                           " (group, index) pairs of finite quotients");

  std::size_t ranks = 0, rank_bad = 0;
  for (const char *name : {"trefoil", "fig8", "fig8-0surgery"})
    for (std::size_t d = 2; d <= 6; ++d) {
      const PauliSystem sys(d);
      for (const auto &rec : low_index_subgroups(group(name), d))
        for (const auto &g : permutation_rep(rec.table))
          for (const auto &e : cycle_eigenvectors(g)) {
            const auto res = gram_rank(pauli_orbit(sys, e.vector));
            const int exact = oracle::exact_rank(res.gram);
            if (exact < 0)
              continue;
            ++ranks;
            if (static_cast<int>(res.rank) != exact)
              ++rank_bad;
          }
    }
  o.expect(rank_bad == 0 && ranks > 0,
           "numerical Gram rank equals exact rank on " + std::to_string(ranks) + " orbits");

  double worst_unitary = 0, worst_residual = 0;
  std::normal_distribution<double> normal;
  for (std::size_t d : {2u, 3u, 4u, 5u, 6u, 8u, 9u, 12u}) {
    const PauliSystem sys(d);
    std::vector<Complex> v(d);
    for (auto &x : v)
      x = Complex(normal(rng), normal(rng));
    const auto psi = StateVector::canonical(v);
    for (const auto &s : pauli_orbit(sys, psi))
      worst_unitary = std::max(worst_unitary, std::abs(s.norm() - 1.0));
    std::vector<Point> img(d);
    for (Point i = 0; i < d; ++i)
      img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    const Permutation sigma(img);
    const auto m = permutation_matrix(sigma);
    for (const auto &e : cycle_eigenvectors(sigma)) {
      Eigen::VectorXcd x(static_cast<Eigen::Index>(d));
      for (std::size_t i = 0; i < d; ++i)
        x(static_cast<Eigen::Index>(i)) = e.vector.amplitudes[i];
      worst_residual = std::max(worst_residual, (m * x - e.eigenvalue() * x).norm());
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "max |norm - 1| = %.2e (<= 1e-12), max eigen residual = %.2e (<= 1e-10)",
                worst_unitary, worst_residual);
  o.expect(worst_unitary <= 1e-12 && worst_residual <= 1e-10, buf);

  std::size_t ax = 0, ax_bad = 0;
  for (const char *name : {"trefoil", "fig8", "trefoil-0surgery", "fig8-0surgery"})
    for (std::size_t d = 2; d <= 8; ++d)
      for (const auto &rec : low_index_subgroups(group(name), d)) {
        ++ax;
        if (axiom_i(rec) != oracle::normal_closure_is_whole(group(name), rec.table, rec.generators))
          ++ax_bad;
      }
  o.expect(ax_bad == 0, "axiom (i) equals normal closure by coset enumeration on " +
                            std::to_string(ax) + " classes");
  return o;
}

} // namespace

int main(int argc, char **argv) {
  const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  struct Criterion {
    int id;
    const char *title;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "eta sequences of the surgery groups", eta_sequences},
      {2, "row counts for trefoil and fig8", row_counts},
      {3, "GQ(2,2) in the A6 action on 15 points", gq22_demo},
      {4, "MIC verdicts and pp values", mic_verdicts},
      {5, "axiom (i) on fig8-0surgery", axiom_i_column},
      {6, "contextual exceptions", contextuality},
      {7, "false detections at fig8 index 8", false_detection},
      {8, "property suites", properties},
  };
  int passed = 0, failed = 0, crashed = 0;
  for (const auto &c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception &e) {
      out.pass = false;
      out.note(std::string("exception: ") + e.what());
      ++crashed;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %d: %s (%.1fs)\n", out.pass ? "PASS" : "FAIL", c.id, c.title, secs);
    for (const auto &n : out.notes)
      std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
    (out.pass ? passed : failed)++;
  }
  std::printf("%d passed, %d failed\n", passed, failed);
  if (crashed)
    return 1;
  return strict && failed ? 1 : 0;
}
