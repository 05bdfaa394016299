#include <doctest.h>

#include <algorithm>
#include <random>

#include "cosetlab/geometry.hpp"
#include "cosetlab/low_index.hpp"
#include "oracles.hpp"

using namespace cosetlab;

namespace {

PermGroup relabel(const PermGroup &p, std::mt19937 &rng) {
  const std::size_t n = p.degree();
  std::vector<Point> img(n);
  for (Point i = 0; i < n; ++i)
    img[i] = i;
  std::shuffle(img.begin(), img.end(), rng);
  const Permutation s(img);
  std::vector<Permutation> gens;
  for (const auto &g : p.generators())
    gens.push_back(conjugate(g, s));
  return PermGroup(n, gens);
}

} // namespace

TEST_CASE("axiom (ii) agrees with the triple scan") {
  for (const char *name : {"trefoil", "fig8", "fig8-0surgery"}) {
    const auto &pres = catalog_lookup(name).presentation;
    for (std::size_t d = 3; d <= 7; ++d)
      for (const auto &rec : low_index_subgroups(pres, d)) {
        const auto p = coset_group(rec);
        if (p.order() > 6000)
          continue;
        const auto elems = oracle::closure(p.generators(), d);
        for (auto conv : {Convention::TrivialExcluded, Convention::TrivialIncluded}) {
          CAPTURE(name);
          CAPTURE(d);
          CAPTURE(rec.class_ordinal);
          const auto g = build_geometry(p, conv);
          CHECK(axiom_ii(g) == !oracle::has_equal_stabilizer_triple(
                                   elems, d, conv == Convention::TrivialIncluded));
        }
      }
  }
}

TEST_CASE("lines partition pairs within each stabilizer class") {
  const auto &pres = catalog_lookup("fig8").presentation;
  for (const auto &rec : low_index_subgroups(pres, 7)) {
    const auto p = coset_group(rec);
    const auto g = build_geometry(p, Convention::TrivialIncluded);
    REQUIRE(g.lines.size() == g.line_stabilizers.size());
    REQUIRE(g.lines.size() == g.line_orbit.size());
    CHECK(std::is_sorted(g.lines.begin(), g.lines.end()));
    for (std::size_t i = 0; i < g.lines.size(); ++i) {
      const auto &l = g.lines[i];
      CHECK(l.size() >= 2);
      for (std::size_t a = 0; a < l.size(); ++a)
        for (std::size_t b = a + 1; b < l.size(); ++b)
          CHECK(two_point_stabilizer(p, l[a], l[b]) == g.line_stabilizers[i]);
    }
  }
}

TEST_CASE("Fano plane at fig8 index 7") {
  const auto &pres = catalog_lookup("fig8").presentation;
  std::size_t fano = 0;
  for (const auto &rec : low_index_subgroups(pres, 7)) {
    const auto p = coset_group(rec);
    const auto g = build_geometry(p, Convention::TrivialIncluded);
    if (recognize(g).name != "Fano")
      continue;
    ++fano;
    CHECK(g.lines.size() == 7);
    for (const auto &s : g.line_stabilizers)
      CHECK(s.order() == 4);
    CHECK(hypergraph_isomorphic(7, g.lines, 7, shapes::fano_plane()));
    CHECK_FALSE(contextual_lines(g, rec.table).empty());
  }
  CHECK(fano == 8);
}

TEST_CASE("GQ(2,2) from the A6 action on 15 points") {
  const auto &pres = catalog_lookup("a6-demo").presentation;
  bool found = false;
  for (const auto &rec : low_index_subgroups(pres, 15)) {
    const auto p = coset_group(rec);
    if (p.order() != 360 || rank(p) != 3)
      continue;
    const auto g = build_geometry(p, Convention::TrivialExcluded);
    const auto rec_name = recognize(g);
    if (rec_name.label().find("GQ(2,2)") == std::string::npos)
      continue;
    found = true;
  }
  CHECK(found);
}

TEST_CASE("shape recognizers") {
  auto from_lines = [](std::size_t n, std::vector<std::vector<Point>> lines) {
    IncidenceGeometry g;
    g.degree = n;
    for (auto &l : lines) {
      std::sort(l.begin(), l.end());
      g.lines.push_back(l);
      g.line_stabilizers.push_back(PermGroup::trivial(n));
      g.line_orbit.push_back(0);
    }
    std::sort(g.lines.begin(), g.lines.end());
    return g;
  };
  CHECK(recognize(from_lines(7, shapes::fano_plane())).name == "Fano");
  CHECK(recognize(from_lines(15, shapes::doily())).name == "GQ(2,2)");
  CHECK(recognize(from_lines(10, shapes::mermin_pentagram())).name == "MP");
  CHECK(recognize(from_lines(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}})).name == "3K_3");
  // Octahedron: the complement of a perfect matching on 6 points.
  CHECK(isomorphic(shapes::complete_multipartite({2, 2, 2}),
                   shapes::complete_multipartite({2, 2, 2})));
  CHECK_FALSE(isomorphic(shapes::complete_multipartite({2, 2, 2}),
                         shapes::complete_multipartite({3, 3})));
  const auto co = shapes::line_graph_complement_bipartite(4, 5);
  CHECK(co.size() == 20);
}

TEST_CASE("recognition is invariant under relabeling") {
  std::mt19937 rng(5);
  for (const char *name : {"trefoil", "fig8"}) {
    const auto &pres = catalog_lookup(name).presentation;
    for (std::size_t d = 4; d <= 9; ++d)
      for (const auto &rec : low_index_subgroups(pres, d)) {
        const auto p = coset_group(rec);
        for (auto conv : {Convention::TrivialExcluded, Convention::TrivialIncluded}) {
          const auto a = recognize(build_geometry(p, conv));
          const auto b = recognize(build_geometry(relabel(p, rng), conv));
          CAPTURE(name);
          CAPTURE(d);
          CAPTURE(rec.class_ordinal);
          CHECK(a.label() == b.label());
          CHECK(a.fingerprint == b.fingerprint);
        }
      }
  }
}

TEST_CASE("graph isomorphism finds relabeled copies") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 6 + rng() % 8;
    Graph g(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (rng() % 3 == 0)
          g[a][b] = g[b][a] = true;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i)
      perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        h[perm[a]][perm[b]] = g[a][b];
    CHECK(isomorphic(g, h));
    // Toggling one edge changes the edge count, so no isomorphism.
    h[perm[0]][perm[1]] = h[perm[1]][perm[0]] = !h[perm[0]][perm[1]];
    CHECK_FALSE(isomorphic(g, h));
  }
}
