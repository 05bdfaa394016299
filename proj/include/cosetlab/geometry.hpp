#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cosetlab/coset_table.hpp"
#include "cosetlab/perm_group.hpp"

namespace cosetlab {

/// How pairs whose two-point stabilizer is trivial are treated.
enum class Convention {
  /// Trivial pairs only form 2-point lines.
  TrivialExcluded,
  /// Trivial pairs form lines like any other stabilizer class.
  TrivialIncluded,
};

const char *to_string(Convention c);
/// Accepts "excl"/"incl" and the long forms "trivial-excluded"/"trivial-included".
std::optional<Convention> parse_convention(std::string_view text);

struct IncidenceGeometry {
  std::size_t degree = 0;
  Convention convention = Convention::TrivialIncluded;
  /// Sorted point sets, each of size >= 2, in lexicographic order.
  std::vector<std::vector<Point>> lines;
  /// The two-point stabilizer shared by all pairs of each line.
  std::vector<PermGroup> line_stabilizers;
  /// Per line, the index of its orbit under P (orbits numbered by first line).
  std::vector<std::size_t> line_orbit;
};

/// Lines are the maximal point sets whose pairs all have the same two-point
/// stabilizer (element-set equality). A set of size >= 3 whose every pair
/// already lies on a larger line of the same stabilizer is not kept. Requires
/// a transitive P of degree >= 2.
IncidenceGeometry build_geometry(const PermGroup &p, Convention convention);

/// Some line has at least 3 points.
bool has_triangle(const IncidenceGeometry &geom);
/// No line of 3 or more points ("no geometry").
bool axiom_ii(const IncidenceGeometry &geom);

/// Indices of lines containing two cosets whose Schreier representatives act
/// as non-commuting permutations.
std::vector<std::size_t> contextual_lines(const IncidenceGeometry &geom,
                                          const CosetTable &table);

/// Every 3-subset of a line of size >= 3 that contains a non-commuting pair.
std::vector<std::array<Point, 3>> contextual_triangles(const IncidenceGeometry &geom,
                                                       const CosetTable &table);

/// Simple undirected graph as an adjacency matrix.
using Graph = std::vector<std::vector<bool>>;

/// Edges join points lying on a common line of size >= 3; K_d when there is no
/// such line.
Graph collinearity_graph(const IncidenceGeometry &geom);

struct GraphFingerprint {
  std::size_t points = 0;
  std::size_t lines = 0;
  /// Sorted sizes of all lines.
  std::vector<std::size_t> line_sizes;
  /// Sorted degrees of the collinearity graph.
  std::vector<std::size_t> degrees;
  /// Adjacency eigenvalues of the collinearity graph, ascending, rounded to
  /// 1e-6.
  std::vector<double> spectrum;

  friend bool operator==(const GraphFingerprint &, const GraphFingerprint &) = default;
};

GraphFingerprint fingerprint(const IncidenceGeometry &geom);
std::string to_string(const GraphFingerprint &fp);

struct Recognition {
  /// "K_7", "K(2,2,2)", "coL(K(4,5))", "Fano", "GQ(2,2)", "MP", "[10_3]",
  /// "3K_3", or empty when nothing matched.
  std::string name;
  GraphFingerprint fingerprint;
  /// One entry per P-orbit of lines of size >= 3, when there are several;
  /// each is recognized as a geometry of its own.
  std::vector<Recognition> components;

  /// The name, or the fingerprint text when unnamed. With several line
  /// orbits and no name for the whole, the component labels joined by " + ".
  std::string label() const;
};

Recognition recognize(const IncidenceGeometry &geom);

/// The sub-geometry made of the lines in one P-orbit.
IncidenceGeometry orbit_component(const IncidenceGeometry &geom, std::size_t orbit);

/// Isomorphism of vertex-colored graphs by refinement and backtracking.
bool isomorphic(const Graph &a, const std::vector<int> &colors_a, const Graph &b,
                const std::vector<int> &colors_b);
bool isomorphic(const Graph &a, const Graph &b);

/// Point-line incidence isomorphism (lines as point sets).
bool hypergraph_isomorphic(std::size_t points_a,
                           const std::vector<std::vector<Point>> &lines_a,
                           std::size_t points_b,
                           const std::vector<std::vector<Point>> &lines_b);

/// Candidate constructions used by recognize().
namespace shapes {
std::vector<std::vector<Point>> fano_plane();
std::vector<std::vector<Point>> doily();
std::vector<std::vector<Point>> mermin_pentagram();
Graph complete_multipartite(const std::vector<std::size_t> &parts);
Graph line_graph_complement_bipartite(std::size_t m, std::size_t n);
} // namespace shapes

} // namespace cosetlab
