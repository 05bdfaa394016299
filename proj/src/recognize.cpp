#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <Eigen/Dense>

#include "cosetlab/geometry.hpp"

namespace cosetlab {

namespace {

// Joint colour refinement of two graphs so that colour ids are comparable.
bool refine(const Graph &a, std::vector<int> &ca, const Graph &b, std::vector<int> &cb) {
  const std::size_t n = a.size();
  std::size_t classes = 0;
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    auto signature = [&](const Graph &g, const std::vector<int> &c, std::size_t v) {
      std::vector<int> nb;
      for (std::size_t u = 0; u < n; ++u)
        if (g[v][u])
          nb.push_back(c[u]);
      std::sort(nb.begin(), nb.end());
      return std::make_pair(c[v], std::move(nb));
    };
    std::vector<std::pair<int, std::vector<int>>> sa, sb;
    for (std::size_t v = 0; v < n; ++v) {
      sa.push_back(signature(a, ca, v));
      sb.push_back(signature(b, cb, v));
    }
    for (const auto &s : sa)
      ids.emplace(s, 0);
    for (const auto &s : sb)
      ids.emplace(s, 0);
    int next = 0;
    for (auto &[key, id] : ids)
      id = next++;
    for (std::size_t v = 0; v < n; ++v) {
      ca[v] = ids.at(sa[v]);
      cb[v] = ids.at(sb[v]);
    }
    std::vector<int> ha(ca), hb(cb);
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb)
      return false;
    if (ids.size() == classes)
      return true;
    classes = ids.size();
  }
}

class Matcher {
public:
  Matcher(const Graph &a, const std::vector<int> &ca, const Graph &b,
          const std::vector<int> &cb)
      : a_(a), b_(b), ca_(ca), cb_(cb), map_(a.size(), -1), used_(a.size(), false) {
    // Breadth-first order keeps each new vertex adjacent to mapped ones.
    const std::size_t n = a.size();
    std::vector<bool> seen(n, false);
    for (std::size_t s = 0; s < n; ++s) {
      if (seen[s])
        continue;
      seen[s] = true;
      order_.push_back(s);
      for (std::size_t i = order_.size() - 1; i < order_.size(); ++i)
        for (std::size_t u = 0; u < n; ++u)
          if (a[order_[i]][u] && !seen[u]) {
            seen[u] = true;
            order_.push_back(u);
          }
    }
  }

  bool run(std::size_t k = 0) {
    if (k == order_.size())
      return true;
    const std::size_t v = order_[k];
    for (std::size_t w = 0; w < b_.size(); ++w) {
      if (used_[w] || cb_[w] != ca_[v])
        continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const std::size_t u = order_[j];
        ok = a_[v][u] == b_[w][static_cast<std::size_t>(map_[u])];
      }
      if (!ok)
        continue;
      map_[v] = static_cast<int>(w);
      used_[w] = true;
      if (run(k + 1))
        return true;
      used_[w] = false;
      map_[v] = -1;
    }
    return false;
  }

private:
  const Graph &a_, &b_;
  const std::vector<int> &ca_, &cb_;
  std::vector<int> map_;
  std::vector<bool> used_;
  std::vector<std::size_t> order_;
};

Graph incidence_graph(std::size_t points, const std::vector<std::vector<Point>> &lines,
                      std::vector<int> &colors) {
  const std::size_t n = points + lines.size();
  Graph g(n, std::vector<bool>(n, false));
  colors.assign(n, 0);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    colors[points + i] = 1;
    for (Point p : lines[i])
      g[p][points + i] = g[points + i][p] = true;
  }
  return g;
}

std::string join_sizes(const std::vector<std::size_t> &v) {
  // Run-length form, e.g. 3x10,4x5.
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i])
      ++j;
    if (i)
      os << ',';
    os << v[i] << 'x' << (j - i);
    i = j;
  }
  return os.str();
}

bool is_complete(const Graph &g) {
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b)
      if (a != b && !g[a][b])
        return false;
  return true;
}

// Parts of a complete multipartite graph (non-adjacency is an equivalence).
std::optional<std::vector<std::size_t>> multipartite_parts(const Graph &g) {
  const std::size_t n = g.size();
  std::vector<int> part(n, -1);
  std::vector<std::size_t> sizes;
  for (std::size_t v = 0; v < n; ++v) {
    if (part[v] >= 0)
      continue;
    const int id = static_cast<int>(sizes.size());
    sizes.push_back(0);
    for (std::size_t u = 0; u < n; ++u)
      if (u == v || !g[v][u]) {
        if (part[u] >= 0)
          return std::nullopt;
        part[u] = id;
        ++sizes.back();
      }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && g[a][b] == (part[a] == part[b]))
        return std::nullopt;
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

bool is_configuration(std::size_t points, const std::vector<std::vector<Point>> &lines) {
  if (lines.size() != points)
    return false;
  std::vector<std::size_t> deg(points, 0);
  for (const auto &l : lines) {
    if (l.size() != 3)
      return false;
    for (Point p : l)
      ++deg[p];
  }
  if (std::any_of(deg.begin(), deg.end(), [](std::size_t x) { return x != 3; }))
    return false;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      std::vector<Point> common;
      std::set_intersection(lines[i].begin(), lines[i].end(), lines[j].begin(),
                            lines[j].end(), std::back_inserter(common));
      if (common.size() > 1)
        return false;
    }
  return true;
}

} // namespace

bool isomorphic(const Graph &a, const std::vector<int> &colors_a, const Graph &b,
                const std::vector<int> &colors_b) {
  if (a.size() != b.size())
    return false;
  std::vector<int> ca(colors_a), cb(colors_b);
  if (!refine(a, ca, b, cb))
    return false;
  return Matcher(a, ca, b, cb).run();
}

bool isomorphic(const Graph &a, const Graph &b) {
  return isomorphic(a, std::vector<int>(a.size(), 0), b, std::vector<int>(b.size(), 0));
}

bool hypergraph_isomorphic(std::size_t points_a,
                           const std::vector<std::vector<Point>> &lines_a,
                           std::size_t points_b,
                           const std::vector<std::vector<Point>> &lines_b) {
  if (points_a != points_b || lines_a.size() != lines_b.size())
    return false;
  std::vector<int> ca, cb;
  const Graph ga = incidence_graph(points_a, lines_a, ca);
  const Graph gb = incidence_graph(points_b, lines_b, cb);
  return isomorphic(ga, ca, gb, cb);
}

namespace shapes {

std::vector<std::vector<Point>> fano_plane() {
  std::vector<std::vector<Point>> lines;
  for (Point i = 0; i < 7; ++i) {
    std::vector<Point> l{i, (i + 1) % 7, (i + 3) % 7};
    std::sort(l.begin(), l.end());
    lines.push_back(l);
  }
  return lines;
}

std::vector<std::vector<Point>> doily() {
  // Points: pairs from {0..5}. Lines: partitions of {0..5} into three pairs.
  std::vector<std::pair<int, int>> duads;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      duads.emplace_back(a, b);
  auto id = [&](int a, int b) {
    return static_cast<Point>(
        std::find(duads.begin(), duads.end(), std::make_pair(a, b)) - duads.begin());
  };
  std::vector<std::vector<Point>> lines;
  for (int b = 1; b < 6; ++b) {
    std::vector<int> rest;
    for (int x = 1; x < 6; ++x)
      if (x != b)
        rest.push_back(x);
    for (int j = 1; j < 4; ++j) {
      std::vector<int> last;
      for (int k = 1; k < 4; ++k)
        if (k != j)
          last.push_back(rest[static_cast<std::size_t>(k)]);
      std::vector<Point> l{id(0, b), id(rest[0], rest[static_cast<std::size_t>(j)]),
                          id(last[0], last[1])};
      std::sort(l.begin(), l.end());
      lines.push_back(l);
    }
  }
  return lines;
}

std::vector<std::vector<Point>> mermin_pentagram() {
  // Points: edges of K5. Lines: the four edges at each vertex.
  std::vector<std::pair<Point, Point>> edges;
  for (Point a = 0; a < 5; ++a)
    for (Point b = a + 1; b < 5; ++b)
      edges.emplace_back(a, b);
  std::vector<std::vector<Point>> lines(5);
  for (Point e = 0; e < edges.size(); ++e) {
    lines[edges[e].first].push_back(e);
    lines[edges[e].second].push_back(e);
  }
  return lines;
}

Graph complete_multipartite(const std::vector<std::size_t> &parts) {
  std::vector<std::size_t> label;
  for (std::size_t i = 0; i < parts.size(); ++i)
    label.insert(label.end(), parts[i], i);
  const std::size_t n = label.size();
  Graph g(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      g[a][b] = label[a] != label[b];
  return g;
}

Graph line_graph_complement_bipartite(std::size_t m, std::size_t n) {
  // Vertex (i, j) is edge i--j of K(m,n); adjacent when the edges are disjoint.
  const std::size_t v = m * n;
  Graph g(v, std::vector<bool>(v, false));
  for (std::size_t x = 0; x < v; ++x)
    for (std::size_t y = 0; y < v; ++y)
      g[x][y] = x / n != y / n && x % n != y % n;
  return g;
}

} // namespace shapes

GraphFingerprint fingerprint(const IncidenceGeometry &geom) {
  GraphFingerprint fp;
  fp.points = geom.degree;
  fp.lines = geom.lines.size();
  for (const auto &l : geom.lines)
    fp.line_sizes.push_back(l.size());
  std::sort(fp.line_sizes.begin(), fp.line_sizes.end());
  const Graph g = collinearity_graph(geom);
  const auto n = static_cast<Eigen::Index>(g.size());
  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    std::size_t deg = 0;
    for (Eigen::Index b = 0; b < n; ++b)
      if (g[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
        adj(a, b) = 1.0;
        ++deg;
      }
    fp.degrees.push_back(deg);
  }
  std::sort(fp.degrees.begin(), fp.degrees.end());
  if (n > 0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(adj, Eigen::EigenvaluesOnly);
    for (Eigen::Index i = 0; i < n; ++i) {
      double x = std::round(es.eigenvalues()(i) * 1e6) / 1e6;
      fp.spectrum.push_back(x == 0.0 ? 0.0 : x);
    }
  }
  return fp;
}

std::string to_string(const GraphFingerprint &fp) {
  std::ostringstream os;
  os << "fp(p=" << fp.points << ",l=" << fp.lines << ",sizes=[" << join_sizes(fp.line_sizes)
     << "],deg=[" << join_sizes(fp.degrees) << "])";
  return os.str();
}

std::string Recognition::label() const {
  if (!name.empty())
    return name;
  if (components.empty())
    return to_string(fingerprint);
  std::string out;
  for (const auto &c : components)
    out += (out.empty() ? "" : " + ") + c.label();
  return out;
}

namespace {

Recognition recognize_whole(const IncidenceGeometry &geom);

} // namespace

Recognition recognize(const IncidenceGeometry &geom) {
  Recognition rec = recognize_whole(geom);
  std::vector<std::size_t> big_orbits;
  for (std::size_t i = 0; i < geom.lines.size(); ++i)
    if (geom.lines[i].size() >= 3 &&
        std::find(big_orbits.begin(), big_orbits.end(), geom.line_orbit[i]) ==
            big_orbits.end())
      big_orbits.push_back(geom.line_orbit[i]);
  if (big_orbits.size() >= 2) {
    for (std::size_t o : big_orbits)
      rec.components.push_back(recognize_whole(orbit_component(geom, o)));
    // Orbit numbering follows the point labels, so order components by label.
    std::stable_sort(rec.components.begin(), rec.components.end(),
                     [](const Recognition &a, const Recognition &b) { return a.label() < b.label(); });
    // A complete collinearity graph says nothing once the orbits are split.
    if (rec.name == "K_" + std::to_string(geom.degree))
      rec.name.clear();
  }
  return rec;
}

namespace {

Recognition recognize_whole(const IncidenceGeometry &geom) {
  Recognition rec;
  rec.fingerprint = fingerprint(geom);
  const std::size_t d = geom.degree;

  std::vector<std::vector<Point>> big;
  for (const auto &l : geom.lines)
    if (l.size() >= 3)
      big.push_back(l);

  if (!big.empty()) {
    if (hypergraph_isomorphic(d, big, 7, shapes::fano_plane())) {
      rec.name = "Fano";
      return rec;
    }
    if (hypergraph_isomorphic(d, big, 15, shapes::doily())) {
      rec.name = "GQ(2,2)";
      return rec;
    }
    if (hypergraph_isomorphic(d, big, 10, shapes::mermin_pentagram())) {
      rec.name = "MP";
      return rec;
    }
    if (is_configuration(d, big)) {
      rec.name = "[" + std::to_string(d) + "_3]";
      return rec;
    }
    // Disjoint lines of equal size covering every point.
    std::vector<int> hits(d, 0);
    for (const auto &l : big)
      for (Point p : l)
        ++hits[p];
    const bool uniform = std::all_of(big.begin(), big.end(), [&](const auto &l) {
      return l.size() == big.front().size();
    });
    if (big.size() >= 2 && uniform &&
        std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; })) {
      rec.name = std::to_string(big.size()) + "K_" + std::to_string(big.front().size());
      return rec;
    }
  }

  const Graph g = collinearity_graph(geom);
  if (is_complete(g)) {
    rec.name = "K_" + std::to_string(d);
    return rec;
  }
  if (auto parts = multipartite_parts(g); parts && parts->size() >= 2) {
    std::ostringstream os;
    os << "K(";
    for (std::size_t i = 0; i < parts->size(); ++i)
      os << (i ? "," : "") << (*parts)[i];
    os << ')';
    rec.name = os.str();
    return rec;
  }
  for (std::size_t m = 2; m * m <= d; ++m) {
    if (d % m != 0)
      continue;
    if (isomorphic(g, shapes::line_graph_complement_bipartite(m, d / m))) {
      rec.name = "coL(K(" + std::to_string(m) + "," + std::to_string(d / m) + "))";
      return rec;
    }
  }
  return rec;
}

} // namespace

} // namespace cosetlab
