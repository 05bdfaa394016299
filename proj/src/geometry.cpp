#include "cosetlab/geometry.hpp"

#include <algorithm>
#include <numeric>

#include "cosetlab/error.hpp"

namespace cosetlab {

const char *to_string(Convention c) {
  return c == Convention::TrivialExcluded ? "excl" : "incl";
}

std::optional<Convention> parse_convention(std::string_view text) {
  if (text == "excl" || text == "trivial-excluded")
    return Convention::TrivialExcluded;
  if (text == "incl" || text == "trivial-included")
    return Convention::TrivialIncluded;
  return std::nullopt;
}

namespace {

using Clique = std::vector<Point>;

// Bron-Kerbosch with pivoting; vertex sets are kept sorted.
void bron_kerbosch(const Graph &g, Clique &r, std::vector<Point> p, std::vector<Point> x,
                   std::vector<Clique> &out) {
  if (p.empty() && x.empty()) {
    Clique c = r;
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
    return;
  }
  Point pivot = p.empty() ? x.front() : p.front();
  std::size_t best = 0;
  for (const auto &cands : {p, x})
    for (Point u : cands) {
      std::size_t n = 0;
      for (Point v : p)
        n += g[u][v];
      if (n > best) {
        best = n;
        pivot = u;
      }
    }
  const std::vector<Point> candidates = p;
  for (Point v : candidates) {
    if (g[pivot][v])
      continue;
    std::vector<Point> np, nx;
    for (Point u : p)
      if (g[v][u])
        np.push_back(u);
    for (Point u : x)
      if (g[v][u])
        nx.push_back(u);
    r.push_back(v);
    bron_kerbosch(g, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.insert(std::upper_bound(x.begin(), x.end(), v), v);
  }
}

std::vector<Clique> maximal_cliques(const Graph &g, const std::vector<Point> &vertices) {
  std::vector<Clique> out;
  Clique r;
  bron_kerbosch(g, r, vertices, {}, out);
  return out;
}

// Drops cliques of size >= 3 whose every pair also lies on a larger clique.
std::vector<Clique> drop_covered(std::vector<Clique> cliques) {
  std::vector<bool> keep(cliques.size(), true);
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    const auto &c = cliques[i];
    if (c.size() < 3)
      continue;
    bool covered = true;
    for (std::size_t a = 0; a < c.size() && covered; ++a)
      for (std::size_t b = a + 1; b < c.size() && covered; ++b) {
        covered = std::any_of(cliques.begin(), cliques.end(), [&](const Clique &o) {
          return o.size() > c.size() &&
                 std::binary_search(o.begin(), o.end(), c[a]) &&
                 std::binary_search(o.begin(), o.end(), c[b]);
        });
      }
    keep[i] = !covered;
  }
  std::vector<Clique> out;
  for (std::size_t i = 0; i < cliques.size(); ++i)
    if (keep[i])
      out.push_back(std::move(cliques[i]));
  return out;
}

} // namespace

IncidenceGeometry build_geometry(const PermGroup &p, Convention convention) {
  const std::size_t d = p.degree();
  if (d < 2)
    throw Error(ErrorCode::InvalidArgument, "geometry needs degree >= 2");
  if (!p.is_transitive())
    throw Error(ErrorCode::NotTransitive, "geometry needs a transitive group");

  // Partition unordered pairs by their two-point stabilizer.
  std::vector<PermGroup> classes;
  std::vector<std::vector<std::pair<Point, Point>>> members;
  for (Point a = 0; a < d; ++a) {
    const PermGroup pa = p.point_stabilizer(a);
    for (Point b = a + 1; b < d; ++b) {
      PermGroup s = pa.point_stabilizer(b);
      std::size_t k = 0;
      while (k < classes.size() && !(classes[k] == s))
        ++k;
      if (k == classes.size()) {
        classes.push_back(std::move(s));
        members.emplace_back();
      }
      members[k].emplace_back(a, b);
    }
  }

  std::vector<std::pair<Clique, std::size_t>> lines;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (convention == Convention::TrivialExcluded && classes[k].is_trivial()) {
      for (auto [a, b] : members[k])
        lines.push_back({{a, b}, k});
      continue;
    }
    Graph g(d, std::vector<bool>(d, false));
    std::vector<bool> used(d, false);
    for (auto [a, b] : members[k]) {
      g[a][b] = g[b][a] = true;
      used[a] = used[b] = true;
    }
    std::vector<Point> vertices;
    for (Point v = 0; v < d; ++v)
      if (used[v])
        vertices.push_back(v);
    for (auto &c : drop_covered(maximal_cliques(g, vertices)))
      lines.push_back({std::move(c), k});
  }
  std::sort(lines.begin(), lines.end());

  IncidenceGeometry geom;
  geom.degree = d;
  geom.convention = convention;
  for (auto &[pts, k] : lines) {
    geom.lines.push_back(std::move(pts));
    geom.line_stabilizers.push_back(classes[k]);
  }

  // P permutes the lines; group them into orbits.
  std::vector<std::size_t> parent(geom.lines.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < geom.lines.size(); ++i)
    for (const auto &g : p.generators()) {
      Clique img;
      for (Point x : geom.lines[i])
        img.push_back(g(x));
      std::sort(img.begin(), img.end());
      const auto it = std::lower_bound(geom.lines.begin(), geom.lines.end(), img);
      if (it == geom.lines.end() || *it != img)
        throw Error(ErrorCode::InvalidArgument, "line set is not P-invariant");
      auto a = find(i), b = find(static_cast<std::size_t>(it - geom.lines.begin()));
      if (a != b)
        parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::size_t> id(geom.lines.size(), 0);
  std::size_t next = 0;
  for (std::size_t i = 0; i < geom.lines.size(); ++i) {
    const auto r = find(i);
    geom.line_orbit.push_back(r == i ? next++ : id[r]);
    id[i] = geom.line_orbit.back();
  }
  return geom;
}

IncidenceGeometry orbit_component(const IncidenceGeometry &geom, std::size_t orbit) {
  IncidenceGeometry sub;
  sub.degree = geom.degree;
  sub.convention = geom.convention;
  for (std::size_t i = 0; i < geom.lines.size(); ++i)
    if (geom.line_orbit[i] == orbit) {
      sub.lines.push_back(geom.lines[i]);
      sub.line_stabilizers.push_back(geom.line_stabilizers[i]);
      sub.line_orbit.push_back(0);
    }
  return sub;
}

bool has_triangle(const IncidenceGeometry &geom) {
  return std::any_of(geom.lines.begin(), geom.lines.end(),
                     [](const auto &l) { return l.size() >= 3; });
}

bool axiom_ii(const IncidenceGeometry &geom) { return !has_triangle(geom); }

namespace {

std::vector<Permutation> representative_perms(const IncidenceGeometry &geom,
                                              const CosetTable &table) {
  if (table.index() != geom.degree)
    throw Error(ErrorCode::InvalidArgument, "table and geometry differ in degree");
  const auto gens = permutation_rep(table);
  std::vector<Permutation> reps;
  for (const auto &w : table.schreier_reps())
    reps.push_back(word_permutation(w, gens));
  return reps;
}

} // namespace

std::vector<std::size_t> contextual_lines(const IncidenceGeometry &geom,
                                          const CosetTable &table) {
  const auto reps = representative_perms(geom, table);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < geom.lines.size(); ++i) {
    const auto &l = geom.lines[i];
    bool ctx = false;
    for (std::size_t a = 0; a < l.size() && !ctx; ++a)
      for (std::size_t b = a + 1; b < l.size() && !ctx; ++b)
        ctx = !commutes(reps[l[a]], reps[l[b]]);
    if (ctx)
      out.push_back(i);
  }
  return out;
}

std::vector<std::array<Point, 3>> contextual_triangles(const IncidenceGeometry &geom,
                                                       const CosetTable &table) {
  const auto reps = representative_perms(geom, table);
  std::vector<std::array<Point, 3>> out;
  for (const auto &l : geom.lines) {
    for (std::size_t a = 0; a < l.size(); ++a)
      for (std::size_t b = a + 1; b < l.size(); ++b)
        for (std::size_t c = b + 1; c < l.size(); ++c) {
          const auto &x = reps[l[a]], &y = reps[l[b]], &z = reps[l[c]];
          if (!commutes(x, y) || !commutes(x, z) || !commutes(y, z))
            out.push_back({l[a], l[b], l[c]});
        }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Graph collinearity_graph(const IncidenceGeometry &geom) {
  const std::size_t d = geom.degree;
  Graph g(d, std::vector<bool>(d, false));
  if (axiom_ii(geom)) {
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        g[a][b] = a != b;
    return g;
  }
  for (const auto &l : geom.lines) {
    if (l.size() < 3)
      continue;
    for (Point a : l)
      for (Point b : l)
        if (a != b)
          g[a][b] = true;
  }
  return g;
}

} // namespace cosetlab
