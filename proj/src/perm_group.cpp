#include "cosetlab/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "cosetlab/error.hpp"
#include "cosetlab/low_index.hpp"

namespace cosetlab {

std::string to_string(GroupOrder n) {
  if (n == 0)
    return "0";
  std::string s;
  while (n > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(n % 10)));
    n /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::vector<Point> base_prefix)
    : degree_(degree) {
  for (auto &g : generators) {
    if (g.degree() != degree)
      throw Error(ErrorCode::InvalidArgument, "generator degree mismatch");
    if (!g.is_identity() && std::find(gens_.begin(), gens_.end(), g) == gens_.end())
      gens_.push_back(std::move(g));
  }
  for (Point b : base_prefix)
    if (b >= degree)
      throw Error(ErrorCode::InvalidArgument, "base point out of range");
  schreier_sims(std::move(base_prefix));
}

void PermGroup::rebuild_orbit(Level &level) const {
  level.orbit.assign(1, level.base);
  level.rep_index.assign(degree_, -1);
  level.reps.assign(1, Permutation::identity(degree_));
  level.rep_index[level.base] = 0;
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    const Point g = level.orbit[i];
    for (const auto &s : level.gens) {
      const Point h = s(g);
      if (level.rep_index[h] >= 0)
        continue;
      level.rep_index[h] = static_cast<int>(level.reps.size());
      level.reps.push_back(level.reps[static_cast<std::size_t>(level.rep_index[g])] * s);
      level.orbit.push_back(h);
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::strip(Permutation g,
                                                     std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const auto &level = levels_[l];
    const Point beta = g(level.base);
    const int idx = level.rep_index[beta];
    if (idx < 0)
      return {std::move(g), l};
    g = g * level.reps[static_cast<std::size_t>(idx)].inverse();
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::schreier_sims(std::vector<Point> prefix) {
  levels_.clear();
  auto fixes_base = [this](const Permutation &g) {
    for (const auto &l : levels_)
      if (g(l.base) != l.base)
        return false;
    return true;
  };
  auto first_moved = [](const Permutation &g) {
    for (Point x = 0; x < g.degree(); ++x)
      if (g(x) != x)
        return x;
    return Point{0};
  };
  for (Point b : prefix) {
    if (std::any_of(levels_.begin(), levels_.end(),
                    [b](const Level &l) { return l.base == b; }))
      continue;
    levels_.push_back(Level{b, {}, {}, {}, {}});
  }
  for (const auto &g : gens_)
    if (fixes_base(g))
      levels_.push_back(Level{first_moved(g), {}, {}, {}, {}});

  // Level i holds the strong generators that fix base points 0..i-1.
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const auto &g : gens_) {
      bool fixes = true;
      for (std::size_t j = 0; j < i && fixes; ++j)
        fixes = g(levels_[j].base) == levels_[j].base;
      if (fixes)
        levels_[i].gens.push_back(g);
    }
    rebuild_orbit(levels_[i]);
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    const auto li = static_cast<std::size_t>(i);
    bool changed = false;
    for (std::size_t oi = 0; oi < levels_[li].orbit.size() && !changed; ++oi) {
      const Point beta = levels_[li].orbit[oi];
      for (std::size_t si = 0; si < levels_[li].gens.size() && !changed; ++si) {
        const auto &level = levels_[li];
        const auto &x = level.gens[si];
        const auto &u_beta = level.reps[static_cast<std::size_t>(level.rep_index[beta])];
        const auto &u_img =
            level.reps[static_cast<std::size_t>(level.rep_index[x(beta)])];
        Permutation h = u_beta * x * u_img.inverse();
        if (h.is_identity())
          continue;
        auto [y, j] = strip(std::move(h), li + 1);
        if (j == levels_.size() && y.is_identity())
          continue;
        if (j == levels_.size())
          levels_.push_back(Level{first_moved(y), {}, {}, {}, {}});
        for (std::size_t l = li + 1; l <= j; ++l) {
          levels_[l].gens.push_back(y);
          rebuild_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(j);
        changed = true;
      }
    }
    if (!changed)
      --i;
  }

  // Trivial trailing levels carry no information.
  while (!levels_.empty() && levels_.back().orbit.size() == 1 &&
         levels_.back().gens.empty())
    levels_.pop_back();
  base_.clear();
  for (const auto &l : levels_)
    base_.push_back(l.base);
}

std::vector<std::size_t> PermGroup::transversal_sizes() const {
  std::vector<std::size_t> sizes;
  for (const auto &l : levels_)
    sizes.push_back(l.orbit.size());
  return sizes;
}

GroupOrder PermGroup::order() const {
  GroupOrder n = 1;
  for (const auto &l : levels_)
    n *= l.orbit.size();
  return n;
}

bool PermGroup::contains(const Permutation &p) const {
  if (p.degree() != degree_)
    return false;
  auto [y, j] = strip(p, 0);
  return j == levels_.size() && y.is_identity();
}

bool PermGroup::is_subgroup_of(const PermGroup &other) const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [&](const Permutation &g) { return other.contains(g); });
}

bool operator==(const PermGroup &a, const PermGroup &b) {
  return a.degree_ == b.degree_ && a.order() == b.order() && a.is_subgroup_of(b);
}

PermGroup PermGroup::stabilizer(const std::vector<Point> &points) const {
  PermGroup chained(degree_, gens_, points);
  // Strong generators at level k fix the first k base points, which are the
  // requested points (duplicates are skipped when the prefix is installed).
  std::vector<Point> distinct;
  for (Point p : points)
    if (std::find(distinct.begin(), distinct.end(), p) == distinct.end())
      distinct.push_back(p);
  const std::size_t k = distinct.size();
  if (chained.levels_.size() <= k)
    return PermGroup::trivial(degree_);
  return PermGroup(degree_, chained.levels_[k].gens);
}

std::vector<Permutation> PermGroup::elements(std::size_t limit) const {
  if (order() > limit)
    throw Error(ErrorCode::InvalidArgument,
                "group order " + to_string(order()) + " exceeds element limit " +
                    std::to_string(limit));
  // Every element is u_{k-1} * ... * u_0 with u_l a transversal element.
  std::vector<Permutation> out{Permutation::identity(degree_)};
  for (std::size_t l = levels_.size(); l-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(out.size() * levels_[l].reps.size());
    for (const auto &prefix : out)
      for (const auto &u : levels_[l].reps)
        next.push_back(prefix * u);
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    if (b < a)
      std::swap(a, b);
    parent[b] = a;
    return true;
  }
  std::vector<std::size_t> parent;
};

} // namespace

std::vector<std::vector<Point>> PermGroup::orbits() const {
  UnionFind uf(degree_);
  for (const auto &g : gens_)
    for (Point x = 0; x < degree_; ++x)
      uf.unite(x, g(x));
  std::vector<std::vector<Point>> out;
  std::vector<int> slot(degree_, -1);
  for (Point x = 0; x < degree_; ++x) {
    const auto r = uf.find(x);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[r])].push_back(x);
  }
  return out;
}

bool PermGroup::is_transitive() const { return orbits().size() <= 1; }

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (!commutes(gens_[i], gens_[j]))
        return false;
  return true;
}

std::size_t rank(const PermGroup &p) {
  if (!p.is_transitive())
    throw Error(ErrorCode::NotTransitive, "rank requires a transitive group");
  const std::size_t n = p.degree();
  UnionFind uf(n * n);
  for (const auto &g : p.generators())
    for (Point a = 0; a < n; ++a)
      for (Point b = 0; b < n; ++b)
        uf.unite(a * n + b, g(a) * n + g(b));
  std::size_t count = 0;
  for (std::size_t x = 0; x < n * n; ++x)
    if (uf.find(x) == x)
      ++count;
  return count;
}

std::size_t suborbit_count(const PermGroup &p) {
  if (p.degree() == 0)
    return 0;
  return p.point_stabilizer(0).orbits().size();
}

PermGroup two_point_stabilizer(const PermGroup &p, Point a, Point b) {
  if (a == b)
    throw Error(ErrorCode::InvalidArgument, "two-point stabilizer needs a != b");
  if (a >= p.degree() || b >= p.degree())
    throw Error(ErrorCode::InvalidArgument, "point out of range");
  return p.stabilizer({a, b});
}

PermGroup normal_closure(const PermGroup &p, const PermGroup &s) {
  if (s.degree() != p.degree() || !s.is_subgroup_of(p))
    throw Error(ErrorCode::InvalidArgument, "subgroup is not contained in P");
  std::vector<Permutation> gens = s.generators();
  PermGroup n(p.degree(), gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto &g : p.generators()) {
      Permutation c = conjugate(gens[i], g);
      if (!n.contains(c)) {
        gens.push_back(std::move(c));
        n = PermGroup(p.degree(), gens);
      }
    }
  }
  return n;
}

PermGroup derived_subgroup(const PermGroup &p) {
  std::vector<Permutation> comms;
  const auto &g = p.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      Permutation c = g[i].inverse() * g[j].inverse() * g[i] * g[j];
      if (!c.is_identity())
        comms.push_back(std::move(c));
    }
  return normal_closure(p, PermGroup(p.degree(), std::move(comms)));
}

PermGroup coset_group(const SubgroupRecord &record) {
  return PermGroup(record.table.index(), permutation_rep(record.table));
}

bool axiom_i(const PermGroup &p) {
  if (p.degree() <= 1)
    return true;
  return normal_closure(p, p.point_stabilizer(0)).order() == p.order();
}

bool axiom_i(const SubgroupRecord &record) { return axiom_i(coset_group(record)); }

const char *to_string(CoveringType t) {
  switch (t) {
  case CoveringType::Cyclic:
    return "cyc";
  case CoveringType::Regular:
    return "reg";
  case CoveringType::Irregular:
    return "irr";
  }
  return "irr";
}

CoveringType covering_type(const PermGroup &p) {
  // A transitive abelian group is regular, so cyclic implies |P| = degree.
  if (p.order() != p.degree())
    return CoveringType::Irregular;
  for (const auto &e : p.elements(p.degree()))
    if (e.order() == p.degree())
      return CoveringType::Cyclic;
  return CoveringType::Regular;
}

CoveringType covering_type(const SubgroupRecord &record) {
  return covering_type(coset_group(record));
}

namespace {

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> f;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e)
      f.emplace_back(p, e);
  }
  if (n > 1)
    f.emplace_back(n, 1);
  return f;
}

Permutation power(const Permutation &g, std::uint64_t e) {
  Permutation r = Permutation::identity(g.degree());
  Permutation b = g;
  while (e) {
    if (e & 1)
      r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

// Invariants of P/P' from |{g : g^(p^j) in P'}|, which is |P'| times the
// number of elements of the quotient killed by p^j.
std::vector<std::uint64_t> abelian_invariants(const std::vector<Permutation> &elements,
                                              const PermGroup &derived) {
  const auto m = static_cast<std::uint64_t>(elements.size() /
                                            static_cast<std::size_t>(derived.order()));
  std::vector<std::uint64_t> out;
  for (const auto &[p, e] : factorize(m)) {
    std::vector<int> log_count(static_cast<std::size_t>(e) + 1, 0);
    std::uint64_t q = 1;
    for (int j = 1; j <= e; ++j) {
      q *= p;
      std::uint64_t hits = 0;
      for (const auto &g : elements)
        if (derived.contains(power(g, q)))
          ++hits;
      hits /= static_cast<std::uint64_t>(derived.order());
      int lg = 0;
      while (hits > 1) {
        hits /= p;
        ++lg;
      }
      log_count[static_cast<std::size_t>(j)] = lg;
    }
    // at_least[j] = number of cyclic factors of exponent >= j.
    std::vector<int> at_least(static_cast<std::size_t>(e) + 2, 0);
    for (int j = 1; j <= e; ++j)
      at_least[static_cast<std::size_t>(j)] =
          log_count[static_cast<std::size_t>(j)] - log_count[static_cast<std::size_t>(j) - 1];
    std::uint64_t pj = 1;
    for (int j = 1; j <= e; ++j) {
      pj *= p;
      const int exactly = at_least[static_cast<std::size_t>(j)] -
                          at_least[static_cast<std::size_t>(j) + 1];
      for (int k = 0; k < exactly; ++k)
        out.push_back(pj);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> class_representatives(const std::vector<Permutation> &elements,
                                               const PermGroup &p) {
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  for (std::size_t i = 0; i < elements.size(); ++i)
    index.emplace(elements[i], i);
  std::vector<bool> seen(elements.size(), false);
  std::vector<Permutation> reps;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (seen[i])
      continue;
    reps.push_back(elements[i]);
    std::vector<std::size_t> stack{i};
    seen[i] = true;
    while (!stack.empty()) {
      const auto cur = stack.back();
      stack.pop_back();
      for (const auto &g : p.generators()) {
        const auto j = index.at(conjugate(elements[cur], g));
        if (!seen[j]) {
          seen[j] = true;
          stack.push_back(j);
        }
      }
    }
  }
  return reps;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i)
    f *= i;
  return f;
}

} // namespace

StructureNote structure_describe(const PermGroup &p, std::size_t element_cap) {
  StructureNote note;
  note.order = p.order();
  note.degree = p.degree();
  note.abelian = p.is_abelian();
  note.name = "unrecognized";
  if (note.order == 1) {
    note.abelian_invariants = std::vector<std::uint64_t>{};
    note.simple = false;
    note.name = "trivial";
    return note;
  }
  const std::size_t n = p.degree();
  if (n >= 3 && n <= 20 && note.order == factorial(n) / 2)
    note.name = "A" + std::to_string(n);
  else if (n >= 3 && n <= 20 && note.order == factorial(n))
    note.name = "S" + std::to_string(n);
  if (note.order > element_cap)
    return note;

  const auto order = static_cast<std::uint64_t>(note.order);
  const auto elements = p.elements(element_cap);
  const PermGroup derived = note.abelian ? PermGroup::trivial(p.degree())
                                         : derived_subgroup(p);
  note.abelian_invariants = abelian_invariants(elements, derived);

  if (note.abelian) {
    note.simple = factorize(order).size() == 1 && factorize(order)[0].second == 1;
  } else if (derived.order() != note.order) {
    note.simple = false;
  } else {
    bool simple = true;
    for (const auto &rep : class_representatives(elements, p)) {
      if (rep.is_identity())
        continue;
      if (normal_closure(p, PermGroup(p.degree(), {rep})).order() != note.order) {
        simple = false;
        break;
      }
    }
    note.simple = simple;
  }

  std::uint64_t max_elem = 1;
  for (const auto &e : elements)
    max_elem = std::max(max_elem, e.order());
  if (max_elem == order) {
    note.name = "C" + std::to_string(order);
  } else if (note.name != "unrecognized") {
    // A_n or S_n, already named.
  } else if ((order == 60 || order == 360) && note.simple == true) {
    // The only simple groups of these orders.
    note.name = order == 60 ? "A5" : "A6";
  } else if (order == 168 && note.simple == true) {
    note.name = "PSL(2,7)";
  } else if (order == 504 && note.simple == true) {
    note.name = "PSL(2,8)";
  } else if (order >= 6 && order % 2 == 0 && max_elem == order / 2) {
    // Dihedral: a cyclic subgroup of index 2 whose complement is all involutions.
    for (const auto &r : elements) {
      if (r.order() != order / 2)
        continue;
      PermGroup rotations(p.degree(), {r});
      const bool dihedral =
          std::all_of(elements.begin(), elements.end(), [&](const Permutation &e) {
            return rotations.contains(e) || e.order() == 2;
          });
      if (dihedral)
        note.name = "D" + std::to_string(order);
      break;
    }
  }
  return note;
}

} // namespace cosetlab
