#include "cosetlab/coset_table.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "cosetlab/error.hpp"

namespace cosetlab {

CosetTable CosetTable::from_actions(std::vector<std::vector<Point>> forward,
                                    Point base) {
  const std::size_t ngens = forward.size();
  const std::size_t n = ngens ? forward[0].size() : 1;
  std::vector<std::vector<Point>> backward(ngens, std::vector<Point>(n));
  for (std::size_t g = 0; g < ngens; ++g) {
    if (forward[g].size() != n)
      throw Error(ErrorCode::InvalidArgument, "generator actions differ in size");
    std::vector<bool> hit(n, false);
    for (Point c = 0; c < n; ++c) {
      const Point t = forward[g][c];
      if (t >= n || hit[t])
        throw Error(ErrorCode::InvalidArgument,
                    "generator action is not a bijection");
      hit[t] = true;
      backward[g][t] = c;
    }
  }
  if (base >= n)
    throw Error(ErrorCode::InvalidArgument, "base coset out of range");

  // Breadth-first renumbering from the base coset.
  constexpr Point unset = static_cast<Point>(-1);
  std::vector<Point> label(n, unset), order;
  std::vector<Word> reps_by_label;
  label[base] = 0;
  order.push_back(base);
  reps_by_label.emplace_back();
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Point c = order[head];
    for (std::size_t g = 0; g < ngens; ++g) {
      for (int sign : {1, -1}) {
        const Point t = sign > 0 ? forward[g][c] : backward[g][c];
        if (label[t] != unset)
          continue;
        label[t] = static_cast<Point>(order.size());
        order.push_back(t);
        reps_by_label.push_back(reps_by_label[head] *
                                Word{Word::letter(g, sign < 0)});
      }
    }
  }
  if (order.size() != n)
    throw Error(ErrorCode::NotTransitive, "coset action is not transitive");

  CosetTable table;
  table.index_ = n;
  table.forward_.assign(ngens, std::vector<Point>(n));
  table.backward_.assign(ngens, std::vector<Point>(n));
  for (std::size_t g = 0; g < ngens; ++g) {
    for (Point c = 0; c < n; ++c) {
      table.forward_[g][label[c]] = label[forward[g][c]];
      table.backward_[g][label[c]] = label[backward[g][c]];
    }
  }
  table.reps_ = std::move(reps_by_label);
  return table;
}

Point CosetTable::coset_of(const Word &w, Point start) const {
  Point c = start;
  for (int l : w.letters())
    c = act(c, l);
  return c;
}

SubgroupSpec CosetTable::schreier_generators() const {
  SubgroupSpec spec;
  std::set<Word> seen;
  for (Point c = 0; c < index_; ++c) {
    for (std::size_t g = 0; g < forward_.size(); ++g) {
      const Point t = forward_[g][c];
      Word w = reps_[c] * Word{Word::letter(g)} * reps_[t].inverse();
      if (w.empty() || seen.count(w) || seen.count(w.inverse()))
        continue;
      seen.insert(w);
      spec.generators.push_back(std::move(w));
    }
  }
  return spec;
}

bool CosetTable::relators_close(const Presentation &p) const {
  for (const auto &r : p.relators) {
    if (r.generator_span() > forward_.size())
      return false;
    for (Point c = 0; c < index_; ++c)
      if (coset_of(r, c) != c)
        return false;
  }
  return true;
}

std::vector<Point> CosetTable::row_major() const {
  std::vector<Point> out;
  out.reserve(index_ * forward_.size() * 2);
  for (Point c = 0; c < index_; ++c)
    for (std::size_t g = 0; g < forward_.size(); ++g) {
      out.push_back(forward_[g][c]);
      out.push_back(backward_[g][c]);
    }
  return out;
}

namespace {

// Hand-rolled HLT enumerator. Columns are 2g (generator) and 2g+1 (inverse).
class Enumerator {
public:
  Enumerator(std::size_t ngens, std::size_t max_cosets)
      : cols_(2 * ngens), max_live_(max_cosets) {
    new_coset();
  }

  static std::size_t col(int letter) {
    return 2 * Word::generator_of(letter) + (letter < 0 ? 1 : 0);
  }

  bool live(std::size_t c) const { return parent_[c] == c; }

  std::size_t size() const { return parent_.size(); }

  int &entry(std::size_t c, std::size_t x) { return table_[c * cols_ + x]; }

  std::size_t new_coset() {
    if (live_ >= max_live_ || parent_.size() >= 4 * max_live_ + 16)
      throw Error(ErrorCode::Overflow,
                  "coset enumeration exceeded " + std::to_string(max_live_) +
                      " cosets");
    const std::size_t c = parent_.size();
    parent_.push_back(c);
    table_.resize(table_.size() + cols_, -1);
    ++live_;
    return c;
  }

  void define(std::size_t c, std::size_t x) {
    const std::size_t n = new_coset();
    entry(c, x) = static_cast<int>(n);
    entry(n, x ^ 1) = static_cast<int>(c);
  }

  void scan_and_fill(std::size_t alpha, const std::vector<std::size_t> &w) {
    const std::size_t r = w.size();
    if (r == 0)
      return;
    std::size_t f = alpha, b = alpha;
    std::size_t i = 0, j = r; // forward scanned w[0..i), backward w[j..r)
    while (true) {
      while (i < r && entry(f, w[i]) >= 0)
        f = static_cast<std::size_t>(entry(f, w[i++]));
      if (i == r) {
        if (f != alpha)
          coincidence(f, alpha);
        return;
      }
      while (j > i && entry(b, w[j - 1] ^ 1) >= 0)
        b = static_cast<std::size_t>(entry(b, w[--j] ^ 1));
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        entry(f, w[i]) = static_cast<int>(b);
        entry(b, w[i] ^ 1) = static_cast<int>(f);
        return;
      }
      define(f, w[i]);
    }
  }

  std::size_t find(std::size_t c) {
    std::size_t root = c;
    while (parent_[root] != root)
      root = parent_[root];
    while (parent_[c] != root) {
      const std::size_t next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(std::size_t k, std::size_t l, std::deque<std::size_t> &queue) {
    k = find(k);
    l = find(l);
    if (k == l)
      return;
    if (l < k)
      std::swap(k, l);
    parent_[l] = k;
    --live_;
    queue.push_back(l);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::deque<std::size_t> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const std::size_t e = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < cols_; ++x) {
        const int fi = entry(e, x);
        if (fi < 0)
          continue;
        const auto f = static_cast<std::size_t>(fi);
        entry(f, x ^ 1) = -1;
        const std::size_t e1 = find(e), f1 = find(f);
        if (entry(e1, x) >= 0) {
          merge(f1, static_cast<std::size_t>(entry(e1, x)), queue);
        } else if (entry(f1, x ^ 1) >= 0) {
          merge(e1, static_cast<std::size_t>(entry(f1, x ^ 1)), queue);
        } else {
          entry(e1, x) = static_cast<int>(f1);
          entry(f1, x ^ 1) = static_cast<int>(e1);
        }
      }
    }
  }

  std::size_t cols_;
  std::size_t max_live_;
  std::size_t live_ = 0;
  std::vector<std::size_t> parent_;
  std::vector<int> table_;
};

std::vector<std::size_t> to_columns(const Word &w) {
  std::vector<std::size_t> cols;
  cols.reserve(w.size());
  for (int l : w.letters())
    cols.push_back(Enumerator::col(l));
  return cols;
}

} // namespace

CosetTable todd_coxeter(const Presentation &pres, const SubgroupSpec &sub,
                        std::size_t max_cosets) {
  if (max_cosets < 1)
    throw Error(ErrorCode::InvalidArgument, "max_cosets must be at least 1");
  const std::size_t ngens = pres.generator_count();
  if (ngens == 0)
    throw Error(ErrorCode::InvalidArgument, "presentation has no generators");
  for (const auto &w : sub.generators)
    if (w.generator_span() > ngens)
      throw Error(ErrorCode::InvalidArgument,
                  "subgroup generator uses an undeclared generator");

  std::vector<std::vector<std::size_t>> relators;
  for (const auto &r : pres.relators) {
    Word c = cyclically_reduce(r);
    if (!c.empty())
      relators.push_back(to_columns(c));
  }

  Enumerator en(ngens, max_cosets);
  for (const auto &h : sub.generators)
    en.scan_and_fill(0, to_columns(h));

  for (std::size_t c = 0; c < en.size(); ++c) {
    for (const auto &r : relators) {
      if (!en.live(c))
        break;
      en.scan_and_fill(c, r);
    }
    if (!en.live(c))
      continue;
    for (std::size_t x = 0; x < 2 * ngens; ++x) {
      if (!en.live(c))
        break;
      if (en.entry(c, x) < 0)
        en.define(c, x);
    }
  }

  // Compact live cosets and hand over to standardization.
  std::vector<Point> compact(en.size(), static_cast<Point>(-1));
  Point n = 0;
  for (std::size_t c = 0; c < en.size(); ++c)
    if (en.live(c))
      compact[c] = n++;
  std::vector<std::vector<Point>> forward(ngens, std::vector<Point>(n));
  for (std::size_t c = 0; c < en.size(); ++c) {
    if (!en.live(c))
      continue;
    for (std::size_t g = 0; g < ngens; ++g) {
      const int t = en.entry(c, 2 * g);
      if (t < 0)
        throw Error(ErrorCode::InvalidArgument,
                    "coset enumeration left an incomplete table");
      forward[g][compact[c]] = compact[en.find(static_cast<std::size_t>(t))];
    }
  }
  return CosetTable::from_actions(std::move(forward), compact[en.find(0)]);
}

std::vector<Permutation> permutation_rep(const CosetTable &table) {
  std::vector<Permutation> perms;
  for (std::size_t g = 0; g < table.generator_count(); ++g)
    perms.emplace_back(table.forward(g));
  return perms;
}

Permutation word_permutation(const Word &w, const std::vector<Permutation> &gens) {
  if (gens.empty())
    throw Error(ErrorCode::InvalidArgument, "no generators");
  std::vector<Point> img = Permutation::identity(gens[0].degree()).images();
  for (int l : w.letters()) {
    const auto &g = gens.at(Word::generator_of(l));
    if (l > 0) {
      for (auto &x : img)
        x = g(x);
    } else {
      const auto inv = g.inverse();
      for (auto &x : img)
        x = inv(x);
    }
  }
  return Permutation(std::move(img));
}

Point coset_of(const CosetTable &table, const Word &w) {
  return table.coset_of(w, 0);
}

} // namespace cosetlab
