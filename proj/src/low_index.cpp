#include "cosetlab/low_index.hpp"

#include <algorithm>

namespace cosetlab {

namespace {

using Cell = std::uint8_t;
constexpr Cell undefined = 0xFF;
constexpr std::size_t max_supported_index = 250;

// Backtracking over standard partial coset tables. A branch is cut as soon
// as a relator cannot close or some other base point yields a smaller
// standardized prefix, so every conjugacy class is reached exactly once, at
// its minimal table.
class Search {
public:
  Search(const Presentation &pres, std::size_t max_index,
         const LowIndexOptions &opts,
         std::function<void(std::size_t, const std::vector<Cell> &)> emit)
      : cols_(2 * pres.generator_count()), max_index_(max_index), opts_(opts),
        emit_(std::move(emit)), table_(max_index * cols_, undefined),
        map_(max_index), order_(max_index) {
    rotations_.resize(cols_);
    for (const auto &r : pres.relators) {
      const Word c = cyclically_reduce(r);
      if (c.empty())
        continue;
      for (const Word &w : {c, c.inverse()}) {
        std::vector<Cell> seq;
        for (int l : w.letters())
          seq.push_back(static_cast<Cell>(2 * Word::generator_of(l) +
                                          (l < 0 ? 1 : 0)));
        for (std::size_t s = 0; s < seq.size(); ++s) {
          std::vector<Cell> rot(seq.begin() + static_cast<std::ptrdiff_t>(s),
                                seq.end());
          rot.insert(rot.end(), seq.begin(),
                     seq.begin() + static_cast<std::ptrdiff_t>(s));
          auto &bucket = rotations_[rot[0]];
          if (std::find(bucket.begin(), bucket.end(), rot) == bucket.end())
            bucket.push_back(std::move(rot));
        }
      }
    }
  }

  void run() {
    active_ = 1;
    dfs(0);
  }

  std::uint64_t nodes() const { return nodes_; }
  std::size_t found() const { return found_; }

private:
  Cell &at(std::size_t c, std::size_t x) { return table_[c * cols_ + x]; }

  void set(std::size_t c, std::size_t x, std::size_t t) {
    at(c, x) = static_cast<Cell>(t);
    at(t, x ^ 1) = static_cast<Cell>(c);
    trail_.push_back(static_cast<std::uint32_t>(c * cols_ + x));
    trail_.push_back(static_cast<std::uint32_t>(t * cols_ + (x ^ 1)));
    queue_.push_back({static_cast<Cell>(c), static_cast<Cell>(x)});
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      table_[trail_.back()] = undefined;
      trail_.pop_back();
    }
  }

  // Scan one relator rotation from coset c; false on a contradiction.
  bool scan(std::size_t c, const std::vector<Cell> &seq) {
    const std::size_t r = seq.size();
    std::size_t f = c, i = 0;
    while (i < r && at(f, seq[i]) != undefined)
      f = at(f, seq[i++]);
    if (i == r)
      return f == c;
    std::size_t b = c, j = r;
    while (j > i && at(b, seq[j - 1] ^ 1) != undefined)
      b = at(b, seq[--j] ^ 1);
    if (j == i)
      return f == b;
    if (j == i + 1) {
      if (at(b, seq[i] ^ 1) != undefined)
        return false;
      set(f, seq[i], b);
    }
    return true;
  }

  bool process_deductions() {
    while (!queue_.empty()) {
      const auto [c, x] = queue_.back();
      queue_.pop_back();
      for (const auto &seq : rotations_[x])
        if (!scan(c, seq))
          return false;
    }
    return true;
  }

  // False if some base point gives a standardized prefix smaller than ours.
  bool canonical() {
    for (std::size_t beta = 1; beta < active_; ++beta) {
      std::fill(map_.begin(), map_.begin() + static_cast<std::ptrdiff_t>(active_),
                undefined);
      map_[beta] = 0;
      order_[0] = static_cast<Cell>(beta);
      std::size_t next = 1;
      bool decided = false;
      for (std::size_t i = 0; i < next && !decided; ++i) {
        const std::size_t src = order_[i];
        for (std::size_t x = 0; x < cols_; ++x) {
          const Cell e = at(i, x);
          const Cell t = at(src, x);
          if (e == undefined || t == undefined) {
            decided = true;
            break;
          }
          Cell mt = map_[t];
          if (mt == undefined) {
            mt = map_[t] = static_cast<Cell>(next);
            order_[next++] = t;
          }
          if (mt < e)
            return false;
          if (mt > e) {
            decided = true;
            break;
          }
        }
      }
    }
    return true;
  }

  void dfs(std::size_t pos) {
    if (++nodes_ > opts_.node_budget)
      throw LowIndexBudgetError(nodes_, found_);
    if (opts_.progress && nodes_ % opts_.progress_interval == 0)
      opts_.progress(nodes_);

    const std::size_t end = active_ * cols_;
    while (pos < end && table_[pos] != undefined)
      ++pos;
    if (pos == end) {
      ++found_;
      emit_(active_, table_);
      return;
    }
    const std::size_t c = pos / cols_, x = pos % cols_;
    const std::size_t mark = trail_.size();
    for (std::size_t t = 0; t <= active_ && t < max_index_; ++t) {
      const bool fresh = t == active_;
      if (!fresh && at(t, x ^ 1) != undefined)
        continue;
      if (fresh)
        ++active_;
      queue_.clear();
      set(c, x, t);
      if (process_deductions() && canonical())
        dfs(pos + 1);
      undo(mark);
      if (fresh)
        --active_;
    }
  }

  std::size_t cols_;
  std::size_t max_index_;
  const LowIndexOptions &opts_;
  std::function<void(std::size_t, const std::vector<Cell> &)> emit_;
  std::vector<std::vector<std::vector<Cell>>> rotations_;
  std::vector<Cell> table_;
  std::vector<std::uint32_t> trail_;
  std::vector<std::pair<Cell, Cell>> queue_;
  std::vector<Cell> map_;
  std::vector<Cell> order_;
  std::size_t active_ = 0;
  std::uint64_t nodes_ = 0;
  std::size_t found_ = 0;
};

void check_arguments(const Presentation &pres, std::size_t d) {
  if (d < 1)
    throw Error(ErrorCode::InvalidArgument, "index must be at least 1");
  if (d > max_supported_index)
    throw Error(ErrorCode::InvalidArgument, "index too large");
  if (pres.generator_count() == 0)
    throw Error(ErrorCode::InvalidArgument, "presentation has no generators");
}

// Number of base points whose standardized table equals the table itself.
std::size_t self_relabelings(const CosetTable &table) {
  std::size_t count = 0;
  std::vector<std::vector<Point>> forward;
  for (std::size_t g = 0; g < table.generator_count(); ++g)
    forward.push_back(table.forward(g));
  for (Point beta = 0; beta < table.index(); ++beta)
    if (CosetTable::from_actions(forward, beta) == table)
      ++count;
  return count;
}

} // namespace

std::vector<SubgroupRecord> low_index_subgroups(const Presentation &pres,
                                                std::size_t d,
                                                const LowIndexOptions &opts) {
  check_arguments(pres, d);
  const std::size_t ngens = pres.generator_count();
  std::vector<SubgroupRecord> records;
  Search search(pres, d, opts,
                [&](std::size_t n, const std::vector<Cell> &table) {
                  if (n != d)
                    return;
                  std::vector<std::vector<Point>> forward(ngens,
                                                          std::vector<Point>(n));
                  for (std::size_t c = 0; c < n; ++c)
                    for (std::size_t g = 0; g < ngens; ++g)
                      forward[g][c] = table[c * 2 * ngens + 2 * g];
                  SubgroupRecord rec;
                  rec.index = d;
                  rec.table = CosetTable::from_actions(std::move(forward), 0);
                  records.push_back(std::move(rec));
                });
  search.run();
  if (opts.progress)
    opts.progress(search.nodes());

  std::sort(records.begin(), records.end(),
            [](const SubgroupRecord &a, const SubgroupRecord &b) {
              return a.table.row_major() < b.table.row_major();
            });
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto &rec = records[i];
    rec.class_ordinal = i + 1;
    rec.generators = rec.table.schreier_generators();
    rec.class_size = d / self_relabelings(rec.table);
  }
  return records;
}

std::vector<std::size_t> eta_sequence(const Presentation &pres, std::size_t d_max,
                                      const LowIndexOptions &opts) {
  check_arguments(pres, d_max);
  std::vector<std::size_t> counts(d_max, 0);
  Search search(pres, d_max, opts,
                [&](std::size_t n, const std::vector<Cell> &) { ++counts[n - 1]; });
  search.run();
  return counts;
}

} // namespace cosetlab
