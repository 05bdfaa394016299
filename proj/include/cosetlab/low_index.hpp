#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "cosetlab/coset_table.hpp"
#include "cosetlab/error.hpp"
#include "cosetlab/presentation.hpp"

namespace cosetlab {

/// One conjugacy class of index-d subgroups, represented by its canonical
/// (base-point minimal) standardized coset table.
struct SubgroupRecord {
  std::size_t index = 0;
  /// 1-based position in the canonical-form order of its index.
  std::size_t class_ordinal = 0;
  CosetTable table;
  SubgroupSpec generators;
  /// Number of subgroups in the conjugacy class, i.e. [G : N_G(H)].
  std::size_t class_size = 0;
};

struct LowIndexOptions {
  std::uint64_t node_budget = 100'000'000;
  /// Called every `progress_interval` search nodes with the node count, and
  /// once more when the search completes.
  std::function<void(std::uint64_t)> progress;
  std::uint64_t progress_interval = 1u << 22;
};

/// Thrown when the node budget runs out; carries what was found so far.
class LowIndexBudgetError : public Error {
public:
  LowIndexBudgetError(std::uint64_t nodes, std::size_t partial_count)
      : Error(ErrorCode::BudgetExceeded,
              "low-index search exceeded its node budget after " +
                  std::to_string(nodes) + " nodes (" +
                  std::to_string(partial_count) + " classes found so far)"),
        nodes_(nodes), partial_count_(partial_count) {}

  std::uint64_t nodes() const noexcept { return nodes_; }
  std::size_t partial_count() const noexcept { return partial_count_; }
  bool partial() const noexcept { return true; }

private:
  std::uint64_t nodes_;
  std::size_t partial_count_;
};

/// All conjugacy classes of subgroups of index exactly d, sorted by canonical
/// form.
std::vector<SubgroupRecord> low_index_subgroups(const Presentation &pres,
                                                std::size_t d,
                                                const LowIndexOptions &opts = {});

/// Class counts for indices 1..d_max from a single search.
std::vector<std::size_t> eta_sequence(const Presentation &pres, std::size_t d_max,
                                      const LowIndexOptions &opts = {});

} // namespace cosetlab
