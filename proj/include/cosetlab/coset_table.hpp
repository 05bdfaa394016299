#pragma once

#include <cstddef>
#include <vector>

#include "cosetlab/permutation.hpp"
#include "cosetlab/presentation.hpp"

namespace cosetlab {

/// Complete coset table for a finite-index subgroup H of a finitely presented
/// group. Cosets are numbered 0..d-1 with coset 0 = H; numbering is standard
/// (breadth-first from coset 0, scanning columns g0, g0^-1, g1, g1^-1, ...).
class CosetTable {
public:
  /// Builds a standardized table from forward generator actions on an
  /// arbitrary numbering, with `base` the coset of H. Throws
  /// Error(InvalidArgument) if an action is not a bijection or the action is
  /// not transitive.
  static CosetTable from_actions(std::vector<std::vector<Point>> forward,
                                 Point base = 0);

  std::size_t index() const noexcept { return index_; }
  std::size_t generator_count() const noexcept { return forward_.size(); }

  /// Image of a coset under one signed letter.
  Point act(Point coset, int letter) const {
    const auto g = Word::generator_of(letter);
    return letter > 0 ? forward_[g][coset] : backward_[g][coset];
  }
  const std::vector<Point> &forward(std::size_t g) const { return forward_[g]; }
  const std::vector<Point> &backward(std::size_t g) const { return backward_[g]; }

  /// Image of `start` under w, read left to right.
  Point coset_of(const Word &w, Point start = 0) const;

  /// One shortest word per coset with rep(0) = identity and coset_of(rep(i)) = i.
  const std::vector<Word> &schreier_reps() const noexcept { return reps_; }

  /// Schreier generators of H from the breadth-first spanning tree.
  SubgroupSpec schreier_generators() const;

  /// Every relator, traced from every coset, returns to that coset.
  bool relators_close(const Presentation &p) const;

  /// Row-major entries (coset, column) with columns g0, g0^-1, g1, ...
  std::vector<Point> row_major() const;

  friend bool operator==(const CosetTable &a, const CosetTable &b) {
    return a.forward_ == b.forward_;
  }

private:
  std::size_t index_ = 0;
  std::vector<std::vector<Point>> forward_;
  std::vector<std::vector<Point>> backward_;
  std::vector<Word> reps_;
};

inline constexpr std::size_t default_max_cosets = 2'000'000;

/// Todd-Coxeter (HLT with immediate coincidence processing) followed by
/// standardization. Throws Error(Overflow) when more than `max_cosets` cosets
/// are live at once.
CosetTable todd_coxeter(const Presentation &pres, const SubgroupSpec &sub,
                        std::size_t max_cosets = default_max_cosets);

/// One permutation of the cosets per generator.
std::vector<Permutation> permutation_rep(const CosetTable &table);

/// Image of a word under the permutation representation.
Permutation word_permutation(const Word &w, const std::vector<Permutation> &gens);

/// Image of coset 0 under w.
Point coset_of(const CosetTable &table, const Word &w);

} // namespace cosetlab
