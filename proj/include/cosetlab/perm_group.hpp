#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cosetlab/permutation.hpp"

namespace cosetlab {

struct SubgroupRecord;

/// Group orders up to 24! fit comfortably.
using GroupOrder = unsigned __int128;

std::string to_string(GroupOrder n);

/// A permutation group with a base and strong generating set built by the
/// deterministic Schreier-Sims algorithm. Base points are taken from an
/// optional prefix, then the smallest point moved by a new strong generator.
class PermGroup {
public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::vector<Point> base_prefix = {});

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation> &generators() const noexcept { return gens_; }
  const std::vector<Point> &base() const noexcept { return base_; }
  std::vector<std::size_t> transversal_sizes() const;

  GroupOrder order() const;
  bool contains(const Permutation &p) const;
  bool is_trivial() const { return base_.empty(); }
  bool is_subgroup_of(const PermGroup &other) const;

  /// Pointwise stabilizer of the given points, in order.
  PermGroup stabilizer(const std::vector<Point> &points) const;
  PermGroup point_stabilizer(Point a) const { return stabilizer({a}); }

  /// All elements in a deterministic (sorted) order. Throws
  /// Error(InvalidArgument) when the order exceeds `limit`.
  std::vector<Permutation> elements(std::size_t limit) const;

  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;
  bool is_abelian() const;

  /// Equal as element sets: same order and mutual generator membership.
  friend bool operator==(const PermGroup &a, const PermGroup &b);

private:
  struct Level {
    Point base = 0;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    std::vector<int> rep_index; // per point: index into reps or -1
    std::vector<Permutation> reps;
  };

  void schreier_sims(std::vector<Point> prefix);
  void rebuild_orbit(Level &level) const;
  // Sifts g through levels [from, end); returns the residue and the level at
  // which sifting stopped (levels_.size() when it passed all of them).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Point> base_;
  std::vector<Level> levels_;
};

/// Orbits of P on ordered pairs (diagonal included); requires transitivity.
std::size_t rank(const PermGroup &p);

/// Number of orbits of the stabilizer of point 0 on all points.
std::size_t suborbit_count(const PermGroup &p);

/// P_(a,b): elements fixing a and b. Throws InvalidArgument when a == b.
PermGroup two_point_stabilizer(const PermGroup &p, Point a, Point b);

/// Smallest normal subgroup of P containing S. Throws InvalidArgument when S
/// is not contained in P.
PermGroup normal_closure(const PermGroup &p, const PermGroup &s);

/// Commutator subgroup P'.
PermGroup derived_subgroup(const PermGroup &p);

/// The permutation group generated by the coset action of a subgroup record.
PermGroup coset_group(const SubgroupRecord &record);

/// N = G, evaluated in P: the normal closure of the image of H (the stabilizer
/// of coset 0) is all of P.
bool axiom_i(const SubgroupRecord &record);
bool axiom_i(const PermGroup &p);

enum class CoveringType { Cyclic, Regular, Irregular };
const char *to_string(CoveringType t);

/// "cyc" when P is cyclic, "reg" when regular but not cyclic, else "irr".
CoveringType covering_type(const SubgroupRecord &record);
CoveringType covering_type(const PermGroup &p);

struct StructureNote {
  GroupOrder order = 1;
  std::size_t degree = 0;
  bool abelian = true;
  /// Prime-power invariants of P/P'; absent above the element cap.
  std::optional<std::vector<std::uint64_t>> abelian_invariants;
  std::optional<bool> simple;
  /// "C5", "D10", "A5", "S4", "PSL(2,7)", ... or "unrecognized".
  std::string name;
};

inline constexpr std::size_t default_element_cap = 20000;

StructureNote structure_describe(const PermGroup &p,
                                 std::size_t element_cap = default_element_cap);

} // namespace cosetlab
