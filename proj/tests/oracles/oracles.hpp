#pragma once

// Brute-force reference computations. None of these call the stabilizer
// chain, the low-index search or the SVD path they are used to check.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "cosetlab/coset_table.hpp"
#include "cosetlab/mic.hpp"
#include "cosetlab/permutation.hpp"
#include "cosetlab/presentation.hpp"

namespace oracle {

using cosetlab::Permutation;
using cosetlab::Point;

/// Every element of <gens>, by breadth-first multiplication.
std::vector<Permutation> closure(const std::vector<Permutation> &gens, std::size_t degree);

/// Conjugacy classes of transitive actions on d points, counted by
/// enumerating all generator images in S_d (2-generator presentations,
/// d <= 6). Equals the number of index-d subgroup classes.
std::size_t transitive_action_classes(const cosetlab::Presentation &pres, std::size_t d);

/// For a finite group given by a presentation: number of subgroup conjugacy
/// classes per index, from the full subgroup lattice of the regular
/// representation (order <= 64).
std::map<std::size_t, std::size_t> subgroup_classes_by_index(const cosetlab::Presentation &pres);

/// The normal closure of H in G is G, decided by coset enumeration of the
/// subgroup generated by the conjugates of H's generators by coset
/// representatives.
bool normal_closure_is_whole(const cosetlab::Presentation &pres, const cosetlab::CosetTable &table,
                             const cosetlab::SubgroupSpec &h);

/// Some triple of points has pairwise equal two-point stabilizers, as element
/// sets of the brute-force closure.
bool has_equal_stabilizer_triple(const std::vector<Permutation> &elements, std::size_t degree,
                                 bool include_trivial);

/// Rank of a real matrix after snapping each entry to the nearest rational with
/// denominator <= max_den (continued fractions). Returns -1 when some entry is
/// further than `snap` from every such rational.
int exact_rank(const Eigen::MatrixXd &m, long max_den = 4096, double snap = 1e-10);

/// The d(d+1) stabilizer states of prime dimension d: the computational basis
/// and the eigenbases of X Z^k, k = 0..d-1.
std::vector<cosetlab::StateVector> prime_stabilizer_states(std::size_t d);

} // namespace oracle
