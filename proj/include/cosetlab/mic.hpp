#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cosetlab/perm_group.hpp"

namespace cosetlab {

struct SubgroupRecord;

using Complex = std::complex<double>;

/// Unit vector with canonical global phase: the first amplitude whose modulus
/// exceeds 1e-12 is real and positive.
struct StateVector {
  std::vector<Complex> amplitudes;

  std::size_t dimension() const noexcept { return amplitudes.size(); }
  double norm() const;
  /// Normalizes and fixes the phase. Throws InvalidArgument on a zero vector.
  static StateVector canonical(std::vector<Complex> v);
};

/// |<a|b>|^2.
double overlap(const StateVector &a, const StateVector &b);

/// Weyl-Heisenberg group of dimension d as a tensor product over the prime
/// factorization of d, largest factor last. Basis index j is split by the
/// Chinese remainder theorem into j mod p^e for each prime-power part p^e of
/// d, and each part is written in base p, most significant digit first. For
/// square-free d this is the single d-dit group; for d = p^e it is e p-dits.
class PauliSystem {
public:
  explicit PauliSystem(std::size_t d);

  std::size_t dimension() const noexcept { return d_; }
  const std::vector<std::size_t> &factors() const noexcept { return factors_; }
  /// d^2 displacements, enumerated by (p, q) with flat p, q in 0..d-1.
  std::size_t displacement_count() const noexcept { return d_ * d_; }

  std::vector<std::size_t> digits(std::size_t j) const;
  std::size_t from_digits(const std::vector<std::size_t> &digits) const;
  /// Digit-wise (a + b) mod p_k.
  std::size_t add(std::size_t a, std::size_t b) const;
  /// Digit-wise (-a) mod p_k.
  std::size_t negate(std::size_t a) const;
  /// omega^(q . j) = exp(2 pi i sum_k q_k j_k / p_k).
  Complex phase(std::size_t q, std::size_t j) const;

  /// Short label such as "2QB", "2QT", "2x3" or "5-dit".
  std::string label() const;

private:
  std::size_t d_;
  std::vector<std::size_t> factors_;
  std::vector<std::vector<std::size_t>> digits_;
  std::vector<std::size_t> index_;
  Eigen::MatrixXcd phases_;
};

/// One eigenpair of a permutation matrix.
struct EigenPair {
  /// Eigenvalue exp(2 pi i * numerator / denominator), in lowest terms.
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;
  StateVector vector;

  Complex eigenvalue() const;
};

/// The permutation matrix sends basis vector e_x to e_{x^sigma}.
Eigen::MatrixXcd permutation_matrix(const Permutation &sigma);

/// Fourier vectors on each cycle: for a cycle (c_0 ... c_{L-1}) and k in
/// 0..L-1 the vector with entry exp(2 pi i k j / L)/sqrt(L) at c_j. Cycles
/// are taken in order of their smallest point, fixed points included.
std::vector<EigenPair> cycle_eigenvectors(const Permutation &sigma);

/// Simultaneous eigenbasis of pairwise commuting permutations. Throws
/// InvalidArgument when two of them do not commute.
std::vector<StateVector> joint_eigenvectors(const std::vector<Permutation> &family);

/// prod_k X^(p_k) Z^(q_k) applied to psi; throws InvalidArgument when p or q
/// is out of range.
StateVector displacement(const PauliSystem &sys, std::size_t p, std::size_t q,
                         const StateVector &psi);

/// The d^2 displaced states, index p * d + q.
std::vector<StateVector> pauli_orbit(const PauliSystem &sys, const StateVector &psi);

/// chi(p, q) = <psi| D(p,q) |psi>, index p * d + q.
std::vector<Complex> characteristic(const PauliSystem &sys, const StateVector &psi);

struct GramResult {
  std::size_t rank = 0;
  Eigen::MatrixXd gram;
  /// Descending.
  std::vector<double> singular_values;
};

inline constexpr double default_rank_tolerance = 1e-8;
inline constexpr double default_cluster_tolerance = 1e-8;

/// Rank of the matrix of |<psi_i|psi_j>|^2: singular values above
/// tol * (largest singular value).
GramResult gram_rank(const std::vector<StateVector> &states,
                     double tol = default_rank_tolerance);

struct PpResult {
  std::size_t pp = 0;
  /// Ascending cluster representatives (cluster means).
  std::vector<double> values;
};

/// Distinct off-diagonal values of a Gram matrix after single-linkage
/// clustering with absolute tolerance tol.
PpResult pp_value(const Eigen::MatrixXd &gram, double tol = default_cluster_tolerance);
PpResult pp_value(std::vector<double> offdiagonal, double tol = default_cluster_tolerance);

enum class StabilizerVerdict { Stabilizer, Magic, Unknown };
const char *to_string(StabilizerVerdict v);

/// A pure state is a stabilizer state iff exactly d displacements fix it up to
/// phase, i.e. |chi| = 1 on exactly d points.
StabilizerVerdict stabilizer_check(const PauliSystem &sys, const StateVector &psi);

/// How cosets are assigned to computational basis states.
enum class BasisLabeling {
  /// Coset numbers as in the standardized coset table.
  Coset,
  /// Breadth-first from coset 0 along forward generator images only.
  Forward,
};
const char *to_string(BasisLabeling b);

/// Renumbers points in breadth-first order from 0 along the forward images of
/// the generators, in generator order.
PermGroup forward_relabel(const PermGroup &p);

struct MicOptions {
  std::size_t element_cap = default_element_cap;
  bool exhaustive = false;
  std::uint64_t seed = 0;
  double rank_tolerance = default_rank_tolerance;
  double cluster_tolerance = default_cluster_tolerance;
  /// Random elements sampled when |P| exceeds the cap.
  std::size_t sample_size = 256;
  /// Commuting families seeded in non-exhaustive mode.
  std::size_t family_seeds = 64;
  BasisLabeling labeling = BasisLabeling::Forward;
};

struct MicReport {
  std::size_t dimension = 0;
  std::string pauli_label;
  std::size_t candidates_tested = 0;
  /// Candidates whose orbit has full Gram rank.
  std::size_t mic_candidates = 0;
  bool is_mic = false;
  /// Every element of P was used and every commuting family tried.
  bool exhaustive = false;
  /// True when |P| exceeded the element cap so only a sample was scanned.
  bool budget_limited = false;
  std::optional<StateVector> fiducial;
  /// Rank of the chosen fiducial's Gram matrix, or the best rank seen.
  std::size_t gram_rank = 0;
  std::optional<std::size_t> pp;
  std::vector<double> pp_values;
  /// Distinct pp values over all MIC candidates, ascending.
  std::vector<std::size_t> pp_spectrum;
  StabilizerVerdict stabilizer_verdict = StabilizerVerdict::Unknown;
};

/// Scans permutation eigenstates of P for MIC fiducials under the Pauli group
/// of dimension degree(P). The fiducial is a MIC candidate of least pp, ties
/// going to the earliest candidate.
MicReport mic_scan(const PermGroup &p, const MicOptions &opts = {});
MicReport mic_scan(const SubgroupRecord &record, const MicOptions &opts = {});

} // namespace cosetlab
