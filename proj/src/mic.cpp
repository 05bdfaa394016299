#include "cosetlab/mic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

#include "cosetlab/error.hpp"
#include "cosetlab/low_index.hpp"

namespace cosetlab {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double zero_amplitude = 1e-12;

Complex root_of_unity(std::uint64_t num, std::uint64_t den) {
  const double t = two_pi * static_cast<double>(num) / static_cast<double>(den);
  return {std::cos(t), std::sin(t)};
}

} // namespace

double StateVector::norm() const {
  double s = 0;
  for (const auto &a : amplitudes)
    s += std::norm(a);
  return std::sqrt(s);
}

StateVector StateVector::canonical(std::vector<Complex> v) {
  double s = 0;
  for (const auto &a : v)
    s += std::norm(a);
  if (s <= zero_amplitude * zero_amplitude)
    throw Error(ErrorCode::InvalidArgument, "zero vector has no state");
  const double inv = 1.0 / std::sqrt(s);
  Complex phase = 1.0;
  for (const auto &a : v)
    if (std::abs(a) * inv > zero_amplitude) {
      phase = std::conj(a) / std::abs(a);
      break;
    }
  for (auto &a : v) {
    a *= phase * inv;
    if (std::abs(a) <= zero_amplitude)
      a = 0.0;
  }
  return StateVector{std::move(v)};
}

double overlap(const StateVector &a, const StateVector &b) {
  Complex s = 0;
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i)
    s += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  return std::norm(s);
}

PauliSystem::PauliSystem(std::size_t d) : d_(d) {
  if (d < 1)
    throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  std::size_t n = d;
  std::vector<std::size_t> block_of; // per factor, its prime-power block
  std::vector<std::size_t> blocks;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p)
      continue;
    blocks.push_back(1);
    while (n % p == 0) {
      factors_.push_back(p);
      block_of.push_back(blocks.size() - 1);
      blocks.back() *= p;
      n /= p;
    }
  }
  if (n > 1) {
    factors_.push_back(n);
    blocks.push_back(n);
    block_of.push_back(blocks.size() - 1);
  }

  // j -> (j mod q_1, j mod q_2, ...) over the prime-power blocks q_i, each
  // block value written in base p, most significant digit first.
  digits_.resize(d);
  index_.assign(d, 0);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<std::size_t> dig(factors_.size());
    std::vector<std::size_t> rem(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b)
      rem[b] = j % blocks[b];
    for (std::size_t k = factors_.size(); k-- > 0;) {
      dig[k] = rem[block_of[k]] % factors_[k];
      rem[block_of[k]] /= factors_[k];
    }
    std::size_t key = 0;
    for (std::size_t k = 0; k < factors_.size(); ++k)
      key = key * factors_[k] + dig[k];
    index_[key] = j;
    digits_[j] = std::move(dig);
  }

  phases_.resize(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t q = 0; q < d; ++q) {
    const auto &qd = digits_[q];
    for (std::size_t j = 0; j < d; ++j) {
      const auto &jd = digits_[j];
      double t = 0;
      for (std::size_t k = 0; k < factors_.size(); ++k)
        t += static_cast<double>((qd[k] * jd[k]) % factors_[k]) /
             static_cast<double>(factors_[k]);
      t -= std::floor(t);
      phases_(static_cast<Eigen::Index>(q), static_cast<Eigen::Index>(j)) =
          Complex(std::cos(two_pi * t), std::sin(two_pi * t));
    }
  }
}

std::vector<std::size_t> PauliSystem::digits(std::size_t j) const { return digits_.at(j); }

std::size_t PauliSystem::from_digits(const std::vector<std::size_t> &digits) const {
  std::size_t key = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k)
    key = key * factors_[k] + digits[k];
  return index_.at(key);
}

std::size_t PauliSystem::add(std::size_t a, std::size_t b) const {
  auto da = digits(a);
  const auto db = digits(b);
  for (std::size_t k = 0; k < da.size(); ++k)
    da[k] = (da[k] + db[k]) % factors_[k];
  return from_digits(da);
}

std::size_t PauliSystem::negate(std::size_t a) const {
  auto da = digits(a);
  for (std::size_t k = 0; k < da.size(); ++k)
    da[k] = (factors_[k] - da[k]) % factors_[k];
  return from_digits(da);
}

Complex PauliSystem::phase(std::size_t q, std::size_t j) const {
  return phases_(static_cast<Eigen::Index>(q), static_cast<Eigen::Index>(j));
}

std::string PauliSystem::label() const {
  if (factors_.size() <= 1)
    return std::to_string(d_) + "-dit";
  if (std::all_of(factors_.begin(), factors_.end(),
                  [&](std::size_t f) { return f == factors_[0]; })) {
    if (factors_[0] == 2)
      return std::to_string(factors_.size()) + "QB";
    if (factors_[0] == 3)
      return std::to_string(factors_.size()) + "QT";
  }
  std::string s;
  for (std::size_t f : factors_)
    s += (s.empty() ? "" : "x") + std::to_string(f);
  return s;
}

Complex EigenPair::eigenvalue() const { return root_of_unity(numerator, denominator); }

Eigen::MatrixXcd permutation_matrix(const Permutation &sigma) {
  const auto n = static_cast<Eigen::Index>(sigma.degree());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (Point x = 0; x < sigma.degree(); ++x)
    m(static_cast<Eigen::Index>(sigma(x)), static_cast<Eigen::Index>(x)) = 1.0;
  return m;
}

std::vector<EigenPair> cycle_eigenvectors(const Permutation &sigma) {
  const std::size_t d = sigma.degree();
  std::vector<EigenPair> out;
  for (const auto &c : sigma.cycles(true)) {
    const std::size_t len = c.size();
    const double scale = 1.0 / std::sqrt(static_cast<double>(len));
    for (std::size_t k = 0; k < len; ++k) {
      std::vector<Complex> v(d, 0.0);
      for (std::size_t j = 0; j < len; ++j)
        v[c[j]] = root_of_unity((k * j) % len, len) * scale;
      // M v = exp(-2 pi i k / L) v.
      std::uint64_t num = (len - k) % len, den = len;
      const auto g = std::gcd(num, den);
      EigenPair ep;
      ep.numerator = num / g;
      ep.denominator = den / g;
      ep.vector = StateVector::canonical(std::move(v));
      out.push_back(std::move(ep));
    }
  }
  return out;
}

namespace {

using Basis = Eigen::MatrixXcd; // orthonormal columns

// Gram-Schmidt over the columns in order, dropping dependent ones.
Basis orthonormal_columns(const Eigen::MatrixXcd &c) {
  std::vector<Eigen::VectorXcd> kept;
  for (Eigen::Index j = 0; j < c.cols(); ++j) {
    Eigen::VectorXcd v = c.col(j);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto &u : kept)
        v -= u * u.dot(v);
    const double n = v.norm();
    if (n > 1e-8)
      kept.push_back(v / n);
  }
  Basis b(c.rows(), static_cast<Eigen::Index>(kept.size()));
  for (std::size_t j = 0; j < kept.size(); ++j)
    b.col(static_cast<Eigen::Index>(j)) = kept[j];
  return b;
}

// Eigenspaces of a permutation, keyed by eigenvalue, from its cycle vectors.
std::map<std::pair<std::uint64_t, std::uint64_t>, Basis>
eigenspaces(const Permutation &sigma) {
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<Eigen::VectorXcd>> cols;
  for (const auto &ep : cycle_eigenvectors(sigma)) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(sigma.degree()));
    for (std::size_t i = 0; i < sigma.degree(); ++i)
      v(static_cast<Eigen::Index>(i)) = ep.vector.amplitudes[i];
    cols[{ep.numerator, ep.denominator}].push_back(std::move(v));
  }
  std::map<std::pair<std::uint64_t, std::uint64_t>, Basis> out;
  for (auto &[key, vs] : cols) {
    Basis b(static_cast<Eigen::Index>(sigma.degree()), static_cast<Eigen::Index>(vs.size()));
    for (std::size_t j = 0; j < vs.size(); ++j)
      b.col(static_cast<Eigen::Index>(j)) = vs[j];
    out.emplace(key, std::move(b));
  }
  return out;
}

StateVector to_state(const Eigen::VectorXcd &v) {
  return StateVector::canonical(std::vector<Complex>(v.data(), v.data() + v.size()));
}

} // namespace

std::vector<StateVector> joint_eigenvectors(const std::vector<Permutation> &family) {
  if (family.empty())
    throw Error(ErrorCode::InvalidArgument, "empty family");
  const std::size_t d = family[0].degree();
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!commutes(family[i], family[j]))
        throw Error(ErrorCode::InvalidArgument, "family members do not commute");

  const auto n = static_cast<Eigen::Index>(d);
  std::vector<Basis> spaces{Basis::Identity(n, n)};
  bool first = true;
  for (const auto &sigma : family) {
    if (std::all_of(spaces.begin(), spaces.end(),
                    [](const Basis &b) { return b.cols() == 1; }))
      break;
    const auto eig = eigenspaces(sigma);
    std::vector<Basis> next;
    for (const auto &v : spaces) {
      if (v.cols() == 1) {
        next.push_back(v);
        continue;
      }
      for (const auto &[key, q] : eig) {
        if (first) {
          next.push_back(q);
          continue;
        }
        // V is sigma-invariant, so projecting V onto an eigenspace gives
        // exactly their intersection.
        const Eigen::MatrixXcd c = q * (q.adjoint() * v);
        Basis w = orthonormal_columns(c);
        if (w.cols() == 0)
          continue;
        next.push_back(w.cols() == q.cols() ? q : w);
      }
    }
    spaces = std::move(next);
    first = false;
  }
  std::vector<StateVector> out;
  for (const auto &b : spaces)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      out.push_back(to_state(b.col(j)));
  return out;
}

StateVector displacement(const PauliSystem &sys, std::size_t p, std::size_t q,
                         const StateVector &psi) {
  const std::size_t d = sys.dimension();
  if (p >= d || q >= d)
    throw Error(ErrorCode::InvalidArgument, "displacement index out of range");
  if (psi.dimension() != d)
    throw Error(ErrorCode::InvalidArgument, "state dimension mismatch");
  std::vector<Complex> out(d);
  for (std::size_t j = 0; j < d; ++j)
    out[sys.add(j, p)] = sys.phase(q, j) * psi.amplitudes[j];
  return StateVector::canonical(std::move(out));
}

std::vector<StateVector> pauli_orbit(const PauliSystem &sys, const StateVector &psi) {
  std::vector<StateVector> out;
  out.reserve(sys.displacement_count());
  for (std::size_t p = 0; p < sys.dimension(); ++p)
    for (std::size_t q = 0; q < sys.dimension(); ++q)
      out.push_back(displacement(sys, p, q, psi));
  return out;
}

std::vector<Complex> characteristic(const PauliSystem &sys, const StateVector &psi) {
  const std::size_t d = sys.dimension();
  const auto n = static_cast<Eigen::Index>(d);
  // chi(p, q) = sum_j conj(psi[j + p]) omega^(q.j) psi[j].
  Eigen::MatrixXcd a(n, n), ph(n, n);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t j = 0; j < d; ++j)
      a(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(j)) =
          std::conj(psi.amplitudes[sys.add(j, p)]) * psi.amplitudes[j];
  for (std::size_t q = 0; q < d; ++q)
    for (std::size_t j = 0; j < d; ++j)
      ph(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(q)) = sys.phase(q, j);
  const Eigen::MatrixXcd chi = a * ph;
  std::vector<Complex> out(d * d);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q)
      out[p * d + q] = chi(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q));
  return out;
}

GramResult gram_rank(const std::vector<StateVector> &states, double tol) {
  GramResult r;
  const auto n = static_cast<Eigen::Index>(states.size());
  r.gram.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    r.gram(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < n; ++j)
      r.gram(i, j) = r.gram(j, i) = overlap(states[static_cast<std::size_t>(i)],
                                            states[static_cast<std::size_t>(j)]);
  }
  if (n == 0)
    return r;
  // The Gram matrix is symmetric, so its singular values are the absolute
  // eigenvalues. BDCSVD returned NaN on some exactly rank-deficient inputs.
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(r.gram, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success)
    throw std::runtime_error("Gram eigensolver did not converge");
  for (Eigen::Index i = 0; i < n; ++i)
    r.singular_values.push_back(std::abs(eig.eigenvalues()(i)));
  std::sort(r.singular_values.begin(), r.singular_values.end(), std::greater<>());
  const double cutoff = tol * r.singular_values.front();
  r.rank = static_cast<std::size_t>(std::count_if(
      r.singular_values.begin(), r.singular_values.end(),
      [cutoff](double s) { return s > cutoff; }));
  return r;
}

PpResult pp_value(std::vector<double> values, double tol) {
  PpResult r;
  std::sort(values.begin(), values.end());
  std::size_t start = 0;
  for (std::size_t i = 1; i <= values.size(); ++i) {
    if (i == values.size() || values[i] - values[i - 1] > tol) {
      if (i > start) {
        const double sum = std::accumulate(values.begin() + static_cast<std::ptrdiff_t>(start),
                                           values.begin() + static_cast<std::ptrdiff_t>(i), 0.0);
        r.values.push_back(sum / static_cast<double>(i - start));
      }
      start = i;
    }
  }
  r.pp = r.values.size();
  return r;
}

PpResult pp_value(const Eigen::MatrixXd &gram, double tol) {
  std::vector<double> off;
  for (Eigen::Index i = 0; i < gram.rows(); ++i)
    for (Eigen::Index j = i + 1; j < gram.cols(); ++j)
      off.push_back(gram(i, j));
  return pp_value(std::move(off), tol);
}

const char *to_string(StabilizerVerdict v) {
  switch (v) {
  case StabilizerVerdict::Stabilizer:
    return "stabilizer";
  case StabilizerVerdict::Magic:
    return "magic";
  case StabilizerVerdict::Unknown:
    return "unknown";
  }
  return "unknown";
}

StabilizerVerdict stabilizer_check(const PauliSystem &sys, const StateVector &psi) {
  if (psi.dimension() != sys.dimension())
    throw Error(ErrorCode::InvalidArgument, "state dimension mismatch");
  const auto chi = characteristic(sys, psi);
  const auto fixed = std::count_if(chi.begin(), chi.end(), [](const Complex &c) {
    return std::abs(std::abs(c) - 1.0) < 1e-9;
  });
  return static_cast<std::size_t>(fixed) == sys.dimension() ? StabilizerVerdict::Stabilizer
                                                            : StabilizerVerdict::Magic;
}

namespace {

struct Candidate {
  StateVector state;
  std::size_t order = 0;
  PpResult pp;
};

// Rounded amplitudes identify a ray once the phase is canonical.
std::vector<std::int64_t> dedupe_key(const StateVector &s) {
  std::vector<std::int64_t> key;
  key.reserve(2 * s.dimension());
  for (const auto &a : s.amplitudes) {
    key.push_back(std::llround(a.real() * 1e9));
    key.push_back(std::llround(a.imag() * 1e9));
  }
  return key;
}

std::vector<Permutation> scan_elements(const PermGroup &p, const MicOptions &opts,
                                       bool &limited) {
  limited = p.order() > opts.element_cap;
  if (!limited)
    return p.elements(opts.element_cap);

  std::vector<Permutation> letters;
  for (const auto &g : p.generators()) {
    letters.push_back(g);
    letters.push_back(g.inverse());
  }
  std::vector<Permutation> out;
  std::set<Permutation> seen;
  auto push = [&](Permutation x) {
    if (seen.insert(x).second)
      out.push_back(std::move(x));
  };
  push(Permutation::identity(p.degree()));
  std::vector<Permutation> layer{Permutation::identity(p.degree())};
  for (int len = 1; len <= 4; ++len) {
    std::vector<Permutation> next;
    for (const auto &w : layer)
      for (const auto &l : letters)
        next.push_back(w * l);
    for (const auto &x : next)
      push(x);
    layer = std::move(next);
  }
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  for (std::size_t s = 0; s < opts.sample_size; ++s) {
    Permutation x = Permutation::identity(p.degree());
    for (int step = 0; step < 32; ++step)
      x = x * letters[pick(rng)];
    push(std::move(x));
  }
  return out;
}

} // namespace

const char *to_string(BasisLabeling b) {
  return b == BasisLabeling::Coset ? "coset" : "forward";
}

PermGroup forward_relabel(const PermGroup &p) {
  const std::size_t d = p.degree();
  constexpr Point unset = ~Point{0};
  std::vector<Point> label(d, unset), order;
  if (d > 0) {
    label[0] = 0;
    order.push_back(0);
  }
  for (std::size_t head = 0; head < order.size(); ++head)
    for (const auto &g : p.generators()) {
      const Point y = g(order[head]);
      if (label[y] == unset) {
        label[y] = static_cast<Point>(order.size());
        order.push_back(y);
      }
    }
  if (order.size() != d)
    throw Error(ErrorCode::NotTransitive, "relabeling needs a transitive group");
  std::vector<Permutation> gens;
  for (const auto &g : p.generators()) {
    std::vector<Point> img(d);
    for (std::size_t x = 0; x < d; ++x)
      img[label[x]] = label[g(static_cast<Point>(x))];
    gens.emplace_back(std::move(img));
  }
  return PermGroup(d, std::move(gens));
}

MicReport mic_scan(const PermGroup &input, const MicOptions &opts) {
  const PermGroup p =
      opts.labeling == BasisLabeling::Forward && input.degree() > 1 ? forward_relabel(input)
                                                                    : input;
  MicReport rep;
  const std::size_t d = p.degree();
  const PauliSystem sys(d);
  rep.dimension = d;
  rep.pauli_label = sys.label();
  if (d <= 1) {
    rep.is_mic = true;
    rep.fiducial = StateVector::canonical({1.0});
    rep.gram_rank = 1;
    rep.pp = 0;
    rep.pp_spectrum = {0};
    rep.candidates_tested = 1;
    rep.mic_candidates = 1;
    rep.exhaustive = true;
    rep.stabilizer_verdict = StabilizerVerdict::Stabilizer;
    return rep;
  }

  bool limited = false;
  const auto elements = scan_elements(p, opts, limited);
  rep.budget_limited = limited;
  rep.exhaustive = opts.exhaustive && !limited;

  std::set<std::vector<std::int64_t>> seen;
  std::vector<Candidate> mics;
  const std::size_t full = d * d;
  auto consider = [&](const StateVector &s) {
    if (!seen.insert(dedupe_key(s)).second)
      return;
    const std::size_t order = rep.candidates_tested++;
    const auto chi = characteristic(sys, s);
    // Gram eigenvalues are d |chi|^2, the largest being d at the identity.
    std::vector<double> off;
    std::size_t rank = 0;
    for (std::size_t b = 0; b < chi.size(); ++b) {
      const double v = std::norm(chi[b]);
      if (v > opts.rank_tolerance)
        ++rank;
      if (b != 0)
        off.push_back(v);
    }
    rep.gram_rank = std::max(rep.gram_rank, rank);
    if (rank == full)
      mics.push_back({s, order, pp_value(std::move(off), opts.cluster_tolerance)});
  };

  for (const auto &g : elements)
    for (const auto &ep : cycle_eigenvectors(g))
      consider(ep.vector);

  // Greedy maximal commuting families.
  const std::size_t seeds =
      rep.exhaustive ? elements.size() : std::min(elements.size(), opts.family_seeds);
  std::set<std::vector<std::size_t>> families;
  for (std::size_t s = 0; s < seeds; ++s) {
    if (elements[s].is_identity())
      continue;
    std::vector<std::size_t> members{s};
    for (std::size_t h = 0; h < elements.size(); ++h) {
      if (h == s || elements[h].is_identity())
        continue;
      if (std::all_of(members.begin(), members.end(), [&](std::size_t m) {
            return commutes(elements[m], elements[h]);
          }))
        members.push_back(h);
    }
    std::sort(members.begin(), members.end());
    if (!families.insert(members).second)
      continue;
    std::vector<Permutation> family;
    for (std::size_t m : members)
      family.push_back(elements[m]);
    for (const auto &v : joint_eigenvectors(family))
      consider(v);
  }

  rep.mic_candidates = mics.size();
  std::set<std::size_t> spectrum;
  for (const auto &c : mics)
    spectrum.insert(c.pp.pp);
  rep.pp_spectrum.assign(spectrum.begin(), spectrum.end());

  std::stable_sort(mics.begin(), mics.end(), [](const Candidate &a, const Candidate &b) {
    return a.pp.pp != b.pp.pp ? a.pp.pp < b.pp.pp : a.order < b.order;
  });
  // Confirm with the explicit Gram matrix of the displaced orbit.
  for (const auto &c : mics) {
    const auto g = gram_rank(pauli_orbit(sys, c.state), opts.rank_tolerance);
    if (g.rank != full)
      continue;
    rep.is_mic = true;
    rep.fiducial = c.state;
    rep.gram_rank = g.rank;
    const auto pp = pp_value(g.gram, opts.cluster_tolerance);
    rep.pp = pp.pp;
    rep.pp_values = pp.values;
    rep.stabilizer_verdict = stabilizer_check(sys, c.state);
    break;
  }
  return rep;
}

MicReport mic_scan(const SubgroupRecord &record, const MicOptions &opts) {
  return mic_scan(coset_group(record), opts);
}

} // namespace cosetlab
