#include <doctest.h>

#include <cmath>
#include <random>

#include "cosetlab/error.hpp"
#include "cosetlab/low_index.hpp"
#include "cosetlab/mic.hpp"
#include "oracles.hpp"

using namespace cosetlab;

namespace {

StateVector random_state(std::size_t d, std::mt19937 &rng) {
  std::normal_distribution<double> n;
  std::vector<Complex> v(d);
  for (auto &x : v)
    x = Complex(n(rng), n(rng));
  return StateVector::canonical(v);
}

Complex inner(const StateVector &a, const StateVector &b) {
  Complex s = 0;
  for (std::size_t i = 0; i < a.dimension(); ++i)
    s += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  return s;
}

double residual(const Permutation &sigma, const EigenPair &e) {
  const auto m = permutation_matrix(sigma);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(e.vector.dimension()));
  for (std::size_t i = 0; i < e.vector.dimension(); ++i)
    v(static_cast<Eigen::Index>(i)) = e.vector.amplitudes[i];
  return (m * v - e.eigenvalue() * v).norm();
}

} // namespace

TEST_CASE("Pauli systems follow the prime factorization") {
  CHECK(PauliSystem(4).label() == "2QB");
  CHECK(PauliSystem(9).label() == "2QT");
  CHECK(PauliSystem(8).factors() == std::vector<std::size_t>{2, 2, 2});
  CHECK(PauliSystem(6).factors() == std::vector<std::size_t>{2, 3});
  CHECK(PauliSystem(4).displacement_count() == 16);
  const PauliSystem s(12);
  for (std::size_t j = 0; j < 12; ++j) {
    CHECK(s.from_digits(s.digits(j)) == j);
    CHECK(s.add(j, s.negate(j)) == 0);
  }
}

TEST_CASE("displacements are unitary") {
  std::mt19937 rng(1);
  for (std::size_t d : {2u, 3u, 4u, 6u, 8u, 9u}) {
    const PauliSystem sys(d);
    const auto a = random_state(d, rng), b = random_state(d, rng);
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q) {
        const auto da = displacement(sys, p, q, a), db = displacement(sys, p, q, b);
        CHECK(std::abs(da.norm() - 1.0) <= 1e-12);
        // States are stored up to a global phase.
        CHECK(std::abs(std::abs(inner(da, db)) - std::abs(inner(a, b))) <= 1e-12);
      }
    CHECK_THROWS_AS(displacement(sys, d, 0, a), Error);
  }
}

TEST_CASE("characteristic function matches explicit overlaps") {
  std::mt19937 rng(2);
  for (std::size_t d : {3u, 4u, 6u}) {
    const PauliSystem sys(d);
    const auto psi = random_state(d, rng);
    const auto chi = characteristic(sys, psi);
    const auto orbit = pauli_orbit(sys, psi);
    REQUIRE(orbit.size() == d * d);
    for (std::size_t k = 0; k < d * d; ++k)
      CHECK(std::abs(std::abs(chi[k]) * std::abs(chi[k]) - overlap(psi, orbit[k])) <= 1e-12);
  }
}

TEST_CASE("cycle eigenvectors satisfy the eigen equation") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    std::vector<Point> img(n);
    for (Point i = 0; i < n; ++i)
      img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    const Permutation sigma(img);
    const auto pairs = cycle_eigenvectors(sigma);
    CHECK(pairs.size() == n);
    for (const auto &e : pairs) {
      CHECK(std::abs(e.vector.norm() - 1.0) <= 1e-12);
      CHECK(residual(sigma, e) <= 1e-10);
    }
  }
}

TEST_CASE("joint eigenvectors of commuting permutations") {
  const auto a = Permutation::from_cycles(4, {{0, 1}, {2, 3}});
  const auto b = Permutation::from_cycles(4, {{0, 2}, {1, 3}});
  const auto vs = joint_eigenvectors({a, b});
  CHECK(vs.size() == 4);
  for (const auto &v : vs)
    for (const auto &g : {a, b}) {
      const auto m = permutation_matrix(g);
      Eigen::VectorXcd x(4);
      for (int i = 0; i < 4; ++i)
        x(i) = v.amplitudes[static_cast<std::size_t>(i)];
      const Eigen::VectorXcd y = m * x;
      const Complex lambda = x.dot(y); // x^H y
      CHECK((y - lambda * x).norm() <= 1e-10);
    }
  const auto c = Permutation::from_cycles(4, {{0, 1, 2}});
  CHECK_THROWS_AS(joint_eigenvectors({a, c}), Error);
}

TEST_CASE("Hesse SIC: pp = 1 with overlap 1/4") {
  const PauliSystem sys(3);
  const auto psi = StateVector::canonical({0.0, 1.0, -1.0});
  const auto g = gram_rank(pauli_orbit(sys, psi));
  CHECK(g.rank == 9);
  const auto pp = pp_value(g.gram);
  CHECK(pp.pp == 1);
  REQUIRE(pp.values.size() == 1);
  CHECK(std::abs(pp.values[0] - 0.25) <= 1e-9);
  CHECK(stabilizer_check(sys, psi) == StabilizerVerdict::Magic);
}

TEST_CASE("stabilizer states of prime dimension are recognized") {
  std::mt19937 rng(4);
  for (std::size_t d : {2u, 3u, 5u, 7u}) {
    const PauliSystem sys(d);
    const auto states = oracle::prime_stabilizer_states(d);
    CHECK(states.size() == d * (d + 1));
    for (const auto &s : states) {
      CHECK(stabilizer_check(sys, s) == StabilizerVerdict::Stabilizer);
      CHECK(gram_rank(pauli_orbit(sys, s)).rank == d);
    }
    for (int i = 0; i < 5; ++i)
      CHECK(stabilizer_check(sys, random_state(d, rng)) == StabilizerVerdict::Magic);
  }
}

TEST_CASE("Gram rank: SVD agrees with exact rational elimination") {
  // Cycle eigenvectors of coset permutations for d <= 6 have Gram entries in
  // a small rational set, so exact elimination applies.
  std::size_t compared = 0;
  for (const char *name : {"trefoil", "fig8-0surgery", "fig8"}) {
    const auto &pres = catalog_lookup(name).presentation;
    for (std::size_t d = 2; d <= 6; ++d) {
      const PauliSystem sys(d);
      for (const auto &rec : low_index_subgroups(pres, d))
        for (const auto &g : permutation_rep(rec.table))
          for (const auto &e : cycle_eigenvectors(g)) {
            const auto res = gram_rank(pauli_orbit(sys, e.vector));
            const int exact = oracle::exact_rank(res.gram);
            if (exact < 0)
              continue;
            CAPTURE(name);
            CAPTURE(d);
            CHECK(static_cast<int>(res.rank) == exact);
            ++compared;
          }
    }
  }
  CHECK(compared >= 100);
}

TEST_CASE("pp clustering") {
  CHECK(pp_value(std::vector<double>{0.25, 0.25 + 1e-12, 0.5}).pp == 2);
  CHECK(pp_value(std::vector<double>{}).pp == 0);
  CHECK(pp_value(std::vector<double>{0.1, 0.1 + 5e-9, 0.1 + 1e-8}).pp == 1);
}

TEST_CASE("MIC scans on small classes") {
  const auto &trefoil = catalog_lookup("trefoil").presentation;
  MicOptions opts;
  opts.exhaustive = true;
  const auto d3 = low_index_subgroups(trefoil, 3);
  bool sic = false;
  for (const auto &rec : d3) {
    const auto m = mic_scan(rec, opts);
    if (coset_group(rec).order() == 6) {
      CHECK(m.is_mic);
      REQUIRE(m.pp);
      CHECK(*m.pp == 1);
      REQUIRE(m.pp_values.size() == 1);
      sic = std::abs(m.pp_values[0] - 0.25) <= 1e-9;
      REQUIRE(m.fiducial);
      CHECK(m.stabilizer_verdict == StabilizerVerdict::Magic);
      CHECK(gram_rank(pauli_orbit(PauliSystem(3), *m.fiducial)).rank == 9);
    } else {
      // Cyclic group: Fourier vectors only, which are stabilizer states.
      CHECK_FALSE(m.is_mic);
    }
  }
  CHECK(sic);
}

TEST_CASE("MIC scans are deterministic") {
  const auto &p = catalog_lookup("trefoil").presentation;
  MicOptions opts;
  opts.element_cap = 50; // forces sampling for the larger groups
  opts.seed = 17;
  for (const auto &rec : low_index_subgroups(p, 7)) {
    const auto a = mic_scan(rec, opts), b = mic_scan(rec, opts);
    CHECK(a.is_mic == b.is_mic);
    CHECK(a.pp == b.pp);
    CHECK(a.candidates_tested == b.candidates_tested);
    CHECK(a.budget_limited == (coset_group(rec).order() > 50));
  }
}
