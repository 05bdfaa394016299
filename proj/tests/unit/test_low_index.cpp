#include <doctest.h>

#include "cosetlab/low_index.hpp"
#include "oracles.hpp"

using namespace cosetlab;

TEST_CASE("class counts match the transitive-action oracle") {
  for (const char *name : {"trefoil", "fig8", "trefoil-0surgery", "fig8-0surgery"}) {
    const auto &p = catalog_lookup(name).presentation;
    const auto eta = eta_sequence(p, 6);
    for (std::size_t d = 1; d <= 6; ++d) {
      CAPTURE(name);
      CAPTURE(d);
      CHECK(eta[d - 1] == oracle::transitive_action_classes(p, d));
    }
  }
}

TEST_CASE("low-index search is complete on finite groups") {
  // Every finite quotient here has order <= 48; the oracle builds the full
  // subgroup lattice.
  const char *groups[] = {
      "< a, b | a^2, b^3, (a*b)^4 >",             // S4
      "< a, b | a^2, b^3, (a*b)^3 >",             // A4
      "< a, b | a^4, b^2, (a*b)^2 >",             // D8
      "< a, b | a^4, a^2*b^-2, b^-1*a*b*a >",     // Q8
      "< a, b | a^6, b^2, (a*b)^2 >",             // D12
      "< a, b | a^3, b^3, (a*b)^3, (a*b^-1)^3 >", // 3^{1+2}, order 27
      "< a, b | a^2, b^4, (a*b)^4, (a*b^2)^2 >",  // order 32 quotient
      "< a, b | a^2, b^3, (a*b)^8, (a*b*a*b^-1)^2 >", // GL(2,3), order 48
      "< a, b | a^4, b^4, a*b*a^-1*b^-1 >",       // C4 x C4
      "< a, b | a^3, b^8, b^-1*a*b*a >",          // 3 : 8, order 24
  };
  for (const char *t : groups) {
    CAPTURE(t);
    const auto p = parse_presentation(t);
    const auto oracle_counts = oracle::subgroup_classes_by_index(p);
    const std::size_t order = todd_coxeter(p, {}).index();
    REQUIRE(order <= 48);
    for (std::size_t d = 1; d <= order; ++d) {
      CAPTURE(d);
      const auto it = oracle_counts.find(d);
      const std::size_t expected = it == oracle_counts.end() ? 0 : it->second;
      CHECK(low_index_subgroups(p, d).size() == expected);
    }
  }
}

TEST_CASE("records are canonical and self-consistent") {
  const auto &p = catalog_lookup("trefoil").presentation;
  for (std::size_t d = 1; d <= 7; ++d) {
    const auto classes = low_index_subgroups(p, d);
    for (std::size_t k = 0; k < classes.size(); ++k) {
      const auto &r = classes[k];
      CHECK(r.index == d);
      CHECK(r.class_ordinal == k + 1);
      CHECK(r.table.index() == d);
      CHECK(r.table.relators_close(p));
      CHECK(r.class_size >= 1);
      // Re-enumerating H from its generators gives back the same table.
      CHECK(todd_coxeter(p, r.generators) == r.table);
    }
    // Deterministic order.
    const auto again = low_index_subgroups(p, d);
    REQUIRE(again.size() == classes.size());
    for (std::size_t k = 0; k < classes.size(); ++k)
      CHECK(again[k].table == classes[k].table);
  }
}

TEST_CASE("node budget exhaustion reports partial progress") {
  const auto &p = catalog_lookup("fig8-0surgery").presentation;
  LowIndexOptions opts;
  opts.node_budget = 50;
  try {
    low_index_subgroups(p, 12, opts);
    FAIL("expected budget error");
  } catch (const LowIndexBudgetError &e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
    CHECK(e.partial());
    CHECK(e.nodes() >= 50);
  }
}
