#include <set>
#include <vector>

#include "alphacrit/factory.hpp"
#include "alphacrit/generators.hpp"
#include "alphacrit/graph.hpp"
#include "alphacrit/oracle.hpp"
#include "alphacrit/solver.hpp"
#include "doctest.h"
#include "support/test_util.hpp"

using namespace alphacrit;
using testsupport::error_code_of;
using testsupport::petersen;
using testsupport::vs;

TEST_CASE("stability numbers of reference graphs") {
  CHECK(stability_number(cycle_graph(5)) == 2);
  CHECK(stability_number(cycle_graph(7)) == 3);
  for (int n = 1; n <= 8; ++n) CHECK(stability_number(complete_graph(n)) == 1);
  CHECK(stability_number(petersen()) == 4);
  CHECK(stability_number(empty_graph(0)) == 0);
  CHECK(stability_number(empty_graph(4)) == 4);
  CHECK(vertex_cover_number(cycle_graph(5)) == 3);
}

TEST_CASE("witness is the least maximum stable set") {
  const Graph c5 = cycle_graph(5);
  CHECK(lex_least_maximum_stable_set(c5).members() == std::vector<int>{0, 2});
  const StabilityReport rep = alpha(c5, true);
  CHECK(rep.alpha == 2);
  CHECK(rep.witness.members() == std::vector<int>{0, 2});
  CHECK(rep.num_maximum == 5);

  Rng rng(421);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(rng, uniform_int(rng, 1, 12), 0.4);
    const StabilityReport r = alpha(g);
    CHECK(r.alpha == oracle_stability_number(g));
    CHECK(is_stable_set(g, r.witness));
    CHECK(r.witness.size() == r.alpha);
  }
}

TEST_CASE("maximum stable set enumeration is exact and ordered") {
  const auto c5_sets = all_maximum_stable_sets(cycle_graph(5));
  REQUIRE(c5_sets.size() == 5);
  const std::vector<std::vector<int>> expect = {{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}};
  for (std::size_t i = 0; i < 5; ++i) CHECK(c5_sets[i].members() == expect[i]);

  const auto k3_sets = all_maximum_stable_sets(complete_graph(3));
  REQUIRE(k3_sets.size() == 3);
  for (int v = 0; v < 3; ++v) CHECK(k3_sets[static_cast<std::size_t>(v)].members() == std::vector<int>{v});
  CHECK(all_maximum_stable_sets(complete_graph(1)).size() == 1);

  // The solver orders by lowest differing vertex, the oracle by bit mask, so
  // the collections are compared as sets and the solver order on its own.
  Rng rng(422);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(rng, uniform_int(rng, 1, 10), 0.4);
    const auto mine = all_maximum_stable_sets(g);
    const auto ref = oracle_all_maximum_stable_sets(g);
    REQUIRE(mine.size() == ref.size());
    std::set<std::vector<int>> mine_sets, ref_sets(ref.begin(), ref.end());
    for (std::size_t i = 0; i < mine.size(); ++i) {
      mine_sets.insert(mine[i].members());
      if (i > 0) CHECK(mine[i - 1].members() < mine[i].members());
    }
    CHECK(mine_sets == ref_sets);
    CHECK(count_maximum_stable_sets(g) == static_cast<long long>(ref.size()));
  }

  CHECK(error_code_of([] { all_maximum_stable_sets(complete_graph(25)); }) ==
        Errc::TooLargeForEnumeration);
}

TEST_CASE("critical edge predicate") {
  const Graph c5 = cycle_graph(5);
  for (const EdgeRef& e : c5.edges()) CHECK(is_alpha_critical_edge(c5, e));
  CHECK(!is_alpha_critical_edge(path_graph(3), EdgeRef(0, 1)));
  CHECK(is_alpha_critical_edge(complete_graph(2), EdgeRef(0, 1)));
  CHECK(error_code_of([&] { is_alpha_critical_edge(c5, EdgeRef(0, 2)); }) == Errc::NoSuchEdge);
}

TEST_CASE("criticality reports") {
  const CriticalityReport c7 = is_alpha_critical(cycle_graph(7));
  CHECK(c7.is_alpha_critical);
  CHECK(c7.alpha == 3);
  CHECK(c7.defect == 1);
  CHECK(c7.tau == 4);
  CHECK(c7.critical_edges.size() == 7);

  const CriticalityReport k4 = is_alpha_critical(complete_graph(4));
  CHECK(k4.is_alpha_critical);
  CHECK(k4.defect == 2);
  CHECK(k4.critical_edges == complete_graph(4).edges());

  CHECK(!is_alpha_critical(cycle_graph(6)).is_alpha_critical);
  CHECK(!is_alpha_critical(petersen()).is_alpha_critical);

  // Edgeless graphs are vacuously critical; defects go negative.
  const CriticalityReport k1 = is_alpha_critical(complete_graph(1));
  CHECK(k1.is_alpha_critical);
  CHECK(k1.alpha == 1);
  CHECK(k1.defect == -1);
  CHECK(k1.tau == 0);
  const CriticalityReport e4 = is_alpha_critical(empty_graph(4));
  CHECK(e4.is_alpha_critical);
  CHECK(e4.defect == -4);

  CHECK(defect(complete_graph(2)) == 0);
  CHECK(defect(cycle_graph(5)) == 1);

  Rng rng(423);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(rng, uniform_int(rng, 1, 10), 0.4);
    const CriticalityReport r = is_alpha_critical(g);
    CHECK(r.tau == g.vertex_count() - r.alpha);
    CHECK(r.defect == r.tau - r.alpha);
    CHECK(r.is_alpha_critical == (r.critical_edges.size() == static_cast<std::size_t>(g.edge_count())));
    CHECK(r.is_alpha_critical == all_edges_alpha_critical(g));
  }
}

TEST_CASE("deletions move alpha by at most one") {
  Rng rng(424);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(rng, uniform_int(rng, 2, 11), 0.4);
    const int a = stability_number(g);
    for (const EdgeRef& e : g.edges()) {
      const int ae = stability_number(delete_edge(g, e));
      CHECK(ae >= a);
      CHECK(ae <= a + 1);
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
      const int av = stability_number(delete_vertex(g, v));
      CHECK(av >= a - 1);
      CHECK(av <= a);
    }
  }
}

TEST_CASE("critical graphs with an edge keep alpha under vertex deletion") {
  for (const Graph& g : alpha_critical_corpus(7)) {
    const int a = stability_number(g);
    for (int v = 0; v < g.vertex_count(); ++v)
      CHECK(stability_number(delete_vertex(g, v)) == a);
  }
}

TEST_CASE("subset stability table matches direct evaluation") {
  Rng rng(425);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = uniform_int(rng, 1, 8);
    const Graph g = random_graph(rng, n, 0.45);
    const std::vector<int8_t> table = subset_stability_table(g);
    REQUIRE(table.size() == (1u << n));
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      Bits512 bits;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1) bits.set(v);
      CHECK(static_cast<int>(table[mask]) == stability_number_within(g, bits));
    }
  }
  CHECK(error_code_of([] { subset_stability_table(complete_graph(21)); }) ==
        Errc::TooLargeForEnumeration);
}

TEST_CASE("stable set enumeration by size supports early exit") {
  const Graph c5 = cycle_graph(5);
  int seen = 0;
  enumerate_stable_sets_of_size(c5, 2, [&](const Bits512&) {
    ++seen;
    return true;
  });
  CHECK(seen == 5);
  seen = 0;
  enumerate_stable_sets_of_size(c5, 1, [&](const Bits512&) {
    ++seen;
    return seen < 2;
  });
  CHECK(seen == 2);
}

TEST_CASE("solver agrees with the exhaustive oracle") {
  Rng rng(426);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(rng, uniform_int(rng, 1, 14), 0.35);
    CHECK(stability_number(g) == oracle_stability_number(g));
  }
}
