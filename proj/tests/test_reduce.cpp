#include <vector>

#include "alphacrit/canonical.hpp"
#include "alphacrit/census.hpp"
#include "alphacrit/critical.hpp"
#include "alphacrit/factory.hpp"
#include "alphacrit/generators.hpp"
#include "alphacrit/graph.hpp"
#include "alphacrit/graph6.hpp"
#include "alphacrit/ops.hpp"
#include "alphacrit/reduce.hpp"
#include "alphacrit/solver.hpp"
#include "doctest.h"
#include "support/test_util.hpp"

using namespace alphacrit;
using testsupport::error_code_of;
using testsupport::petersen;
using testsupport::vs;

TEST_CASE("closed twin detection and reversal") {
  for (int n = 2; n <= 6; ++n) {
    const auto w = find_closed_twins(complete_graph(n));
    REQUIRE(w.has_value());
    CHECK(w->u == 0);
    CHECK(w->v == 1);
  }
  CHECK(!find_closed_twins(cycle_graph(5)).has_value());
  CHECK(!is_duplication_reducible(cycle_graph(5)));

  const Graph d = duplicate_vertex(cycle_graph(5), 0);
  const auto w = find_closed_twins(d);
  REQUIRE(w.has_value());
  CHECK(w->u == 0);
  CHECK(w->v == 5);
  const Graph back = contract_duplicate(d, *w);
  CHECK(are_isomorphic(back, cycle_graph(5)));

  Rng rng(451);
  for (const Graph& g : alpha_critical_corpus(6)) {
    const int v = uniform_int(rng, 0, g.vertex_count() - 1);
    const Graph dup = duplicate_vertex(g, v);
    const auto tw = find_closed_twins(dup);
    REQUIRE(tw.has_value());
    CHECK(are_isomorphic(contract_duplicate(dup, *tw), g));
    // Re-duplicating the surviving twin restores the duplicate.
    CHECK(are_isomorphic(duplicate_vertex(contract_duplicate(dup, *tw), tw->u), dup));
  }
}

TEST_CASE("splitting gadget scan and reversal") {
  const auto c5_gadget = find_splitting_gadget(cycle_graph(5));
  REQUIRE(c5_gadget.has_value());
  CHECK(c5_gadget->vprime == 1);
  CHECK(c5_gadget->u == 0);
  CHECK(c5_gadget->vdoubleprime == 4);
  CHECK(are_isomorphic(contract_split(cycle_graph(5), *c5_gadget), complete_graph(3)));

  // The 3-cycle's low degree vertices reverse no split: the bridge's
  // neighbors are adjacent.
  CHECK(!find_splitting_gadget(cycle_graph(3)).has_value());
  CHECK(!find_splitting_gadget(complete_graph(2)).has_value());
  CHECK(!find_splitting_gadget(complete_graph(4)).has_value());

  const Graph k4 = complete_graph(4);
  for (const SplitPartition& p : split_partitions(k4, 0)) {
    const Graph s = split_vertex(k4, 0, p);
    const auto g = find_splitting_gadget(s);
    REQUIRE(g.has_value());
    CHECK(are_isomorphic(contract_split(s, *g), k4));
  }
}

TEST_CASE("degree criterion for connected critical hosts") {
  CHECK(is_splitting_reducible_alpha_critical(cycle_graph(5)));
  CHECK(is_splitting_reducible_alpha_critical(complete_graph(2)));
  CHECK(!is_splitting_reducible_alpha_critical(complete_graph(4)));
  CHECK(is_splitting_reducible_alpha_critical(odd_subdivide(complete_graph(4), EdgeRef(0, 1))));

  CHECK(error_code_of([] { is_splitting_reducible_alpha_critical(cycle_graph(6)); }) ==
        Errc::PreconditionViolated);
  CHECK(error_code_of([] {
          is_splitting_reducible_alpha_critical(
              disjoint_union(complete_graph(2), complete_graph(2)));
        }) == Errc::PreconditionViolated);
}

TEST_CASE("odd subdivision gadget and reversal") {
  const Graph planted = odd_subdivide(complete_graph(4), EdgeRef(0, 1));
  const auto w = find_odd_subdivision_gadget(planted);
  REQUIRE(w.has_value());
  CHECK(w->u == 0);
  CHECK(w->uprime == 4);
  CHECK(w->vprime == 5);
  CHECK(w->v == 1);
  CHECK(is_odd_subdivision_reducible(planted));

  CHECK(!is_odd_subdivision_reducible(complete_graph(4)));
  CHECK(!is_odd_subdivision_reducible(cycle_graph(3)));  // outer neighbors coincide
  CHECK(!is_odd_subdivision_reducible(cycle_graph(4)));  // outer neighbors adjacent

  for (const Graph& g : alpha_critical_corpus(6)) {
    for (const EdgeRef& e : g.edges()) {
      const Graph s = odd_subdivide(g, e);
      const auto gadget = find_odd_subdivision_gadget(s);
      REQUIRE(gadget.has_value());
      const Graph back = contract_odd_subdivision(s, *gadget);
      // Ids compact around the removed pair; re-subdividing the recreated
      // edge must reproduce the original up to isomorphism.
      auto compact = [&](int x) {
        int shift = 0;
        if (gadget->uprime < x) ++shift;
        if (gadget->vprime < x) ++shift;
        return x - shift;
      };
      CHECK(are_isomorphic(odd_subdivide(back, EdgeRef(compact(gadget->u), compact(gadget->v))), s));
    }
  }
}

TEST_CASE("basic reports across the critical census") {
  for (int n = 2; n <= 8; ++n) {
    std::vector<std::string> basics;
    for (const Graph& g : census_graphs(n, CensusFilter::AlphaCritical)) {
      const ReducibilityReport r = check_basic(g);
      CHECK(r.splitting_reducible == (g.min_degree() <= 2));
      CHECK(r.duplication_reducible == find_closed_twins(g).has_value());
      CHECK(r.is_basic == (!r.splitting_reducible && !r.duplication_reducible));
      if (r.odd_subdivision_reducible) CHECK(r.splitting_reducible);
      if (r.is_basic) basics.push_back(canonical_form(g));
    }
    CHECK(basics == census_level(n, CensusFilter::Basic));
  }

  const ReducibilityReport k4 = check_basic(complete_graph(4));
  CHECK(!k4.splitting_reducible);
  CHECK(k4.duplication_reducible);
  CHECK(!k4.is_basic);

  const ReducibilityReport c7 = check_basic(cycle_graph(7));
  CHECK(c7.splitting_reducible);
  CHECK(!c7.is_basic);

  // Smallest basic class sits at eight vertices.
  const Graph smallest_basic = parse_graph6("GJemvG");
  CHECK(check_basic(smallest_basic).is_basic);
  CHECK(smallest_basic.min_degree() >= 3);

  // The report is defined for connected critical hosts only.
  CHECK(error_code_of([] { check_basic(petersen()); }) == Errc::PreconditionViolated);
  CHECK(error_code_of([] { check_basic(cycle_graph(6)); }) == Errc::PreconditionViolated);
}

TEST_CASE("join reducibility theorem sides agree") {
  Rng rng(452);
  for (int trial = 0; trial < 25; ++trial) {
    const JoinBasicReport r = check_join_basic_theorem(random_conditions_quadruple(rng, 6));
    CHECK(r.splitting.agree);
    CHECK(r.odd_subdivision.agree);
    CHECK(r.duplication.agree);
    CHECK(r.all_agree);
  }
  for (int trial = 0; trial < 25; ++trial) {
    const JoinBasicReport r = check_join_basic_theorem(random_gap_quadruple(rng, 6, false));
    CHECK(r.all_agree);
  }

  // Both designated sets dropping closed neighborhoods makes the join a
  // double duplication: both sides of the twin-freeness part go false.
  const Graph c5 = cycle_graph(5);
  const JoinQuadruple twins{c5, canonical_subgraph(c5, 0), c5, canonical_subgraph(c5, 0)};
  const JoinBasicReport tw = check_join_basic_theorem(twins);
  CHECK(!tw.duplication.direct);
  CHECK(!tw.duplication.conditions);
  CHECK(tw.duplication.agree);

  // Fully joined complete blocks make a larger complete graph: connected,
  // critical, no low degree gadget, and the block conditions concur.
  const Graph k4 = complete_graph(4);
  const JoinQuadruple full{k4, empty_set(k4), k4, empty_set(k4)};
  CHECK(are_isomorphic(one_join(full), complete_graph(8)));
  const JoinBasicReport fr = check_join_basic_theorem(full);
  CHECK(fr.splitting.direct);
  CHECK(fr.splitting.conditions);
  CHECK(fr.all_agree);

  const Graph k2 = complete_graph(2);
  CHECK(error_code_of([&] {
          check_join_basic_theorem(JoinQuadruple{k2, vs(k2, {0}), k2, empty_set(k2)});
        }) == Errc::HypothesisViolated);
}
