#include "alphacrit/critical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>

#include "alphacrit/error.hpp"
#include "alphacrit/factory.hpp"

namespace alphacrit {

namespace {

std::string set_to_string(const Bits512& bits) {
  std::string out = "{";
  bool first = true;
  bits.for_each([&](int v) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

void check_gap(const JoinQuadruple& q) {
  validate_quadruple(q);
  if (stability_number_within(q.g, q.g0.bits) != stability_number(q.g) - 1)
    throw Error(Errc::HypothesisViolated,
                "alpha(g[g0]) must be alpha(g) - 1");
  if (stability_number_within(q.h, q.h0.bits) != stability_number(q.h) - 1)
    throw Error(Errc::HypothesisViolated,
                "alpha(h[h0]) must be alpha(h) - 1");
}

Bits512 shift_bits(const Bits512& bits, int offset) {
  Bits512 out;
  bits.for_each([&](int v) { out.set(offset + v); });
  return out;
}

// Word-sized views used by the subset-table scans; callers stay under the
// 14-vertex composition cap, so 32 bits always suffice.
uint32_t mask_of(const Bits512& bits, int n) {
  uint32_t m = 0;
  for (int i = 0; i < n; ++i)
    if (bits.test(i)) m |= 1u << i;
  return m;
}

Bits512 bits_of(uint32_t mask) {
  Bits512 out;
  for (int i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1) out.set(i);
  return out;
}

uint32_t closed_row_mask(const Graph& g, int v) {
  uint32_t m = 1u << v;
  g.row(v).for_each([&](int w) { m |= 1u << w; });
  return m;
}

// One side of the three join conditions. The induced g0 graph is rebuilt so
// "critical in the designated subgraph standing alone" means exactly that.
void check_side_conditions(const Graph& g, const VertexSet& g0,
                           const char* side, bool& maximal,
                           bool& outside_critical, bool& inside_covered,
                           std::vector<ConditionViolation>& violations) {
  maximal = true;
  const int base = stability_number(g);
  const int target = base - 1;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (g0.bits.test(u)) continue;
    Bits512 ext = g0.bits;
    ext.set(u);
    if (stability_number_within(g, ext) == target) {
      maximal = false;
      violations.push_back(
          {"i", side, std::nullopt, VertexSet{ext, g.vertex_count()}});
      break;
    }
  }
  const InducedSubgraph inner = induced_subgraph(g, g0);
  outside_critical = true;
  inside_covered = true;
  for (const EdgeRef& e : g.edges()) {
    const bool inside = g0.bits.test(e.u) && g0.bits.test(e.v);
    if (!inside) {
      if (!is_alpha_critical_edge(g, e)) {
        if (outside_critical) violations.push_back({"ii", side, e, std::nullopt});
        outside_critical = false;
      }
    } else {
      const EdgeRef mapped(inner.old_to_new[e.u], inner.old_to_new[e.v]);
      if (!is_alpha_critical_edge(g, e) &&
          !is_alpha_critical_edge(inner.graph, mapped)) {
        if (inside_covered) violations.push_back({"iii", side, e, std::nullopt});
        inside_covered = false;
      }
    }
  }
}

struct FamilyCollector {
  int host_n;
  std::vector<PredictedFamily> out;
  std::unordered_set<Bits512, Bits512Hash> seen;

  void add(const char* tag, const Bits512& bits, std::string provenance) {
    if (!seen.insert(bits).second) return;
    out.push_back({tag, VertexSet{bits, host_n}, std::move(provenance)});
  }
};

}  // namespace

VertexSet canonical_subgraph(const Graph& g, int v) {
  g.check_vertex(v);
  Bits512 closed = g.row(v);
  closed.set(v);
  Bits512 out = Bits512::prefix(g.vertex_count());
  out = out.minus(closed);
  return VertexSet{out, g.vertex_count()};
}

bool check_vertex_star_critical(const Graph& g, int v) {
  g.check_vertex(v);
  bool all = true;
  g.row(v).for_each([&](int w) {
    if (all && !is_alpha_critical_edge(g, EdgeRef(v, w))) all = false;
  });
  return all;
}

bool is_maximal_alpha_minus_one(const Graph& g, const VertexSet& s) {
  check_host(g, s);
  const int base = stability_number(g);
  if (stability_number_within(g, s.bits) != base - 1) return false;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (s.bits.test(u)) continue;
    Bits512 ext = s.bits;
    ext.set(u);
    if (stability_number_within(g, ext) != base) return false;
  }
  return true;
}

std::vector<MaximalEntry> enumerate_maximal_alpha_minus_one(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 14)
    throw Error(Errc::TooLargeForEnumeration,
                "maximal subgraph enumeration capped at 14 vertices, got " +
                    std::to_string(n));
  std::vector<MaximalEntry> out;
  const int base = stability_number(g);
  if (base == 0) return out;
  const int target = base - 1;

  std::vector<std::vector<uint32_t>> by_size(n + 1);
  for (uint32_t mask = 0; mask < (1u << n); ++mask)
    by_size[std::popcount(mask)].push_back(mask);

  std::vector<Bits512> closed_rows(n);
  for (int v = 0; v < n; ++v) {
    closed_rows[v] = g.row(v);
    closed_rows[v].set(v);
  }
  const Bits512 all = Bits512::prefix(n);

  std::vector<Bits512> accepted;
  for (int k = n; k >= 0; --k) {
    for (uint32_t mask : by_size[k]) {
      Bits512 s;
      for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) s.set(v);
      bool covered = false;
      for (const Bits512& a : accepted) {
        if (s.subset_of(a)) {
          covered = true;
          break;
        }
      }
      if (covered) continue;
      if (stability_number_within(g, s) != target) continue;
      accepted.push_back(s);
      MaximalEntry entry;
      entry.vertices = VertexSet{s, n};
      for (int v = 0; v < n; ++v) {
        if (s == all.minus(closed_rows[v])) {
          entry.cls = MaximalClass::Canonical;
          entry.canonical_vertex = v;
          break;
        }
      }
      out.push_back(std::move(entry));
    }
  }
  return out;
}

JoinConditionReport check_join_conditions(const JoinQuadruple& q) {
  check_gap(q);
  JoinConditionReport r;
  check_side_conditions(q.g, q.g0, "g", r.g_maximal, r.g_outside_critical,
                        r.g_inside_covered, r.violations);
  check_side_conditions(q.h, q.h0, "h", r.h_maximal, r.h_outside_critical,
                        r.h_inside_covered, r.violations);
  r.all_hold = r.g_maximal && r.h_maximal && r.g_outside_critical &&
               r.h_outside_critical && r.g_inside_covered && r.h_inside_covered;
  return r;
}

AlphaIdentity join_alpha_identity(const JoinQuadruple& q) {
  check_gap(q);
  AlphaIdentity r;
  r.predicted = stability_number(q.g) + stability_number(q.h) - 1;
  r.actual = stability_number(one_join(q));
  return r;
}

K1ReductionReport corollary_k1_reduction(const JoinQuadruple& q) {
  check_gap(q);
  const Graph k1 = complete_graph(1);
  K1ReductionReport r;
  r.j_critical = all_edges_alpha_critical(one_join(q));
  r.g1_critical =
      all_edges_alpha_critical(one_join({q.g, q.g0, k1, empty_set(k1)}));
  r.h1_critical =
      all_edges_alpha_critical(one_join({q.h, q.h0, k1, empty_set(k1)}));
  return r;
}

namespace {

void check_gap_and_conditions(const JoinQuadruple& q) {
  const JoinConditionReport r = check_join_conditions(q);
  if (!r.all_hold)
    throw Error(Errc::HypothesisViolated,
                "all six join conditions must hold");
}

}  // namespace

bool corollary_vertex_deleted(const JoinQuadruple& q, int u) {
  q.g.check_vertex(u);
  check_gap_and_conditions(q);
  return all_edges_alpha_critical(delete_vertex(one_join(q), u));
}

bool corollary_vertex_deleted(const JoinQuadruple& q, int u, int v) {
  q.g.check_vertex(u);
  q.h.check_vertex(v);
  check_gap_and_conditions(q);
  const Graph j = one_join(q);
  const VertexSet dropped = make_vertex_set(
      j, std::vector<int>{u, join_image(q.g.vertex_count(), v)});
  return all_edges_alpha_critical(delete_vertices(j, dropped).graph);
}

std::vector<PredictedFamily> predict_maximal_in_ev_composition(
    const Graph& g, const EdgeRef& e, const Graph& h, int v,
    const EVPartition& p) {
  const Graph w = edge_vertex_compose(g, e, h, v, p);
  if (w.vertex_count() > 14)
    throw Error(Errc::TooLargeForEnumeration,
                "composed graph capped at 14 vertices, got " +
                    std::to_string(w.vertex_count()));
  if (!all_edges_alpha_critical(g) || !all_edges_alpha_critical(h))
    throw Error(Errc::HypothesisViolated, "both blocks must be alpha-critical");

  const int ng = g.vertex_count();
  const int nh = h.vertex_count();
  // Criticality of both blocks pins alpha of the composition.
  const int target = stability_number(g) + stability_number(h) - 1;

  const std::vector<int8_t> tbl_g = subset_stability_table(g);
  const std::vector<int8_t> tbl_h = subset_stability_table(h);

  const uint32_t bit1 = 1u << e.u;
  const uint32_t bit2 = 1u << e.v;
  const uint32_t cn1 = closed_row_mask(g, e.u);
  const uint32_t cn2 = closed_row_mask(g, e.v);
  const uint32_t u1m = mask_of(p.u1.bits, nh);
  const uint32_t u2m = mask_of(p.u2.bits, nh);
  const uint32_t vbit = 1u << v;
  const uint32_t g_full = (1u << ng) - 1;
  const uint32_t h_rest = ((1u << nh) - 1) & ~vbit;

  // Stability number of the composed subgraph on wg plus the image of th,
  // split by which endpoints of the replaced edge enter the stable set.
  // Every mask fed to tbl_g avoids an endpoint of that edge, so the table
  // of g itself is valid even though the composition removes the edge.
  auto within = [&](uint32_t wg, uint32_t th) {
    int best = tbl_g[wg & ~(bit1 | bit2)] + tbl_h[th];
    if (wg & bit1)
      best = std::max(best, 1 + tbl_g[wg & ~cn1] + tbl_h[th & ~u1m]);
    if (wg & bit2)
      best = std::max(best, 1 + tbl_g[wg & ~cn2] + tbl_h[th & ~u2m]);
    if ((wg & bit1) && (wg & bit2))
      best = std::max(
          best, 2 + tbl_g[wg & ~(cn1 | cn2)] + tbl_h[th & ~(u1m | u2m)]);
    return best;
  };

  std::unordered_set<uint32_t> max_g, max_h;
  for (const auto& m : enumerate_maximal_alpha_minus_one(g))
    max_g.insert(mask_of(m.vertices.bits, ng));
  for (const auto& m : enumerate_maximal_alpha_minus_one(h))
    max_h.insert(mask_of(m.vertices.bits, nh));

  FamilyCollector fam{w.vertex_count(), {}, {}};
  for (uint32_t wg = 0; wg <= g_full; ++wg) {
    for (uint32_t th = 0; th <= h_rest; ++th) {
      if (th & vbit) continue;
      if (within(wg, th) != target) continue;
      bool maximal = true;
      for (int x = 0; x < ng && maximal; ++x)
        if (!(wg >> x & 1))
          maximal = within(wg | (1u << x), th) == target + 1;
      for (int y = 0; y < nh && maximal; ++y)
        if (y != v && !(th >> y & 1))
          maximal = within(wg, th | (1u << y)) == target + 1;
      if (!maximal) continue;

      const char* tag = "EV-v";
      if (th == h_rest && max_g.count(wg)) {
        tag = "EV-i";
      } else if (wg == g_full && max_h.count(th | vbit)) {
        tag = "EV-ii";
      } else if ((wg == (g_full & ~bit1) || wg == (g_full & ~bit2)) &&
                 max_h.count(th)) {
        tag = "EV-iii";
      } else {
        for (auto [kept, far_part] :
             {std::pair{bit1, u2m}, std::pair{bit2, u1m}}) {
          if ((wg & kept) && max_g.count(wg & ~kept) &&
              th == (h_rest & ~far_part)) {
            tag = "EV-iv";
            break;
          }
        }
      }

      const Bits512 wg_bits = bits_of(wg);
      const Bits512 th_bits = bits_of(th);
      Bits512 composed = wg_bits;
      th_bits.for_each([&](int y) { composed.set(ev_image(ng, v, y)); });
      fam.add(tag, composed,
              "g side " + set_to_string(wg_bits) + ", h side " +
                  set_to_string(th_bits) + " (h labeling)");
    }
  }
  return std::move(fam.out);
}

std::vector<PredictedFamily> predict_maximal_in_join(const JoinQuadruple& q) {
  check_gap(q);
  const int ng = q.g.vertex_count();
  const int nh = q.h.vertex_count();
  if (ng + nh > 14)
    throw Error(Errc::TooLargeForEnumeration,
                "composed graph capped at 14 vertices, got " +
                    std::to_string(ng + nh));
  // The gap hypothesis pins alpha of the join at alpha_g + alpha_h - 1.
  const int alpha_g = stability_number(q.g);
  const int alpha_h = stability_number(q.h);
  const int target = alpha_g + alpha_h - 2;

  const std::vector<int8_t> tbl_g = subset_stability_table(q.g);
  const std::vector<int8_t> tbl_h = subset_stability_table(q.h);
  const uint32_t g0m = mask_of(q.g0.bits, ng);
  const uint32_t h0m = mask_of(q.h0.bits, nh);
  const uint32_t g_full = (1u << ng) - 1;
  const uint32_t h_full = (1u << nh) - 1;

  FamilyCollector fam{ng + nh, {}, {}};
  for (uint32_t wg = 0; wg <= g_full; ++wg) {
    const int a = tbl_g[wg];
    const int a0 = tbl_g[wg & g0m];
    for (uint32_t wh = 0; wh <= h_full; ++wh) {
      const int b = tbl_h[wh];
      const int b0 = tbl_h[wh & h0m];
      // A stable set of the join stays inside one designated side, so the
      // stability number on (wg, wh) is the better of the two mixed sums.
      if (std::max(a + b0, a0 + b) != target) continue;
      // Maximality: each added vertex must lift the mixed maximum to
      // target + 1. The designated sides cap b0 at alpha_h - 1 and a0 at
      // alpha_g - 1, which reduces each lift to the two equalities below.
      bool maximal = true;
      for (int x = 0; x < ng && maximal; ++x) {
        if (wg >> x & 1) continue;
        const uint32_t ext = wg | (1u << x);
        maximal = (b0 == alpha_h - 1 && tbl_g[ext] == alpha_g) ||
                  (b == alpha_h && tbl_g[ext & g0m] == alpha_g - 1);
      }
      for (int y = 0; y < nh && maximal; ++y) {
        if (wh >> y & 1) continue;
        const uint32_t ext = wh | (1u << y);
        maximal = (a0 == alpha_g - 1 && tbl_h[ext] == alpha_h) ||
                  (a == alpha_g && tbl_h[ext & h0m] == alpha_h - 1);
      }
      if (!maximal) continue;

      const char* tag = "J-iv";
      if (wh == h_full)
        tag = "J-ii";
      else if (wg == g_full)
        tag = "J-iii";
      else if (a == alpha_g - 1 && b == alpha_h - 1 && a0 == alpha_g - 1 &&
               b0 == alpha_h - 1)
        tag = "J-i";

      const Bits512 wg_bits = bits_of(wg);
      const Bits512 wh_bits = bits_of(wh);
      fam.add(tag, wg_bits | shift_bits(wh_bits, ng),
              "g side " + set_to_string(wg_bits) + ", h side " +
                  set_to_string(wh_bits) + " (h labeling)");
    }
  }
  return std::move(fam.out);
}

}  // namespace alphacrit
