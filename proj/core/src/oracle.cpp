#include "alphacrit/oracle.hpp"

#include <bit>
#include <cstdint>

namespace alphacrit {

namespace {

constexpr int kOracleCap = 26;

std::vector<std::uint32_t> mask_adjacency(const Graph& g) {
  if (g.vertex_count() > kOracleCap)
    throw Error(Errc::TooLargeForEnumeration,
                "oracle scan capped at " + std::to_string(kOracleCap) + " vertices, got " +
                    std::to_string(g.vertex_count()));
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= std::uint32_t{1} << e.v;
    adj[static_cast<std::size_t>(e.v)] |= std::uint32_t{1} << e.u;
  }
  return adj;
}

bool mask_is_stable(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
  std::uint32_t rest = mask;
  while (rest != 0) {
    const int v = std::countr_zero(rest);
    if ((adj[static_cast<std::size_t>(v)] & mask) != 0) return false;
    rest &= rest - 1;
  }
  return true;
}

}  // namespace

int oracle_stability_number(const Graph& g) {
  const auto adj = mask_adjacency(g);
  const int n = g.vertex_count();
  int best = 0;
  const std::uint32_t limit =
      n >= 32 ? 0 : (std::uint32_t{1} << n);  // n <= 26 here, no overflow
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    const int size = std::popcount(mask);
    if (size > best && mask_is_stable(adj, mask)) best = size;
  }
  return best;
}

std::vector<std::vector<int>> oracle_all_maximum_stable_sets(const Graph& g) {
  const auto adj = mask_adjacency(g);
  const int n = g.vertex_count();
  const int alpha = oracle_stability_number(g);
  std::vector<std::vector<int>> out;
  const std::uint32_t limit = n >= 32 ? 0 : (std::uint32_t{1} << n);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) != alpha || !mask_is_stable(adj, mask)) continue;
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1) members.push_back(v);
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace alphacrit
