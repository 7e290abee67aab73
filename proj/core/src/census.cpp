#include "alphacrit/census.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <mutex>
#include <unordered_set>

#include "alphacrit/canonical.hpp"
#include "alphacrit/error.hpp"
#include "alphacrit/graph6.hpp"
#include "alphacrit/reduce.hpp"
#include "alphacrit/solver.hpp"

namespace alphacrit {

namespace {

constexpr int kCensusCap = 9;

std::recursive_mutex census_mutex;
std::map<std::pair<int, int>, std::vector<std::string>>& memo() {
  static std::map<std::pair<int, int>, std::vector<std::string>> m;
  return m;
}

std::string cache_path(int n, bool connected) {
  const char* dir = std::getenv("ALPHACRIT_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return {};
  return std::string(dir) + "/census-" + (connected ? "connected" : "all") +
         "-n" + std::to_string(n) + "-v1.g6.gz";
}

bool read_cache(const std::string& path, std::vector<std::string>& out) {
  gzFile f = gzopen(path.c_str(), "rb");
  if (f == nullptr) return false;
  char line[128];
  while (gzgets(f, line, sizeof(line)) != nullptr) {
    std::string s(line);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (!s.empty()) out.push_back(std::move(s));
  }
  const bool ok = gzeof(f) != 0;
  gzclose(f);
  if (!ok) out.clear();
  return ok && !out.empty();
}

void write_cache(const std::string& path, const std::vector<std::string>& lines) {
  const std::string tmp = path + ".tmp";
  gzFile f = gzopen(tmp.c_str(), "wb");
  if (f == nullptr) return;
  std::string blob;
  for (const std::string& s : lines) {
    blob += s;
    blob += '\n';
  }
  const bool ok =
      gzwrite(f, blob.data(), static_cast<unsigned>(blob.size())) ==
      static_cast<int>(blob.size());
  gzclose(f);
  if (ok)
    std::rename(tmp.c_str(), path.c_str());
  else
    std::remove(tmp.c_str());
}

// Every graph on n vertices is an extension of one on n - 1, and every
// connected one extends a connected one (remove a spanning tree leaf), so
// extending level n - 1 by one vertex with every attachment set is complete.
std::vector<std::string> generate_level(int n, bool connected) {
  if (n == 0) return connected ? std::vector<std::string>{}
                               : std::vector<std::string>{to_graph6(Graph(0))};
  if (n == 1) return {to_graph6(Graph(1))};
  const std::vector<std::string> prev =
      census_level(n - 1, connected ? CensusFilter::Connected : CensusFilter::All);
  std::unordered_set<std::string> seen;
  for (const std::string& code : prev) {
    const Graph base = parse_graph6(code);
    const unsigned first_mask = connected ? 1u : 0u;
    for (unsigned mask = first_mask; mask < (1u << (n - 1)); ++mask) {
      Graph ext(n);
      for (const EdgeRef& e : base.edges()) ext.add_edge(e.u, e.v);
      for (int v = 0; v < n - 1; ++v) {
        if (mask & (1u << v)) ext.add_edge(v, n - 1);
      }
      seen.insert(canonical_form(ext));
    }
  }
  std::vector<std::string> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> base_level(int n, bool connected) {
  const auto key = std::make_pair(n, connected ? 1 : 0);
  if (auto it = memo().find(key); it != memo().end()) return it->second;
  const std::string path = cache_path(n, connected);
  std::vector<std::string> lines;
  if (!path.empty() && read_cache(path, lines)) {
    memo()[key] = lines;
    return lines;
  }
  lines = generate_level(n, connected);
  if (!path.empty() && n >= 7) write_cache(path, lines);
  memo()[key] = lines;
  return lines;
}

std::vector<std::string> filtered_level(int n, CensusFilter filter) {
  const auto key = std::make_pair(n, filter == CensusFilter::AlphaCritical ? 2 : 3);
  if (auto it = memo().find(key); it != memo().end()) return it->second;
  std::vector<std::string> out;
  if (filter == CensusFilter::AlphaCritical) {
    for (const std::string& code : base_level(n, true)) {
      const Graph g = parse_graph6(code);
      if (g.edge_count() >= 1 && all_edges_alpha_critical(g)) out.push_back(code);
    }
  } else {
    for (const std::string& code : census_level(n, CensusFilter::AlphaCritical)) {
      if (check_basic(parse_graph6(code)).is_basic) out.push_back(code);
    }
  }
  memo()[key] = out;
  return out;
}

}  // namespace

std::vector<std::string> census_level(int n, CensusFilter filter) {
  if (n < 0 || n > kCensusCap)
    throw Error(Errc::TooLargeForEnumeration,
                "census generation capped at " + std::to_string(kCensusCap) +
                    " vertices, got " + std::to_string(n));
  std::lock_guard<std::recursive_mutex> lock(census_mutex);
  switch (filter) {
    case CensusFilter::All:
      return base_level(n, false);
    case CensusFilter::Connected:
      return base_level(n, true);
    default:
      return filtered_level(n, filter);
  }
}

std::vector<Graph> census_graphs(int n, CensusFilter filter) {
  std::vector<Graph> out;
  for (const std::string& code : census_level(n, filter)) out.push_back(parse_graph6(code));
  return out;
}

}  // namespace alphacrit
