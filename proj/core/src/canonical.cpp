#include "alphacrit/canonical.hpp"

#include <algorithm>
#include <cstdint>

#include "alphacrit/graph6.hpp"

namespace alphacrit {

namespace {

// Open or closed twins swap by an automorphism fixing everything else, so at
// any search level only one of them needs to be tried.
bool vertices_are_twins(const Graph& g, int x, int y) {
  Bits512 rx = g.row(x);
  Bits512 ry = g.row(y);
  if (rx.test(y)) {
    rx.reset(y);
    ry.reset(x);
  }
  return rx == ry;
}

class MinEncodingSearch {
 public:
  explicit MinEncodingSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {
    const std::size_t bits = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
    best_.assign(bits, 0);
    cur_.assign(bits, 0);
    order_.assign(static_cast<std::size_t>(n_), -1);
    best_order_.assign(static_cast<std::size_t>(n_), -1);
    seed();
    if (n_ > 1) dfs(0, /*prefix_equals_best=*/true);
  }

  std::vector<int> permutation() const {
    std::vector<int> perm(static_cast<std::size_t>(n_));
    for (int k = 0; k < n_; ++k) perm[static_cast<std::size_t>(best_order_[k])] = k;
    return perm;
  }

 private:
  static std::size_t column_offset(int k) {
    return static_cast<std::size_t>(k) * (k - 1) / 2;
  }

  // Greedy initial bound: repeatedly place the vertex whose column against
  // the placed prefix is smallest, so pruning starts from a decent order.
  void seed() {
    Bits512 used;
    for (int k = 0; k < n_; ++k) {
      int pick = -1;
      for (int x = 0; x < n_; ++x) {
        if (used.test(x)) continue;
        if (pick == -1) {
          pick = x;
          continue;
        }
        for (int u = 0; u < k; ++u) {
          const bool bx = g_.row(x).test(order_[static_cast<std::size_t>(u)]);
          const bool bp = g_.row(pick).test(order_[static_cast<std::size_t>(u)]);
          if (bx != bp) {
            if (bp) pick = x;
            break;
          }
        }
      }
      order_[static_cast<std::size_t>(k)] = pick;
      used.set(pick);
      const std::size_t off = column_offset(k);
      for (int u = 0; u < k; ++u)
        best_[off + static_cast<std::size_t>(u)] =
            g_.row(pick).test(order_[static_cast<std::size_t>(u)]) ? 1 : 0;
    }
    best_order_ = order_;
    used_ = Bits512{};
    std::fill(order_.begin(), order_.end(), -1);
  }

  // Returns true when best_ was replaced somewhere in this subtree; the
  // caller's prefix then matches the new best exactly.
  bool dfs(int k, bool prefix_equals_best) {
    if (k == n_) {
      if (!prefix_equals_best) {
        best_ = cur_;
        for (int i = 0; i < n_; ++i) best_order_[static_cast<std::size_t>(i)] = order_[i];
        return true;
      }
      return false;
    }
    bool replaced = false;
    const std::size_t off = column_offset(k);
    std::vector<int> tried;
    for (int x = 0; x < n_; ++x) {
      if (used_.test(x)) continue;
      bool skip = false;
      for (int t : tried) {
        if (vertices_are_twins(g_, t, x)) {
          skip = true;
          break;
        }
      }
      if (skip) continue;
      tried.push_back(x);

      int cmp = 0;  // column vs best column, meaningful only when prefix equal
      for (int u = 0; u < k; ++u) {
        const std::uint8_t bit =
            g_.row(x).test(order_[static_cast<std::size_t>(u)]) ? 1 : 0;
        cur_[off + static_cast<std::size_t>(u)] = bit;
        if (prefix_equals_best && cmp == 0)
          cmp = static_cast<int>(bit) - static_cast<int>(best_[off + static_cast<std::size_t>(u)]);
      }
      if (prefix_equals_best && cmp > 0) continue;

      order_[static_cast<std::size_t>(k)] = x;
      used_.set(x);
      const bool child_equal = prefix_equals_best && cmp == 0;
      if (dfs(k + 1, child_equal)) {
        replaced = true;
        // The new best extends this node's prefix, so later siblings must be
        // compared against it from an equal prefix.
        prefix_equals_best = true;
      }
      used_.reset(x);
    }
    order_[static_cast<std::size_t>(k)] = -1;
    return replaced;
  }

  const Graph& g_;
  int n_;
  std::vector<std::uint8_t> best_;
  std::vector<std::uint8_t> cur_;
  std::vector<int> order_;
  std::vector<int> best_order_;
  Bits512 used_;
};

}  // namespace

std::vector<int> canonical_permutation(const Graph& g) {
  return MinEncodingSearch(g).permutation();
}

Graph canonical_graph(const Graph& g) {
  Graph out = apply_permutation(g, canonical_permutation(g));
  return out;
}

std::string canonical_form(const Graph& g) { return to_graph6(canonical_graph(g)); }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace alphacrit
