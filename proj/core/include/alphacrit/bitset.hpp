#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace alphacrit {

// Fixed 512-bit vertex mask. Always eight words so the solver's inner loops
// stay branch-free regardless of graph order.
struct Bits512 {
  static constexpr int kWords = 8;
  static constexpr int kCapacity = 512;

  std::array<std::uint64_t, kWords> w{};

  // mask with bits [0, n) set
  static Bits512 prefix(int n) {
    Bits512 r;
    for (int k = 0; k < kWords; ++k) {
      int lo = k * 64;
      if (n <= lo) break;
      int take = n - lo >= 64 ? 64 : n - lo;
      r.w[k] = take == 64 ? ~0ull : ((1ull << take) - 1);
    }
    return r;
  }

  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1ull; }
  void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(1ull << (i & 63)); }
  void clear() { w.fill(0); }

  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  bool any() const {
    for (auto x : w)
      if (x) return true;
    return false;
  }
  bool none() const { return !any(); }

  friend bool operator==(const Bits512&, const Bits512&) = default;

  Bits512& operator&=(const Bits512& o) {
    for (int k = 0; k < kWords; ++k) w[k] &= o.w[k];
    return *this;
  }
  Bits512& operator|=(const Bits512& o) {
    for (int k = 0; k < kWords; ++k) w[k] |= o.w[k];
    return *this;
  }
  friend Bits512 operator&(Bits512 a, const Bits512& b) { return a &= b; }
  friend Bits512 operator|(Bits512 a, const Bits512& b) { return a |= b; }

  // this & ~o
  Bits512 minus(const Bits512& o) const {
    Bits512 r;
    for (int k = 0; k < kWords; ++k) r.w[k] = w[k] & ~o.w[k];
    return r;
  }
  bool subset_of(const Bits512& o) const {
    for (int k = 0; k < kWords; ++k)
      if (w[k] & ~o.w[k]) return false;
    return true;
  }
  bool intersects(const Bits512& o) const {
    for (int k = 0; k < kWords; ++k)
      if (w[k] & o.w[k]) return true;
    return false;
  }

  // index of lowest set bit, -1 when empty
  int first() const {
    for (int k = 0; k < kWords; ++k)
      if (w[k]) return k * 64 + std::countr_zero(w[k]);
    return -1;
  }

  // lowest set bit strictly above i, -1 when none
  int next_after(int i) const {
    ++i;
    if (i >= kCapacity) return -1;
    int k = i >> 6;
    std::uint64_t cur = w[k] & (~0ull << (i & 63));
    while (true) {
      if (cur) return k * 64 + std::countr_zero(cur);
      if (++k >= kWords) return -1;
      cur = w[k];
    }
  }

  template <class F>
  void for_each(F f) const {
    for (int k = 0; k < kWords; ++k) {
      std::uint64_t cur = w[k];
      while (cur) {
        int b = std::countr_zero(cur);
        f(k * 64 + b);
        cur &= cur - 1;
      }
    }
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int i) { out.push_back(i); });
    return out;
  }
};

// Order by lowest vertex id where membership differs; the set containing that
// vertex sorts first. For equal-size sets this is lexicographic order on the
// sorted id sequences.
inline bool lex_less(const Bits512& a, const Bits512& b) {
  for (int k = 0; k < Bits512::kWords; ++k) {
    std::uint64_t diff = a.w[k] ^ b.w[k];
    if (diff) {
      std::uint64_t low = diff & (~diff + 1);
      return (a.w[k] & low) != 0;
    }
  }
  return false;
}

struct Bits512Hash {
  std::size_t operator()(const Bits512& b) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto x : b.w) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace alphacrit
