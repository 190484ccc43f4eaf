#pragma once

// Brute-force reference implementations used only by the tests. They share
// nothing with the library beyond reading simplex tables: chains are plain
// 64-bit masks and every search is exhaustive.

#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "kbound/complex.hpp"

namespace oracle {

using Mask = std::uint64_t;

inline Mask to_mask(const kbound::Chain& c) {
  if (c.support.size() > 64) throw std::length_error("oracle limited to 64 simplices");
  Mask m = 0;
  for (std::size_t i = 0; i < c.support.size(); ++i) {
    if (c.support.test(i)) m |= Mask{1} << i;
  }
  return m;
}

// Boundary of a set of d-simplices given as a mask, d >= 1.
inline Mask boundary(const kbound::Complex& k, int d, Mask chain) {
  Mask out = 0;
  const auto table = k.table(d);
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!((chain >> i) & 1)) continue;
    for (auto f : table[i].faces) out ^= Mask{1} << f;
  }
  return out;
}

inline Mask boundary_of_vertices(Mask chain) {
  return static_cast<Mask>(__builtin_popcountll(chain) & 1);
}

// Every boundary of a top chain using only simplices in `allowed`.
inline std::set<Mask> reachable_boundaries(const kbound::Complex& k, Mask allowed) {
  const int n = k.top_dim();
  std::vector<std::size_t> tops;
  for (std::size_t i = 0; i < k.size(n); ++i) {
    if ((allowed >> i) & 1) tops.push_back(i);
  }
  std::set<Mask> out;
  for (Mask s = 0; s < (Mask{1} << tops.size()); ++s) {
    Mask chain = 0;
    for (std::size_t j = 0; j < tops.size(); ++j) {
      if ((s >> j) & 1) chain |= Mask{1} << tops[j];
    }
    out.insert(boundary(k, n, chain));
  }
  return out;
}

inline Mask all_tops(const kbound::Complex& k) {
  const auto m = k.size(k.top_dim());
  return m == 64 ? ~Mask{0} : (Mask{1} << m) - 1;
}

inline bool bounds(const kbound::Complex& k, Mask cycle, Mask allowed) {
  return reachable_boundaries(k, allowed).contains(cycle);
}

// Every top simplex goes to one of `count` chains or to none; checks all
// (count+1)^m assignments.
inline bool disjoint_chains(const kbound::Complex& k,
                            const std::vector<kbound::Chain>& cycles,
                            std::size_t count) {
  const int n = k.top_dim();
  const std::size_t m = k.size(n);
  std::set<Mask> targets;
  for (const auto& c : cycles) targets.insert(to_mask(c));
  if (count == 0) return true;
  std::vector<std::size_t> slot(m, 0);
  while (true) {
    std::vector<Mask> chains(count, 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (slot[i] > 0) chains[slot[i] - 1] |= Mask{1} << i;
    }
    bool ok = true;
    for (auto c : chains) {
      if (!targets.contains(boundary(k, n, c))) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
    std::size_t i = 0;
    while (i < m && slot[i] == count) slot[i++] = 0;
    if (i == m) return false;
    ++slot[i];
  }
}

// After deleting any count-1 top simplices some list entry still bounds.
inline bool robust_under_deletion(const kbound::Complex& k,
                                  const std::vector<kbound::Chain>& cycles,
                                  std::size_t count) {
  const std::size_t m = k.size(k.top_dim());
  const Mask everything = all_tops(k);
  for (Mask removed = 0; removed <= everything; ++removed) {
    if (static_cast<std::size_t>(__builtin_popcountll(removed)) !=
        std::min(count - 1, m)) {
      if (removed == everything) break;
      continue;
    }
    const auto reach = reachable_boundaries(k, everything & ~removed);
    bool some = false;
    for (const auto& c : cycles) some = some || reach.contains(to_mask(c));
    if (!some) return false;
    if (removed == everything) break;
  }
  return true;
}

// Rank over F2 by counting the distinct sums of all subsets of the vectors.
inline std::size_t rank(const std::vector<Mask>& vectors) {
  std::set<Mask> span{0};
  for (auto v : vectors) {
    std::set<Mask> next = span;
    for (auto s : span) next.insert(s ^ v);
    span = std::move(next);
  }
  std::size_t r = 0;
  while ((std::size_t{1} << r) < span.size()) ++r;
  return r;
}

}  // namespace oracle
