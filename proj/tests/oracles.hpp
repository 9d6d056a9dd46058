#pragma once

// Independent reference computations used only by tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "lindeg/quiver.hpp"

namespace oracle {

/// [m choose k]_q by the q-Pascal recursion.
inline std::uint64_t gaussian(int m, int k, std::uint64_t q) {
  if (k < 0 || k > m) return 0;
  if (k == 0 || k == m) return 1;
  std::uint64_t qk = 1;
  for (int i = 0; i < k; ++i) qk *= q;
  return gaussian(m - 1, k - 1, q) + qk * gaussian(m - 1, k, q);
}

inline std::uint64_t binomial(int m, int k) {
  if (k < 0 || k > m) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(m - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// Directed path search in the Auslander-Reiten quiver of A_n, whose vertices
/// are intervals (i,j) and arrows (i,j) -> (i-1,j), (i,j) -> (i,j-1).
inline bool ar_path(lindeg::Interval from, lindeg::Interval to) {
  std::set<lindeg::Interval> seen;
  std::vector<lindeg::Interval> stack = {from};
  while (!stack.empty()) {
    const lindeg::Interval x = stack.back();
    stack.pop_back();
    if (x == to) return true;
    if (!seen.insert(x).second) continue;
    if (x.a > 1) stack.push_back({x.a - 1, x.b});
    if (x.b > x.a) stack.push_back({x.a, x.b - 1});
  }
  return false;
}

/// Catenoid by path search: all distinct summands on one oriented AR path,
/// i.e. pairwise joined by a path in one direction or the other.
inline bool catenoid_by_paths(const lindeg::Decomposition& dec) {
  std::vector<lindeg::Interval> ivs;
  for (const auto& [iv, k] : dec.summands()) ivs.push_back(iv);
  for (std::size_t i = 0; i < ivs.size(); ++i)
    for (std::size_t j = i + 1; j < ivs.size(); ++j)
      if (!ar_path(ivs[i], ivs[j]) && !ar_path(ivs[j], ivs[i])) return false;
  return true;
}

/// Every decomposition on A_n with the given vertex dimensions.
inline std::vector<lindeg::Decomposition> decompositions_with_dims(const std::vector<int>& dims) {
  const int n = static_cast<int>(dims.size());
  std::vector<lindeg::Interval> ivs;
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b) ivs.push_back({a, b});
  std::vector<lindeg::Decomposition> out;
  std::vector<int> room = dims;
  lindeg::Decomposition cur(n);
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == ivs.size()) {
      for (int r : room)
        if (r != 0) return;
      out.push_back(cur);
      return;
    }
    const lindeg::Interval iv = ivs[idx];
    int cap = 1 << 20;
    for (int v = iv.a; v <= iv.b; ++v) cap = std::min(cap, room[static_cast<std::size_t>(v - 1)]);
    for (int k = 0; k <= cap; ++k) {
      const lindeg::Decomposition saved = cur;
      cur.add(iv, k);
      for (int v = iv.a; v <= iv.b; ++v) room[static_cast<std::size_t>(v - 1)] -= k;
      rec(idx + 1);
      for (int v = iv.a; v <= iv.b; ++v) room[static_cast<std::size_t>(v - 1)] += k;
      cur = saved;
    }
  };
  rec(0);
  return out;
}

}  // namespace oracle
