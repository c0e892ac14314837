#pragma once

#include <cstdint>
#include <vector>

#include "kset/graph.hpp"

namespace kset {

/// Calls f on every r-subset of s in lexicographic order. Stops early and
/// returns false as soon as f returns false.
template <typename F>
bool for_each_subset(const VertexSet& s, int r, F&& f) {
  const int n = static_cast<int>(s.size());
  if (r < 0 || r > n) return true;
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[i] = i;
  VertexSet cur(static_cast<std::size_t>(r));
  while (true) {
    for (int i = 0; i < r; ++i) cur[i] = s[idx[i]];
    if (!f(static_cast<const VertexSet&>(cur))) return false;
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// All r-subsets of s in lexicographic order.
inline std::vector<VertexSet> subsets_of_size(const VertexSet& s, int r) {
  std::vector<VertexSet> out;
  for_each_subset(s, r, [&](const VertexSet& x) {
    out.push_back(x);
    return true;
  });
  return out;
}

inline double binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  double out = 1;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

inline std::uint64_t to_mask(const VertexSet& s) {
  std::uint64_t m = 0;
  for (Vertex v : s) m |= std::uint64_t{1} << v;
  return m;
}

inline VertexSet from_mask(std::uint64_t m) {
  VertexSet out;
  for (int v = 0; m; ++v, m >>= 1)
    if (m & 1) out.push_back(v);
  return out;
}

}  // namespace kset
