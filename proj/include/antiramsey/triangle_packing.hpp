#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "antiramsey/errors.hpp"
#include "antiramsey/host_graph.hpp"

namespace antiramsey {

using Triangle = std::array<VertexRef, 3>;

/// Pairwise vertex-disjoint triangles, each meeting three distinct parts.
struct TrianglePacking {
  std::vector<Triangle> triangles;

  int size() const { return static_cast<int>(triangles.size()); }
};

/// Checks disjointness and the three-parts condition against a host.
inline bool is_valid_packing(const HostGraph &host, const TrianglePacking &packing) {
  std::vector<char> used(static_cast<std::size_t>(host.vertex_count()), 0);
  for (const auto &t : packing.triangles) {
    for (const auto &v : t) {
      if (!host.valid(v))
        return false;
      const VertexId id = host.id(v);
      if (used[id])
        return false;
      used[id] = 1;
    }
    if (t[0].part == t[1].part || t[0].part == t[2].part || t[1].part == t[2].part)
      return false;
  }
  return true;
}

/// Repeatedly takes the lowest unused vertex from each of the three parts
/// with the most unused vertices (ties to the lower part index) until fewer
/// than three parts have vertices left.
inline TrianglePacking greedy_triangle_packing(const PartSizes &parts) {
  const int r = parts.count();
  std::vector<int> left(parts.begin(), parts.end());
  std::vector<int> next(static_cast<std::size_t>(r), 0);
  TrianglePacking out;
  for (;;) {
    std::array<int, 3> pick{-1, -1, -1};
    for (int p = 0; p < r; ++p) {
      if (left[p] == 0)
        continue;
      for (int slot = 0; slot < 3; ++slot) {
        if (pick[slot] < 0 || left[p] > left[pick[slot]]) {
          for (int k = 2; k > slot; --k)
            pick[k] = pick[k - 1];
          pick[slot] = p;
          break;
        }
      }
    }
    if (pick[2] < 0)
      break;
    std::sort(pick.begin(), pick.end());
    Triangle t;
    for (int k = 0; k < 3; ++k) {
      t[k] = {pick[k], next[pick[k]]++};
      --left[pick[k]];
    }
    out.triangles.push_back(t);
  }
  return out;
}

} // namespace antiramsey
