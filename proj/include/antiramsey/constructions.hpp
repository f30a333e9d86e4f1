#pragma once

// Extremal colorings: the largest colorings of K_{n_1,...,n_r} with no
// rainbow {C3, C4}, no rainbow C3, and no rainbow C4 respectively.

#include <string>
#include <vector>

#include "antiramsey/coloring.hpp"
#include "antiramsey/errors.hpp"
#include "antiramsey/formulas.hpp"
#include "antiramsey/host_graph.hpp"
#include "antiramsey/oracle.hpp"
#include "antiramsey/triangle_packing.hpp"

namespace antiramsey {

namespace detail {

inline void require_three_parts(const PartSizes &parts, const char *what) {
  if (parts.count() < 3)
    throw InvalidInput(std::string(what) + " needs at least 3 parts, got " +
                       std::to_string(parts.count()));
}

/// Dense color assignment helper; every edge must be colored before finish().
class ColorAssigner {
public:
  explicit ColorAssigner(HostPtr host)
      : host_(std::move(host)), color_(static_cast<std::size_t>(host_->edge_count()), -1) {}

  /// Opens a fresh color and returns its id.
  ColorId fresh() { return next_++; }

  /// Paints every still-unpainted edge matching pred with one fresh color.
  template <typename Pred> void paint_all(Pred &&pred) {
    ColorId c = -1;
    for (EdgeId e = 0; e < host_->edge_count(); ++e) {
      const auto [u, v] = host_->endpoints(e);
      if (color_[e] < 0 && pred(u, v)) {
        if (c < 0)
          c = fresh();
        color_[e] = c;
      }
    }
    if (c < 0)
      throw InvariantFailure("a bulk color class came out empty");
  }

  /// Gives each unpainted edge matching pred its own fresh color, in edge order.
  template <typename Pred> void paint_rainbow(Pred &&pred) {
    for (EdgeId e = 0; e < host_->edge_count(); ++e) {
      const auto [u, v] = host_->endpoints(e);
      if (color_[e] < 0 && pred(u, v))
        color_[e] = fresh();
    }
  }

  EdgeColoring finish(Count expected) && {
    for (ColorId c : color_)
      if (c < 0)
        throw InvariantFailure("construction left an edge uncolored");
    if (next_ != expected)
      throw InvariantFailure("construction used " + std::to_string(next_) +
                             " colors, expected " + std::to_string(expected));
    return EdgeColoring(std::move(host_), std::move(color_));
  }

private:
  HostPtr host_;
  std::vector<ColorId> color_;
  ColorId next_ = 0;
};

} // namespace detail

/// The vertex order u_1..u_n used by construct_c3c4_free: offset 0 of every
/// part first, then the remaining vertices part by part.
inline std::vector<VertexId> c3c4_vertex_order(const HostGraph &host) {
  std::vector<VertexId> order;
  for (int p = 0; p < host.part_count(); ++p)
    order.push_back(host.part_begin(p));
  for (int p = 0; p < host.part_count(); ++p)
    for (VertexId v = host.part_begin(p) + 1; v < host.part_begin(p + 1); ++v)
      order.push_back(v);
  return order;
}

/// n - 1 colors, no rainbow C3 or C4: every edge from u_{i+1} back to
/// u_1..u_i gets color i.
inline EdgeColoring construct_c3c4_free(const PartSizes &parts) {
  detail::require_three_parts(parts, "construct_c3c4_free");
  auto host = make_host(parts);
  const auto order = c3c4_vertex_order(*host);
  std::vector<int> position(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    position[order[i]] = static_cast<int>(i);

  std::vector<ColorId> colors(static_cast<std::size_t>(host->edge_count()));
  for (EdgeId e = 0; e < host->edge_count(); ++e) {
    const auto [u, v] = host->endpoints(e);
    colors[e] = std::max(position[u], position[v]) - 1;
  }
  EdgeColoring out(host, std::move(colors));
  if (out.color_count() != ar_rpartite_c3c4(parts))
    throw InvariantFailure("c3c4 construction color count mismatch");
  return out;
}

/// ar(K, C3) colors, no rainbow C3. Parts are paired (V1,V2), (V3,V4), ...
/// and each pair's bipartite graph is colored rainbow. Each later block of
/// parts is joined to an earlier pair with one bulk color per pair. For odd
/// r the unpaired last part gets one color per vertex.
inline EdgeColoring construct_c3_free(const PartSizes &parts) {
  detail::require_three_parts(parts, "construct_c3_free");
  auto host = make_host(parts);
  const int r = parts.count();
  const int paired = r % 2 == 1 ? r - 1 : r; // parts [0, paired) are paired up
  const auto &h = *host;
  auto pair_of = [&](VertexId v) { return h.part_of(v) / 2; };

  detail::ColorAssigner paint(host);
  for (int b = 0; b < paired / 2; ++b)
    paint.paint_rainbow(
        [&](VertexId u, VertexId v) { return h.part_of(u) < paired && pair_of(u) == b && pair_of(v) == b; });
  if (r % 2 == 1) {
    for (VertexId x = h.part_begin(r - 1); x < h.part_begin(r); ++x)
      paint.paint_all([&](VertexId u, VertexId v) { return u == x || v == x; });
  }
  for (int b = 0; b + 1 < paired / 2; ++b)
    paint.paint_all([&](VertexId u, VertexId v) {
      const int pu = pair_of(u), pv = pair_of(v);
      return h.part_of(v) < paired && h.part_of(u) < paired &&
             ((pu == b && pv > b) || (pv == b && pu > b));
    });
  return std::move(paint).finish(ar_rpartite_c3(parts));
}

struct C4FreeConstruction {
  EdgeColoring coloring;
  TrianglePacking packing;
  /// Set when the greedy packing fell short and the exhaustive one was used.
  bool used_fallback = false;
};

/// ar(K, C4) = n + t - 1 colors, no rainbow C4. Over a maximum packing
/// T_1..T_t: each triangle rainbow; one color for all edges from T_i back to
/// T_1..T_{i-1}; then each leftover vertex, in id order, gets one color for
/// all its edges back to everything placed before it.
inline C4FreeConstruction construct_c4_free_detailed(const PartSizes &parts) {
  detail::require_three_parts(parts, "construct_c4_free");
  auto host = make_host(parts);
  const auto &h = *host;

  TrianglePacking packing = greedy_triangle_packing(parts);
  bool used_fallback = false;
  if (packing.size() != max_independent_triangles(parts)) {
    packing = brute_max_packing(h, h.vertex_count());
    used_fallback = true;
    if (packing.size() != max_independent_triangles(parts))
      throw InvariantFailure("no packing reaches the triangle packing number");
  }

  // stage[v]: 1-based triangle index, or t + 1 + rank for leftovers.
  const int t = packing.size();
  std::vector<int> stage(static_cast<std::size_t>(h.vertex_count()), 0);
  for (int i = 0; i < t; ++i)
    for (const auto &v : packing.triangles[i])
      stage[h.id(v)] = i + 1;
  int rank = 0;
  for (VertexId v = 0; v < h.vertex_count(); ++v)
    if (stage[v] == 0)
      stage[v] = t + 1 + rank++;

  detail::ColorAssigner paint(host);
  for (int i = 1; i <= t; ++i)
    paint.paint_rainbow([&](VertexId u, VertexId v) { return stage[u] == i && stage[v] == i; });
  for (int i = 2; i <= t; ++i)
    paint.paint_all([&](VertexId u, VertexId v) {
      return (stage[u] == i && stage[v] < i) || (stage[v] == i && stage[u] < i);
    });
  for (int s = t + 1; s <= t + rank; ++s)
    paint.paint_all([&](VertexId u, VertexId v) { return std::max(stage[u], stage[v]) == s; });
  return {std::move(paint).finish(ar_rpartite_c4(parts)), std::move(packing), used_fallback};
}

inline EdgeColoring construct_c4_free(const PartSizes &parts) {
  return construct_c4_free_detailed(parts).coloring;
}

} // namespace antiramsey
