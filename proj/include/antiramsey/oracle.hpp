#pragma once

// Exhaustive verifiers. None of these consult the closed forms; they exist to
// check them.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "antiramsey/coloring.hpp"
#include "antiramsey/errors.hpp"
#include "antiramsey/family.hpp"
#include "antiramsey/formulas.hpp"
#include "antiramsey/host_graph.hpp"
#include "antiramsey/rainbow_search.hpp"
#include "antiramsey/triangle_packing.hpp"

namespace antiramsey {

inline constexpr int default_max_edges = 13;
inline constexpr int default_max_vertices = 15;

namespace detail {

inline void require_edge_cap(const HostGraph &host, int max_edges) {
  if (host.edge_count() > max_edges)
    throw CapExceeded("host " + host.parts().to_string() + " has " +
                      std::to_string(host.edge_count()) + " edges; exhaustive cap is " +
                      std::to_string(max_edges));
}

/// Restricted growth strings of length m with exactly k distinct values.
/// `accept(prefix_len, colors)` runs after each assignment and may prune;
/// `visit(colors)` runs on complete strings and returns true to stop.
template <typename Accept, typename Visit>
bool restricted_growth(int m, int k, Accept &&accept, Visit &&visit) {
  if (k < 1 || k > m)
    return false;
  std::vector<ColorId> a(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto &self, int pos, int blocks) -> bool {
    if (pos == m)
      return blocks == k && visit(std::span<const ColorId>(a));
    const int left_after = m - pos - 1;
    const int top = std::min(blocks, k - 1); // blocks == k-1 allows opening the last block
    for (int c = 0; c <= top; ++c) {
      const int nb = c == blocks ? blocks + 1 : blocks;
      if (k - nb > left_after)
        continue;
      a[pos] = c;
      if (!accept(pos + 1, std::span<const ColorId>(a.data(), static_cast<std::size_t>(pos + 1))))
        continue;
      if (self(self, pos + 1, nb))
        return true;
    }
    return false;
  };
  a[0] = 0;
  if (!accept(1, std::span<const ColorId>(a.data(), 1)))
    return false;
  return rec(rec, 1, 1);
}

} // namespace detail

/// Visits every partition of the host's edges into exactly k non-empty
/// classes once, as dense color vectors in restricted-growth order.
/// `visit` returns true to stop early.
template <typename Visit>
void for_each_surjective_coloring(const HostGraph &host, int k, Visit &&visit,
                                  int max_edges = default_max_edges) {
  detail::require_edge_cap(host, max_edges);
  if (k < 1 || k > host.edge_count())
    throw InvalidInput("color count must lie in [1, |E|]");
  detail::restricted_growth(
      host.edge_count(), k, [](int, std::span<const ColorId>) { return true; },
      [&](std::span<const ColorId> colors) { return visit(colors); });
}

/// Same enumeration, materialised as EdgeColoring values.
template <typename Visit>
void enumerate_surjective_colorings(const HostPtr &host, int k, Visit &&visit,
                                    int max_edges = default_max_edges) {
  for_each_surjective_coloring(
      *host, k,
      [&](std::span<const ColorId> colors) {
        return visit(EdgeColoring(host, std::vector<ColorId>(colors.begin(), colors.end())));
      },
      max_edges);
}

/// Statistics from the downward search in exact_ar. `refuted` counts, for
/// every k above the answer, that the k-colorings were exhausted without a
/// rainbow-free one.
struct ExactSearchLog {
  std::vector<int> refuted;
};

/// Exact ar(host, family) by exhaustive enumeration. k runs down from |E|;
/// the first k with a coloring free of rainbow family members is the answer.
/// Colorings are pruned as soon as an assigned prefix completes a rainbow
/// copy; every pruned extension contains that copy too.
inline ArResult exact_ar(const HostPtr &host, const CycleFamily &family,
                         int max_edges = default_max_edges, ExactSearchLog *log = nullptr) {
  detail::require_edge_cap(*host, max_edges);
  const int m = host->edge_count();

  // Copies grouped by their largest edge id: a copy's colors are all known
  // exactly when that edge is assigned.
  std::vector<std::vector<std::vector<EdgeId>>> ending_at(static_cast<std::size_t>(m));
  for (int len : family.lengths)
    for (auto &copy : cycle_copies(*host, len)) {
      const EdgeId last = *std::max_element(copy.begin(), copy.end());
      ending_at[last].push_back(std::move(copy));
    }

  ArResult result;
  result.method = ArResult::Method::exhaustive;
  if (m == 0)
    return result;

  for (int k = m; k >= 1; --k) {
    std::optional<std::vector<ColorId>> found;
    detail::restricted_growth(
        m, k,
        [&](int len, std::span<const ColorId> colors) {
          for (const auto &copy : ending_at[len - 1]) {
            bool rainbow = true;
            for (std::size_t i = 0; i < copy.size() && rainbow; ++i)
              for (std::size_t j = i + 1; j < copy.size(); ++j)
                if (colors[copy[i]] == colors[copy[j]]) {
                  rainbow = false;
                  break;
                }
            if (rainbow)
              return false;
          }
          return true;
        },
        [&](std::span<const ColorId> colors) {
          found.emplace(colors.begin(), colors.end());
          return true;
        });
    if (found) {
      result.value = k;
      result.witness.emplace(host, std::move(*found));
      return result;
    }
    if (log)
      log->refuted.push_back(k);
  }
  throw InvariantFailure("no coloring with one color avoids the family; cycles need >= 3 edges");
}

/// A maximum packing found by backtracking. Vertices inside a part are
/// interchangeable, so the search runs over multisets of part triples and
/// fills each triple with the lowest unused offsets.
inline TrianglePacking brute_max_packing(const HostGraph &host,
                                         int max_vertices = default_max_vertices) {
  if (host.vertex_count() > max_vertices)
    throw CapExceeded("host " + host.parts().to_string() + " has " +
                      std::to_string(host.vertex_count()) + " vertices; packing cap is " +
                      std::to_string(max_vertices));
  const int r = host.part_count();
  std::vector<std::array<int, 3>> triples;
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b)
      for (int c = b + 1; c < r; ++c)
        triples.push_back({a, b, c});

  std::vector<int> left(host.parts().begin(), host.parts().end());
  int remaining = host.vertex_count();
  std::vector<int> chosen, best;
  auto rec = [&](auto &self, std::size_t from) -> void {
    if (chosen.size() > best.size())
      best = chosen;
    if (static_cast<int>(chosen.size()) + remaining / 3 <= static_cast<int>(best.size()))
      return;
    for (std::size_t i = from; i < triples.size(); ++i) {
      const auto &t = triples[i];
      if (!left[t[0]] || !left[t[1]] || !left[t[2]])
        continue;
      for (int p : t)
        --left[p];
      remaining -= 3;
      chosen.push_back(static_cast<int>(i));
      self(self, i);
      chosen.pop_back();
      remaining += 3;
      for (int p : t)
        ++left[p];
    }
  };
  rec(rec, 0);

  TrianglePacking out;
  std::vector<int> next(static_cast<std::size_t>(r), 0);
  for (int i : best) {
    Triangle tri;
    for (int k = 0; k < 3; ++k) {
      const int p = triples[static_cast<std::size_t>(i)][k];
      tri[k] = {p, next[p]++};
    }
    out.triangles.push_back(tri);
  }
  return out;
}

inline int brute_triangle_packing(const HostGraph &host,
                                  int max_vertices = default_max_vertices) {
  return brute_max_packing(host, max_vertices).size();
}

/// Largest subgraph avoiding the configuration, by depth-first inclusion /
/// exclusion over edges with a best-so-far bound. Both configurations are
/// closed under edge deletion, so a rejected edge never has to be revisited.
///
/// Symmetry: relabelling vertices within a part is an automorphism, so only
/// graphs whose degrees are non-increasing along each part's offsets are
/// explored. The check for a pair of vertices fires once every edge at both
/// of them has been decided.
inline int brute_extremal_edges(const HostGraph &host, Forbidden forbidden,
                                int max_edges = default_max_edges,
                                std::vector<EdgeId> *best_edges = nullptr) {
  detail::require_edge_cap(host, max_edges);
  const int n = host.vertex_count();
  const int m = host.edge_count();

  std::vector<EdgeId> last_edge(static_cast<std::size_t>(n), -1);
  for (EdgeId e = 0; e < m; ++e) {
    const auto [u, v] = host.endpoints(e);
    last_edge[u] = std::max(last_edge[u], e);
    last_edge[v] = std::max(last_edge[v], e);
  }
  std::vector<std::vector<std::pair<VertexId, VertexId>>> order_checks(static_cast<std::size_t>(m));
  for (VertexId v = 0; v + 1 < n; ++v)
    if (host.part_of(v) == host.part_of(v + 1))
      order_checks[std::max(last_edge[v], last_edge[v + 1])].emplace_back(v, v + 1);

  std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n));
  std::vector<EdgeId> current, best;
  bool have_best = false;

  auto creates_p3 = [&](VertexId u, VertexId v) {
    for (VertexId w : adj[u])
      if (host.part_of(w) != host.part_of(v))
        return true;
    for (VertexId w : adj[v])
      if (host.part_of(w) != host.part_of(u))
        return true;
    return false;
  };

  // Is there a simple u-v path in the current graph through a third part?
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  auto creates_cycle = [&](VertexId u, VertexId v) {
    const int pu = host.part_of(u), pv = host.part_of(v);
    auto rec = [&](auto &self, VertexId x, bool third) -> bool {
      if (x == v)
        return third;
      on_path[x] = 1;
      for (VertexId y : adj[x]) {
        if (on_path[y])
          continue;
        const bool t = third || (host.part_of(y) != pu && host.part_of(y) != pv);
        if (self(self, y, t)) {
          on_path[x] = 0;
          return true;
        }
      }
      on_path[x] = 0;
      return false;
    };
    return rec(rec, u, false);
  };

  auto degrees_ordered = [&](EdgeId e) {
    for (const auto &[a, b] : order_checks[e])
      if (adj[a].size() < adj[b].size())
        return false;
    return true;
  };

  auto rec = [&](auto &self, EdgeId e) -> void {
    if (!have_best || current.size() > best.size()) {
      // Only complete assignments are certain to satisfy the ordering; a
      // partial one is still a valid forbidden-free subgraph, so keep it.
      best = current;
      have_best = true;
    }
    if (e == m)
      return;
    if (static_cast<int>(current.size()) + (m - e) <= static_cast<int>(best.size()))
      return;
    const auto [u, v] = host.endpoints(e);
    const bool allowed =
        forbidden == Forbidden::multipartite_p3 ? !creates_p3(u, v) : !creates_cycle(u, v);
    if (allowed) {
      adj[u].push_back(v);
      adj[v].push_back(u);
      current.push_back(e);
      if (degrees_ordered(e))
        self(self, e + 1);
      current.pop_back();
      adj[u].pop_back();
      adj[v].pop_back();
    }
    if (degrees_ordered(e))
      self(self, e + 1);
  };
  rec(rec, 0);
  if (best_edges)
    *best_edges = best;
  return static_cast<int>(best.size());
}

} // namespace antiramsey
