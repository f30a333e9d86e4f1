#pragma once

// Test-only oracles. These deliberately avoid the library's cycle walker and
// search code so they can check it.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "antiramsey/antiramsey.hpp"

namespace antiramsey::testing {

/// Every simple cycle of the given length as a sorted edge-id set, found by
/// trying all ordered vertex tuples.
inline std::set<std::vector<EdgeId>> brute_cycles(const HostGraph &host, int length) {
  std::set<std::vector<EdgeId>> out;
  const int n = host.vertex_count();
  if (length > n)
    return out;
  std::vector<int> seq(static_cast<std::size_t>(length), 0);
  auto rec = [&](auto &self, int pos) -> void {
    if (pos == length) {
      std::vector<EdgeId> edges;
      for (int i = 0; i < length; ++i) {
        const EdgeId e = host.edge_at(seq[i], seq[(i + 1) % length]);
        if (e < 0)
          return;
        edges.push_back(e);
      }
      std::sort(edges.begin(), edges.end());
      out.insert(edges);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (std::find(seq.begin(), seq.begin() + pos, v) != seq.begin() + pos)
        continue;
      seq[pos] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

/// True iff the edge list is one simple cycle: every touched vertex has
/// degree exactly two and the edges are connected.
inline bool is_simple_cycle(const HostGraph &host, const std::vector<EdgeId> &edges) {
  if (edges.size() < 3)
    return false;
  std::set<EdgeId> unique(edges.begin(), edges.end());
  if (unique.size() != edges.size())
    return false;
  std::map<VertexId, std::vector<VertexId>> adj;
  for (EdgeId e : edges) {
    const auto [u, v] = host.endpoints(e);
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (const auto &[v, ns] : adj)
    if (ns.size() != 2)
      return false;
  std::set<VertexId> seen;
  std::vector<VertexId> stack{adj.begin()->first};
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (!seen.insert(v).second)
      continue;
    for (VertexId w : adj[v])
      stack.push_back(w);
  }
  return seen.size() == adj.size();
}

/// Checks a witness's walk against its edges and that it is a simple cycle.
inline bool is_valid_cycle_witness(const HostGraph &host, const SubgraphWitness &w) {
  if (w.vertices.size() != w.edges.size() || w.vertices.size() < 3)
    return false;
  for (std::size_t i = 0; i < w.vertices.size(); ++i)
    if (host.edge_at(w.vertices[i], w.vertices[(i + 1) % w.vertices.size()]) != w.edges[i])
      return false;
  return is_simple_cycle(host, w.edges);
}

inline bool brute_rainbow(const EdgeColoring &c, const std::vector<EdgeId> &edges) {
  std::set<ColorId> colors;
  for (EdgeId e : edges)
    colors.insert(c.color(e));
  return colors.size() == edges.size();
}

/// Number of rainbow copies of C_length, by brute enumeration.
inline int count_rainbow_cycles(const EdgeColoring &c, int length) {
  int count = 0;
  for (const auto &cyc : brute_cycles(c.host(), length))
    count += brute_rainbow(c, cyc) ? 1 : 0;
  return count;
}

/// The classic coloring of K_n: edge v_i v_j (i < j) gets color i.
inline EdgeColoring classic_complete_coloring(int n) {
  auto host = make_host(PartSizes(std::vector<int>(static_cast<std::size_t>(n), 1)));
  std::vector<ColorId> colors;
  for (EdgeId e = 0; e < host->edge_count(); ++e)
    colors.push_back(std::min(host->endpoints(e).first, host->endpoints(e).second));
  return EdgeColoring(host, std::move(colors));
}

inline EdgeColoring all_distinct(const HostPtr &host) {
  std::vector<ColorId> colors(static_cast<std::size_t>(host->edge_count()));
  for (std::size_t i = 0; i < colors.size(); ++i)
    colors[i] = static_cast<ColorId>(i);
  return EdgeColoring(host, std::move(colors));
}

/// Edge partition as a set of edge sets, independent of color ids.
inline std::set<std::set<EdgeId>> partition_of(const EdgeColoring &c) {
  std::set<std::set<EdgeId>> out;
  for (const auto &cls : c.classes())
    out.emplace(cls.begin(), cls.end());
  return out;
}

/// Stirling numbers of the second kind by the standard recurrence.
inline long long stirling2(int n, int k) {
  std::vector<std::vector<long long>> s(static_cast<std::size_t>(n) + 1,
                                        std::vector<long long>(static_cast<std::size_t>(k) + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= std::min(i, k); ++j)
      s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  return s[n][k];
}

} // namespace antiramsey::testing
