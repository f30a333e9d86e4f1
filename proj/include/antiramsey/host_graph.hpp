#pragma once

// Complete multipartite host graphs K_{n_1,...,n_r}.
//
// Vertices are numbered globally in (part, offset) order, so vertex 0 is
// "0:0", vertex n_1 is "1:0", and so on. Edges are the cross-part pairs
// (u, v) with u < v, numbered lexicographically. Both numberings are part of
// the file formats and must stay stable.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "antiramsey/errors.hpp"

namespace antiramsey {

using VertexId = int;
using EdgeId = int;
using ColorId = int;

/// Part sizes n_1 >= n_2 >= ... >= n_r >= 1.
class PartSizes {
public:
  PartSizes() = default;

  /// Validating constructor; rejects empty, zero-sized or unsorted lists.
  explicit PartSizes(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty())
      throw InvalidInput("part list is empty");
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
      if (sizes_[i] < 1)
        throw InvalidInput("part " + std::to_string(i) + " has size " +
                           std::to_string(sizes_[i]) + "; sizes must be >= 1");
      if (i > 0 && sizes_[i] > sizes_[i - 1])
        throw InvalidInput("part sizes must be non-increasing: " + render(sizes_));
    }
  }

  PartSizes(std::initializer_list<int> sizes) : PartSizes(std::vector<int>(sizes)) {}

  /// Sorts descending first, then validates.
  static PartSizes sorted(std::vector<int> sizes) {
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return PartSizes(std::move(sizes));
  }

  /// Parses "2,2,1". Whitespace around entries is ignored.
  static PartSizes parse(std::string_view text) {
    std::vector<int> sizes;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto comma = text.find(',', pos);
      auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                    : comma - pos);
      while (!token.empty() && token.front() == ' ')
        token.remove_prefix(1);
      while (!token.empty() && token.back() == ' ')
        token.remove_suffix(1);
      if (token.empty() || token.size() > 9 ||
          !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw InvalidInput("malformed part list '" + std::string(text) + "'");
      sizes.push_back(std::stoi(std::string(token)));
      if (comma == std::string_view::npos)
        break;
      pos = comma + 1;
    }
    return PartSizes(std::move(sizes));
  }

  int count() const { return static_cast<int>(sizes_.size()); }
  int operator[](int i) const { return sizes_[static_cast<std::size_t>(i)]; }
  int total() const { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }
  const std::vector<int> &values() const { return sizes_; }
  auto begin() const { return sizes_.begin(); }
  auto end() const { return sizes_.end(); }

  /// Number of cross-part pairs, sum_{i<j} n_i n_j.
  std::int64_t edge_count() const {
    std::int64_t total = 0, before = 0;
    for (int n : sizes_) {
      total += before * n;
      before += n;
    }
    return total;
  }

  std::string to_string() const { return render(sizes_); }

  friend bool operator==(const PartSizes &, const PartSizes &) = default;

private:
  static std::string render(const std::vector<int> &sizes) {
    std::string out;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      if (i)
        out += ',';
      out += std::to_string(sizes[i]);
    }
    return out;
  }

  std::vector<int> sizes_;
};

struct VertexRef {
  int part = 0;
  int offset = 0;
  friend auto operator<=>(const VertexRef &, const VertexRef &) = default;
};

inline std::string to_string(VertexRef v) {
  return std::to_string(v.part) + ":" + std::to_string(v.offset);
}

/// Parses "p:i" (no validation against a host).
inline VertexRef parse_vertex(std::string_view text) {
  const auto colon = text.find(':');
  auto number = [&](std::string_view s) {
    if (s.empty() || s.size() > 9 ||
        !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw InvalidInput("malformed vertex name '" + std::string(text) + "'");
    return std::stoi(std::string(s));
  };
  if (colon == std::string_view::npos)
    throw InvalidInput("malformed vertex name '" + std::string(text) + "'");
  return {number(text.substr(0, colon)), number(text.substr(colon + 1))};
}

/// Unordered pair of vertices, stored smaller-first.
struct Edge {
  VertexRef a;
  VertexRef b;

  Edge(VertexRef x, VertexRef y) : a(std::min(x, y)), b(std::max(x, y)) {}
  friend auto operator<=>(const Edge &, const Edge &) = default;
};

class HostGraph;

/// An ordered edge list certifying a cycle, path or triangle. For cycles
/// and paths `vertices` is the walk (a cycle does not repeat its start);
/// edges[i] joins vertices[i] and vertices[i + 1] (cyclically for cycles).
struct SubgraphWitness {
  enum class Kind { cycle, path, triangle, generic };

  Kind kind = Kind::generic;
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
  friend bool operator==(const SubgraphWitness &, const SubgraphWitness &) = default;
};

inline std::string_view to_string(SubgraphWitness::Kind kind) {
  switch (kind) {
  case SubgraphWitness::Kind::cycle:
    return "cycle";
  case SubgraphWitness::Kind::path:
    return "path";
  case SubgraphWitness::Kind::triangle:
    return "triangle";
  case SubgraphWitness::Kind::generic:
    break;
  }
  return "generic";
}

/// Immutable complete multipartite graph with dense vertex and edge ids.
class HostGraph {
public:
  explicit HostGraph(PartSizes parts) : parts_(std::move(parts)) {
    const int r = parts_.count();
    part_start_.resize(static_cast<std::size_t>(r) + 1, 0);
    for (int p = 0; p < r; ++p)
      part_start_[p + 1] = part_start_[p] + parts_[p];
    const int n = part_start_[r];
    part_of_.resize(static_cast<std::size_t>(n));
    for (int p = 0; p < r; ++p)
      std::fill(part_of_.begin() + part_start_[p], part_of_.begin() + part_start_[p + 1], p);

    edge_at_.assign(static_cast<std::size_t>(n) * n, -1);
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (part_of_[u] != part_of_[v]) {
          const auto id = static_cast<EdgeId>(endpoints_.size());
          endpoints_.emplace_back(u, v);
          edge_at_[static_cast<std::size_t>(u) * n + v] = id;
          edge_at_[static_cast<std::size_t>(v) * n + u] = id;
        }
  }

  const PartSizes &parts() const { return parts_; }
  int part_count() const { return parts_.count(); }
  int vertex_count() const { return static_cast<int>(part_of_.size()); }
  int edge_count() const { return static_cast<int>(endpoints_.size()); }

  int part_of(VertexId v) const { return part_of_[v]; }
  VertexRef ref(VertexId v) const { return {part_of_[v], v - part_start_[part_of_[v]]}; }
  VertexId id(VertexRef v) const {
    if (!valid(v))
      throw InvalidInput("vertex " + to_string(v) + " is not in host " + parts_.to_string());
    return part_start_[v.part] + v.offset;
  }
  bool valid(VertexRef v) const {
    return v.part >= 0 && v.part < part_count() && v.offset >= 0 && v.offset < parts_[v.part];
  }
  /// First global id of part p (p == r gives the vertex count).
  VertexId part_begin(int p) const { return part_start_[p]; }

  std::pair<VertexId, VertexId> endpoints(EdgeId e) const { return endpoints_[e]; }
  Edge edge(EdgeId e) const { return {ref(endpoints_[e].first), ref(endpoints_[e].second)}; }

  bool adjacent(VertexId u, VertexId v) const { return edge_at(u, v) >= 0; }
  /// Edge id joining u and v, or -1 when u and v share a part.
  EdgeId edge_at(VertexId u, VertexId v) const {
    return edge_at_[static_cast<std::size_t>(u) * vertex_count() + v];
  }
  EdgeId edge_id(const Edge &e) const {
    const EdgeId id = edge_at(this->id(e.a), this->id(e.b));
    if (id < 0)
      throw InvalidInput("no edge " + to_string(e.a) + "-" + to_string(e.b) +
                         " (endpoints share a part)");
    return id;
  }

  int degree(VertexId v) const { return vertex_count() - parts_[part_of_[v]]; }

private:
  PartSizes parts_;
  std::vector<int> part_start_;
  std::vector<int> part_of_;
  std::vector<std::pair<VertexId, VertexId>> endpoints_;
  std::vector<EdgeId> edge_at_;
};

inline HostGraph build_host(PartSizes parts) { return HostGraph(std::move(parts)); }

/// Every part-size vector with at least `min_parts` parts and total at most
/// `max_total`, ordered by total, then reverse-lexicographically.
inline std::vector<PartSizes> all_part_sizes(int max_total, int min_parts = 1) {
  std::vector<PartSizes> out;
  std::vector<int> cur;
  auto rec = [&](auto &self, int left, int cap) -> void {
    if (left == 0) {
      if (static_cast<int>(cur.size()) >= min_parts)
        out.emplace_back(cur);
      return;
    }
    for (int x = std::min(left, cap); x >= 1; --x) {
      cur.push_back(x);
      self(self, left - x, x);
      cur.pop_back();
    }
  };
  for (int total = 1; total <= max_total; ++total)
    rec(rec, total, total);
  return out;
}

/// True iff the vertices meet at least three distinct parts.
inline bool spans_three_parts(const HostGraph &host, std::span<const VertexId> vertices) {
  int seen[3];
  int distinct = 0;
  for (VertexId v : vertices) {
    const int p = host.part_of(v);
    if (std::find(seen, seen + distinct, p) == seen + distinct) {
      seen[distinct++] = p;
      if (distinct == 3)
        return true;
    }
  }
  return false;
}

inline bool spans_three_parts(const HostGraph &host, std::span<const VertexRef> vertices) {
  std::vector<VertexId> ids;
  ids.reserve(vertices.size());
  for (const auto &v : vertices)
    ids.push_back(host.id(v));
  return spans_three_parts(host, std::span<const VertexId>(ids));
}

/// Builds a cycle witness from a closed vertex walk, validating that it is a
/// simple cycle of the host. Length-3 cycles are tagged as triangles.
inline SubgraphWitness make_cycle(const HostGraph &host, std::vector<VertexId> walk) {
  const std::size_t len = walk.size();
  if (len < 3)
    throw ContractViolation("a cycle needs at least 3 vertices");
  auto sorted = walk;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ContractViolation("cycle walk repeats a vertex");
  SubgraphWitness w;
  w.kind = len == 3 ? SubgraphWitness::Kind::triangle : SubgraphWitness::Kind::cycle;
  w.edges.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    const EdgeId e = host.edge_at(walk[i], walk[(i + 1) % len]);
    if (e < 0)
      throw ContractViolation("cycle walk uses a non-edge");
    w.edges.push_back(e);
  }
  w.vertices = std::move(walk);
  return w;
}

/// Returns some simple cycle inside `edges`, or nothing if they form a forest.
/// Depth-first from the lowest vertex; the first back edge closes the cycle.
inline std::optional<SubgraphWitness> find_any_cycle(const HostGraph &host,
                                                     std::span<const EdgeId> edges) {
  const int n = host.vertex_count();
  std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n));
  for (EdgeId e : edges) {
    const auto [u, v] = host.endpoints(e);
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto &list : adj)
    std::sort(list.begin(), list.end());

  std::vector<VertexId> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> state(static_cast<std::size_t>(n), 0); // 0 new, 1 on stack, 2 done
  std::optional<SubgraphWitness> found;

  std::function<void(VertexId)> dfs = [&](VertexId u) {
    state[u] = 1;
    for (VertexId v : adj[u]) {
      if (found)
        return;
      if (v == parent[u])
        continue;
      if (state[v] == 1) {
        std::vector<VertexId> walk;
        for (VertexId x = u; x != v; x = parent[x])
          walk.push_back(x);
        walk.push_back(v);
        std::reverse(walk.begin(), walk.end());
        found = make_cycle(host, std::move(walk));
        return;
      }
      if (state[v] == 0) {
        parent[v] = u;
        dfs(v);
      }
    }
    state[u] = 2;
  };
  for (VertexId s = 0; s < n && !found; ++s)
    if (state[s] == 0 && !adj[s].empty())
      dfs(s);
  return found;
}

} // namespace antiramsey
