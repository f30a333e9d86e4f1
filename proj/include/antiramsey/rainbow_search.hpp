#pragma once

// Rainbow copy search and the two cycle-shortening procedures:
//  - chord splitting, which turns a rainbow cycle meeting three parts into a
//    rainbow triangle;
//  - even-cycle shortening, which turns a rainbow cycle living in two parts
//    into a rainbow C4.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "antiramsey/coloring.hpp"
#include "antiramsey/errors.hpp"
#include "antiramsey/host_graph.hpp"

namespace antiramsey {

/// What find_rainbow_copy looks for: a cycle of a given length, or any cycle
/// (of any length) whose vertices meet three parts.
struct RainbowTarget {
  enum class Kind { cycle, multipartite_cycle };
  Kind kind = Kind::cycle;
  int length = 3;

  static RainbowTarget cycle(int k) {
    if (k < 3)
      throw InvalidInput("cycle target needs length >= 3");
    return {Kind::cycle, k};
  }
  static RainbowTarget c3() { return cycle(3); }
  static RainbowTarget c4() { return cycle(4); }
  static RainbowTarget multipartite_cycle() { return {Kind::multipartite_cycle, 0}; }

  std::string name() const {
    return kind == Kind::cycle ? "c" + std::to_string(length) : std::string("multipartite-cycle");
  }
};

namespace detail {

/// Walks every simple cycle of the given length exactly once, in
/// lexicographic order of its canonical vertex sequence (smallest vertex
/// first, second vertex smaller than the last). `extend(walk, v)` may veto
/// appending v; `visit(walk)` returns true to stop. Returns true if stopped.
template <typename Extend, typename Visit>
bool walk_cycles(const HostGraph &host, int length, Extend &&extend, Visit &&visit) {
  const int n = host.vertex_count();
  if (length < 3 || length > n)
    return false;
  std::vector<VertexId> walk;
  walk.reserve(static_cast<std::size_t>(length));
  std::vector<char> used(static_cast<std::size_t>(n), 0);

  auto rec = [&](auto &self) -> bool {
    const VertexId last = walk.back();
    if (static_cast<int>(walk.size()) == length) {
      if (walk[1] < last && host.adjacent(last, walk[0]) && extend(walk, walk[0]))
        return visit(walk);
      return false;
    }
    for (VertexId v = walk[0] + 1; v < n; ++v) {
      if (used[v] || !host.adjacent(last, v) || !extend(walk, v))
        continue;
      used[v] = 1;
      walk.push_back(v);
      const bool stop = self(self);
      walk.pop_back();
      used[v] = 0;
      if (stop)
        return true;
    }
    return false;
  };

  for (VertexId s = 0; s + length <= n; ++s) {
    walk.assign(1, s);
    used[s] = 1;
    const bool stop = rec(rec);
    used[s] = 0;
    if (stop)
      return true;
  }
  return false;
}

inline std::optional<SubgraphWitness> first_rainbow_cycle(const EdgeColoring &coloring, int length,
                                                          bool need_three_parts) {
  const auto &host = coloring.host();
  std::vector<ColorId> stack;
  std::optional<SubgraphWitness> found;
  auto extend = [&](const std::vector<VertexId> &walk, VertexId v) {
    const ColorId c = coloring.color(host.edge_at(walk.back(), v));
    // Colors of the current walk are exactly stack[0 .. walk.size()-2].
    stack.resize(walk.size() - 1);
    if (std::find(stack.begin(), stack.end(), c) != stack.end())
      return false;
    stack.push_back(c);
    return true;
  };
  auto visit = [&](const std::vector<VertexId> &walk) {
    if (need_three_parts && !spans_three_parts(host, std::span<const VertexId>(walk)))
      return false;
    found = make_cycle(host, walk);
    return true;
  };
  walk_cycles(host, length, extend, visit);
  return found;
}

inline void require_rainbow_cycle(const EdgeColoring &coloring, const SubgraphWitness &cycle) {
  const auto &host = coloring.host();
  const auto rebuilt = make_cycle(host, cycle.vertices);
  if (rebuilt.edges != cycle.edges)
    throw ContractViolation("witness edges do not match its vertex walk");
  if (!is_rainbow(coloring, cycle))
    throw ContractViolation("input cycle is not rainbow");
}

inline std::vector<VertexId> slice_cycle(const std::vector<VertexId> &walk, std::size_t from,
                                         std::size_t to) {
  // Vertices walk[from], walk[from+1], ..., walk[to] going forward cyclically.
  std::vector<VertexId> out;
  for (std::size_t i = from;; i = (i + 1) % walk.size()) {
    out.push_back(walk[i]);
    if (i == to)
      break;
  }
  return out;
}

} // namespace detail

/// Edge sets of every copy of C_length in the host, in enumeration order.
inline std::vector<std::vector<EdgeId>> cycle_copies(const HostGraph &host, int length) {
  std::vector<std::vector<EdgeId>> out;
  detail::walk_cycles(
      host, length, [](const auto &, VertexId) { return true; },
      [&](const std::vector<VertexId> &walk) {
        out.push_back(make_cycle(host, walk).edges);
        return false;
      });
  return out;
}

/// First rainbow copy of the target in enumeration order, if any. For the
/// multipartite target shorter cycles are searched first.
inline std::optional<SubgraphWitness> find_rainbow_copy(const EdgeColoring &coloring,
                                                        const RainbowTarget &target) {
  if (target.kind == RainbowTarget::Kind::cycle)
    return detail::first_rainbow_cycle(coloring, target.length, false);
  for (int len = 3; len <= coloring.host().vertex_count(); ++len)
    if (auto w = detail::first_rainbow_cycle(coloring, len, true))
      return w;
  return std::nullopt;
}

/// Shrinks a rainbow cycle meeting three parts down to a rainbow triangle.
///
/// Each step scans every chord, keeps those whose two sub-cycles both meet
/// three parts, takes the one with the lowest edge id, and continues on a
/// rainbow side. Because the input is rainbow, the chord's color repeats on
/// at most one side.
inline SubgraphWitness extract_rainbow_triangle(const EdgeColoring &coloring,
                                                const SubgraphWitness &cycle) {
  const auto &host = coloring.host();
  detail::require_rainbow_cycle(coloring, cycle);
  if (!spans_three_parts(host, std::span<const VertexId>(cycle.vertices)))
    throw ContractViolation("input cycle does not meet three parts");

  auto current = cycle.vertices;
  while (current.size() > 3) {
    const std::size_t len = current.size();
    const auto cur = make_cycle(host, current);
    EdgeId best = -1;
    std::size_t best_i = 0, best_j = 0;
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t j = i + 2; j < len; ++j) {
        if (i == 0 && j == len - 1)
          continue;
        const EdgeId chord = host.edge_at(current[i], current[j]);
        if (chord < 0 || (best >= 0 && chord >= best))
          continue;
        const auto a = detail::slice_cycle(current, i, j);
        const auto b = detail::slice_cycle(current, j, i);
        if (spans_three_parts(host, std::span<const VertexId>(a)) &&
            spans_three_parts(host, std::span<const VertexId>(b))) {
          best = chord;
          best_i = i;
          best_j = j;
        }
      }
    if (best < 0)
      throw InvariantFailure("no chord splits the rainbow multipartite cycle into two "
                             "multipartite cycles");

    const ColorId chord_color = coloring.color(best);
    bool first_side_rainbow = true;
    for (std::size_t k = best_i; k < best_j; ++k)
      if (coloring.color(cur.edges[k]) == chord_color)
        first_side_rainbow = false;
    current = first_side_rainbow ? detail::slice_cycle(current, best_i, best_j)
                                 : detail::slice_cycle(current, best_j, best_i);
    if (!is_rainbow(coloring, make_cycle(host, current)))
      throw InvariantFailure("chord split produced a non-rainbow side");
  }
  return make_cycle(host, current);
}

/// Shrinks a rainbow even cycle inside two parts down to a rainbow C4 by
/// cutting off positions 0..3 with the chord between them.
inline SubgraphWitness extract_rainbow_c4(const EdgeColoring &coloring,
                                          const SubgraphWitness &cycle) {
  const auto &host = coloring.host();
  detail::require_rainbow_cycle(coloring, cycle);
  const std::size_t len0 = cycle.vertices.size();
  if (len0 < 4 || len0 % 2 != 0)
    throw ContractViolation("even-cycle shortening needs an even cycle of length >= 4");
  {
    std::vector<int> parts;
    for (VertexId v : cycle.vertices)
      parts.push_back(host.part_of(v));
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    if (parts.size() != 2)
      throw ContractViolation("even-cycle shortening needs a cycle inside exactly two parts");
  }

  auto current = make_cycle(host, cycle.vertices);
  while (current.vertices.size() > 4) {
    const auto &w = current.vertices;
    const EdgeId chord = host.edge_at(w[0], w[3]);
    if (chord < 0)
      throw InvariantFailure("positions 0 and 3 of a two-part cycle are not adjacent");
    const ColorId c = coloring.color(chord);
    const bool square_rainbow = c != coloring.color(current.edges[0]) &&
                                c != coloring.color(current.edges[1]) &&
                                c != coloring.color(current.edges[2]);
    if (square_rainbow)
      return make_cycle(host, {w[0], w[1], w[2], w[3]});
    std::vector<VertexId> rest(w.begin() + 3, w.end());
    rest.push_back(w[0]);
    current = make_cycle(host, std::move(rest));
    if (!is_rainbow(coloring, current))
      throw InvariantFailure("even-cycle shortening produced a non-rainbow side");
  }
  return current;
}

/// Takes a representing subgraph; if it has a cycle, shortens that (rainbow)
/// cycle to a rainbow C3 or C4. Nothing when the representing subgraph is
/// a forest.
inline std::optional<SubgraphWitness> rainbow_c3_or_c4(const EdgeColoring &coloring) {
  const auto rep = representing_subgraph(coloring);
  auto cycle = find_any_cycle(coloring.host(), rep);
  if (!cycle)
    return std::nullopt;
  if (spans_three_parts(coloring.host(), std::span<const VertexId>(cycle->vertices)))
    return extract_rainbow_triangle(coloring, *cycle);
  return extract_rainbow_c4(coloring, *cycle);
}

} // namespace antiramsey
