#pragma once

// Surjective edge-colorings of a host, plus the rainbow / representing
// subgraph / starred-color queries the search and oracle layers build on.

#include <algorithm>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "antiramsey/errors.hpp"
#include "antiramsey/host_graph.hpp"

namespace antiramsey {

using HostPtr = std::shared_ptr<const HostGraph>;

inline HostPtr make_host(PartSizes parts) {
  return std::make_shared<const HostGraph>(std::move(parts));
}

/// Every host edge carries a color in [0, k) and every color is used.
class EdgeColoring {
public:
  EdgeColoring(HostPtr host, std::vector<ColorId> color_of, std::vector<std::string> labels = {})
      : host_(std::move(host)), color_of_(std::move(color_of)), labels_(std::move(labels)) {
    if (!host_)
      throw InvalidInput("coloring without a host");
    if (static_cast<int>(color_of_.size()) != host_->edge_count())
      throw InvalidInput("coloring has " + std::to_string(color_of_.size()) +
                         " entries but the host has " + std::to_string(host_->edge_count()) +
                         " edges");
    int k = 0;
    for (ColorId c : color_of_) {
      if (c < 0)
        throw InvalidInput("negative color id");
      k = std::max(k, c + 1);
    }
    classes_.resize(static_cast<std::size_t>(k));
    for (EdgeId e = 0; e < static_cast<EdgeId>(color_of_.size()); ++e)
      classes_[color_of_[e]].push_back(e);
    for (int c = 0; c < k; ++c)
      if (classes_[c].empty())
        throw InvalidInput("color " + std::to_string(c) + " is unused; ids must be dense");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != k)
      throw InvalidInput("label table size does not match the color count");
  }

  /// Remaps arbitrary labels to dense ids in order of first appearance
  /// along the edge order.
  template <typename Label>
  static EdgeColoring from_labels(HostPtr host, std::span<const Label> raw) {
    std::vector<ColorId> dense;
    dense.reserve(raw.size());
    std::vector<Label> seen;
    for (const auto &label : raw) {
      auto it = std::find(seen.begin(), seen.end(), label);
      if (it == seen.end()) {
        dense.push_back(static_cast<ColorId>(seen.size()));
        seen.push_back(label);
      } else {
        dense.push_back(static_cast<ColorId>(it - seen.begin()));
      }
    }
    return EdgeColoring(std::move(host), std::move(dense));
  }

  const HostGraph &host() const { return *host_; }
  const HostPtr &host_ptr() const { return host_; }
  int color_count() const { return static_cast<int>(classes_.size()); }
  ColorId color(EdgeId e) const { return color_of_[e]; }
  std::span<const ColorId> colors() const { return color_of_; }
  /// Edges of color c in increasing id order.
  std::span<const EdgeId> color_class(ColorId c) const { return classes_[c]; }
  const std::vector<std::vector<EdgeId>> &classes() const { return classes_; }
  const std::vector<std::string> &labels() const { return labels_; }

  friend bool operator==(const EdgeColoring &a, const EdgeColoring &b) {
    return a.host_->parts() == b.host_->parts() && a.color_of_ == b.color_of_ &&
           a.labels_ == b.labels_;
  }

private:
  HostPtr host_;
  std::vector<ColorId> color_of_;
  std::vector<std::string> labels_;
  std::vector<std::vector<EdgeId>> classes_;
};

/// True iff no two of the listed edges share a color.
inline bool is_rainbow(const EdgeColoring &coloring, std::span<const EdgeId> edges) {
  std::vector<ColorId> seen;
  seen.reserve(edges.size());
  for (EdgeId e : edges) {
    const ColorId c = coloring.color(e);
    if (std::find(seen.begin(), seen.end(), c) != seen.end())
      return false;
    seen.push_back(c);
  }
  return true;
}

inline bool is_rainbow(const EdgeColoring &coloring, const SubgraphWitness &witness) {
  return is_rainbow(coloring, std::span<const EdgeId>(witness.edges));
}

/// One edge per color (the smallest id in each class), in color order.
inline std::vector<EdgeId> representing_subgraph(const EdgeColoring &coloring) {
  std::vector<EdgeId> out;
  out.reserve(static_cast<std::size_t>(coloring.color_count()));
  for (const auto &cls : coloring.classes())
    out.push_back(cls.front());
  return out;
}

/// Number of colors at v whose whole class is a star centered at v. A class
/// with a single edge counts at both of its endpoints.
inline int starred_degree(const EdgeColoring &coloring, VertexId v) {
  const auto &host = coloring.host();
  std::vector<char> checked(static_cast<std::size_t>(coloring.color_count()), 0);
  int count = 0;
  for (VertexId u = 0; u < host.vertex_count(); ++u) {
    const EdgeId e = host.edge_at(v, u);
    if (e < 0)
      continue;
    const ColorId c = coloring.color(e);
    if (checked[c])
      continue;
    checked[c] = 1;
    const auto cls = coloring.color_class(c);
    const bool star = std::all_of(cls.begin(), cls.end(), [&](EdgeId f) {
      const auto [a, b] = host.endpoints(f);
      return a == v || b == v;
    });
    count += star ? 1 : 0;
  }
  return count;
}

inline int starred_degree(const EdgeColoring &coloring, VertexRef v) {
  return starred_degree(coloring, coloring.host().id(v));
}

} // namespace antiramsey
