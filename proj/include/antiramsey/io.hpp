#pragma once

// JSON file formats.
//
//   host:     {"parts": [2, 2, 1]}
//   coloring: {"parts": [...], "classes": [[["0:0", "1:0"], ...], ...]}
//             class index is the color id; an optional "labels" array keeps
//             the caller's names for the colors.
//   witness:  {"kind": "triangle", "vertices": ["0:0", ...], "colors": [...]}
//
// Writers emit one fixed layout, so store(load(store(x))) is byte-identical.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "antiramsey/coloring.hpp"
#include "antiramsey/errors.hpp"
#include "antiramsey/host_graph.hpp"

namespace antiramsey::io {

using nlohmann::json;

namespace detail {

inline json parse(const std::string &text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

inline PartSizes parts_from(const json &doc) {
  if (!doc.is_object() || !doc.contains("parts") || !doc["parts"].is_array())
    throw InvalidInput("expected an object with a \"parts\" array");
  std::vector<int> sizes;
  for (const auto &n : doc["parts"]) {
    if (!n.is_number_integer())
      throw InvalidInput("part sizes must be integers");
    sizes.push_back(n.get<int>());
  }
  return PartSizes(std::move(sizes));
}

inline std::string parts_array(const PartSizes &parts) {
  std::string out = "[";
  for (int i = 0; i < parts.count(); ++i)
    out += (i ? ", " : "") + std::to_string(parts[i]);
  return out + "]";
}

inline std::string quoted(const std::string &s) { return json(s).dump(); }

} // namespace detail

inline std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InvalidInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw InvalidInput("cannot write " + path);
  out << text;
}

inline std::string store_host(const PartSizes &parts) {
  return "{\"parts\": " + detail::parts_array(parts) + "}\n";
}

inline PartSizes load_host(const std::string &text) { return detail::parts_from(detail::parse(text)); }

inline std::string edge_json(const HostGraph &host, EdgeId e) {
  const Edge edge = host.edge(e);
  return "[" + detail::quoted(to_string(edge.a)) + ", " + detail::quoted(to_string(edge.b)) + "]";
}

inline std::string store_coloring(const EdgeColoring &coloring) {
  const auto &host = coloring.host();
  std::string out = "{\n  \"parts\": " + detail::parts_array(host.parts()) + ",\n  \"classes\": [";
  const auto &classes = coloring.classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    out += c ? ",\n    [" : "\n    [";
    for (std::size_t i = 0; i < classes[c].size(); ++i)
      out += (i ? ", " : "") + edge_json(host, classes[c][i]);
    out += "]";
  }
  out += classes.empty() ? "]" : "\n  ]";
  if (!coloring.labels().empty()) {
    out += ",\n  \"labels\": [";
    for (std::size_t c = 0; c < coloring.labels().size(); ++c)
      out += (c ? ", " : "") + detail::quoted(coloring.labels()[c]);
    out += "]";
  }
  return out + "\n}\n";
}

/// Loads and normalises a coloring: endpoint order and edge order inside a
/// class do not matter, empty classes are dropped (with their label), and
/// the remaining classes get dense ids in file order. Every host edge must
/// appear in exactly one class.
inline EdgeColoring load_coloring(const std::string &text) {
  const json doc = detail::parse(text);
  auto host = make_host(detail::parts_from(doc));
  if (!doc.contains("classes") || !doc["classes"].is_array())
    throw InvalidInput("coloring needs a \"classes\" array");
  const auto &classes = doc["classes"];

  std::vector<std::string> labels;
  const bool labelled = doc.contains("labels");
  if (labelled) {
    if (!doc["labels"].is_array() || doc["labels"].size() != classes.size())
      throw InvalidInput("\"labels\" must be an array parallel to \"classes\"");
    for (const auto &l : doc["labels"])
      labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
  }

  std::vector<ColorId> color(static_cast<std::size_t>(host->edge_count()), -1);
  std::vector<std::string> kept_labels;
  ColorId next = 0;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto &cls = classes[c];
    if (!cls.is_array())
      throw InvalidInput("each class must be an array of edges");
    if (cls.empty())
      continue;
    for (const auto &e : cls) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw InvalidInput("edges must be [\"p:i\", \"q:j\"] pairs");
      const EdgeId id = host->edge_id(
          Edge(parse_vertex(e[0].get<std::string>()), parse_vertex(e[1].get<std::string>())));
      if (color[id] >= 0)
        throw InvalidInput("edge " + edge_json(*host, id) + " listed twice");
      color[id] = next;
    }
    if (labelled)
      kept_labels.push_back(labels[c]);
    ++next;
  }
  for (EdgeId e = 0; e < host->edge_count(); ++e)
    if (color[e] < 0)
      throw InvalidInput("edge " + edge_json(*host, e) + " has no color");
  return EdgeColoring(host, std::move(color), std::move(kept_labels));
}

inline json witness_json(const EdgeColoring &coloring, const SubgraphWitness &w) {
  json out;
  out["kind"] = std::string(to_string(w.kind));
  out["vertices"] = json::array();
  for (VertexId v : w.vertices)
    out["vertices"].push_back(to_string(coloring.host().ref(v)));
  out["colors"] = json::array();
  for (EdgeId e : w.edges)
    out["colors"].push_back(coloring.color(e));
  return out;
}

} // namespace antiramsey::io
