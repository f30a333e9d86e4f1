#pragma once

// Command-line front end. Exit codes: 0 success, 1 a checked property was
// violated, 2 usage errors, malformed input and exceeded caps.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "antiramsey/antiramsey.hpp"

namespace antiramsey::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_usage = 2;

namespace detail {

using nlohmann::json;

struct HostArgs {
  std::string parts;
  std::string host_file;

  void add_to(CLI::App *cmd) {
    cmd->add_option("--parts", parts, "comma-separated descending part sizes, e.g. 2,2,1");
    cmd->add_option("--host", host_file, "host JSON file {\"parts\": [...]}");
  }

  PartSizes resolve() const {
    if (!parts.empty() && !host_file.empty())
      throw InvalidInput("give either --parts or --host, not both");
    if (!host_file.empty())
      return io::load_host(io::read_file(host_file));
    if (parts.empty())
      throw InvalidInput("missing --parts");
    return PartSizes::parse(parts);
  }
};

inline std::string subscript(const PartSizes &parts) { return "K_{" + parts.to_string() + "}"; }

inline std::string join_plus(const std::vector<std::string> &terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i)
    out += (i ? " + " : "") + terms[i];
  return out;
}

/// Target list for `check`: c<k> entries and "mc" for any cycle meeting
/// three parts.
inline std::vector<RainbowTarget> parse_targets(const std::string &text) {
  std::vector<RainbowTarget> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "mc" || item == "multipartite-cycle") {
      out.push_back(RainbowTarget::multipartite_cycle());
      continue;
    }
    for (int len : CycleFamily::parse(item).lengths)
      out.push_back(RainbowTarget::cycle(len));
  }
  if (out.empty())
    throw InvalidInput("no targets given");
  return out;
}

inline std::string parts_field(const PartSizes &parts) { return "\"" + parts.to_string() + "\""; }

inline int run_formula(const std::string &family, const HostArgs &host, long long n, long long m,
                       long long k, long long s, std::ostream &out) {
  auto need = [](long long v, const char *name) {
    if (v < 0)
      throw InvalidInput(std::string("family needs --") + name);
    return static_cast<Count>(v);
  };
  if (family == "c3c4") {
    const auto parts = host.resolve();
    const Count v = ar_rpartite_c3c4(parts);
    out << v << "\n";
    out << "ar(" << subscript(parts) << ", {C3,C4}) = n - 1 = " << parts.total() << " - 1 = " << v
        << "\n";
  } else if (family == "c3") {
    const auto parts = host.resolve();
    const Count v = ar_rpartite_c3(parts);
    std::vector<std::string> terms;
    const int r = parts.count();
    for (int i = 0; i + 1 < r; i += 2)
      terms.push_back(std::to_string(parts[i]) + "*" + std::to_string(parts[i + 1]));
    if (r % 2 == 1)
      terms.push_back(std::to_string(parts[r - 1]));
    terms.push_back(std::to_string(r / 2) + " - 1");
    out << v << "\n";
    out << "ar(" << subscript(parts) << ", C3) = " << join_plus(terms) << " = " << v << "\n";
  } else if (family == "c4") {
    const auto parts = host.resolve();
    const Count v = ar_rpartite_c4(parts);
    out << v << "\n";
    out << "ar(" << subscript(parts) << ", C4) = n + t - 1 = " << parts.total() << " + "
        << max_independent_triangles(parts) << " - 1 = " << v << "\n";
  } else if (family == "kn") {
    const Count v = ar_complete(need(n, "n"), need(k, "k"));
    out << v << "\n";
    out << "ar(K_" << n << ", C" << k << ") = " << v << "\n";
  } else if (family == "kmn-even") {
    const Count v = ar_bipartite_even(need(m, "m"), need(n, "n"), need(k, "k"));
    out << v << "\n";
    out << "ar(K_{" << m << "," << n << "}, C" << 2 * k << ") = " << v << "\n";
  } else if (family == "split-c3") {
    const Count v = ar_split_c3(need(n, "n"), need(s, "s"));
    out << v << "\n";
    out << "ar(K_" << n << " + co-K_" << s << ", C3) = n + s - 1 = " << v << "\n";
  } else if (family == "split-c4") {
    const auto b = ar_split_c4(need(n, "n"), need(s, "s"));
    if (!b) {
      out << "not covered\n";
      return exit_usage;
    }
    if (b->exact())
      out << b->lower << "\n";
    else
      out << b->lower << ".." << b->upper << "\n";
    out << "ar(K_" << n << " + co-K_" << s << ", C4) = floor(3n/2) + s - 1 = " << b->lower << "\n";
  } else {
    throw InvalidInput("unknown family '" + family + "'");
  }
  return exit_ok;
}

inline EdgeColoring construct(const std::string &family, const PartSizes &parts) {
  if (family == "c3c4")
    return construct_c3c4_free(parts);
  if (family == "c3")
    return construct_c3_free(parts);
  if (family == "c4")
    return construct_c4_free(parts);
  throw InvalidInput("no construction for family '" + family + "'");
}

inline bool scan_targets(const EdgeColoring &coloring, const std::vector<RainbowTarget> &targets,
                         std::ostream *out) {
  bool any = false;
  for (const auto &t : targets) {
    const auto w = find_rainbow_copy(coloring, t);
    any = any || w.has_value();
    if (!out)
      continue;
    *out << t.name() << ": ";
    if (w)
      *out << "rainbow " << io::witness_json(coloring, *w).dump() << "\n";
    else
      *out << "none\n";
  }
  return any;
}

/// A random surjective coloring: k distinct random edges seed the
/// k colors, the rest are colored uniformly.
inline EdgeColoring random_coloring(const HostPtr &host, int k, std::mt19937_64 &rng) {
  const int m = host->edge_count();
  std::vector<EdgeId> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> raw(static_cast<std::size_t>(m));
  std::uniform_int_distribution<int> pick(0, k - 1);
  for (int i = 0; i < m; ++i)
    raw[order[i]] = i < k ? i : pick(rng);
  return EdgeColoring::from_labels(host, std::span<const int>(raw));
}

} // namespace detail

inline int dispatch(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  using detail::HostArgs;
  CLI::App app{"Anti-Ramsey workbench for complete multipartite graphs"};
  app.require_subcommand(1);

  // formula
  auto *formula = app.add_subcommand("formula", "evaluate a closed form");
  std::string f_family;
  HostArgs f_host;
  long long f_n = -1, f_m = -1, f_k = -1, f_s = -1;
  formula->add_option("--family", f_family, "c3, c4, c3c4, kn, kmn-even, split-c3, split-c4")
      ->required();
  f_host.add_to(formula);
  formula->add_option("--n", f_n, "n (kn, kmn-even, split-*)");
  formula->add_option("--m", f_m, "m (kmn-even)");
  formula->add_option("--k", f_k, "k (kn: cycle length, kmn-even: half the cycle length)");
  formula->add_option("--s", f_s, "s (split-*)");

  // construct
  auto *construct = app.add_subcommand("construct", "emit an extremal rainbow-free coloring");
  std::string c_family, c_out;
  HostArgs c_host;
  construct->add_option("--family", c_family, "c3, c4 or c3c4")->required();
  c_host.add_to(construct);
  construct->add_option("-o,--output", c_out, "coloring file (stdout if omitted)");

  // check
  auto *check = app.add_subcommand("check", "scan colorings for rainbow copies");
  std::string k_coloring, k_targets = "c3,c4";
  HostArgs k_host;
  bool k_assert_free = false, k_assert_found = false;
  int k_colors = 0, k_random = 0;
  std::uint64_t k_seed = 1;
  check->add_option("--coloring", k_coloring, "coloring file");
  check->add_option("--targets", k_targets, "comma list of c<k> and mc (multipartite cycle)");
  check->add_flag("--assert-free", k_assert_free, "exit 1 if any rainbow target is found");
  check->add_flag("--assert-found", k_assert_found,
                  "exit 1 if some coloring has no rainbow target");
  k_host.add_to(check);
  check->add_option("--colors", k_colors, "random mode: colors per coloring");
  check->add_option("--random", k_random, "random mode: number of colorings");
  check->add_option("--seed", k_seed, "random mode: generator seed");

  // exact
  auto *exact = app.add_subcommand("exact", "exact anti-Ramsey number by enumeration");
  HostArgs e_host;
  std::string e_targets, e_out, e_record;
  int e_max_edges = default_max_edges;
  e_host.add_to(exact);
  exact->add_option("--targets", e_targets, "cycle family, e.g. c3 or c3,c4")->required();
  exact->add_option("--max-edges", e_max_edges, "edge cap for exhaustive search");
  exact->add_option("-o,--output", e_out, "witness coloring file");
  exact->add_option("--record", e_record, "verification record file");

  // pack
  auto *pack = app.add_subcommand("pack", "maximum triangle packing");
  HostArgs p_host;
  bool p_brute = false;
  p_host.add_to(pack);
  pack->add_flag("--brute", p_brute, "cross-check against backtracking");

  // extremal
  auto *extremal = app.add_subcommand("extremal", "extremal edge counts");
  HostArgs x_host;
  std::string x_forbidden;
  bool x_brute = false;
  int x_max_edges = default_max_edges;
  x_host.add_to(extremal);
  extremal->add_option("--forbidden", x_forbidden, "p3 (multipartite P3) or cycle")->required();
  extremal->add_flag("--brute", x_brute, "cross-check against exhaustive search");
  extremal->add_option("--max-edges", x_max_edges, "edge cap for exhaustive search");

  // table
  auto *table = app.add_subcommand("table", "sweep hosts and tabulate values");
  std::string t_family = "all";
  int t_max_vertices = 8, t_min_parts = 3, t_max_edges = default_max_edges;
  bool t_exact = false, t_json = false;
  table->add_option("--family", t_family, "c3, c4, c3c4 or all");
  table->add_option("--max-vertices", t_max_vertices, "largest total vertex count");
  table->add_option("--min-parts", t_min_parts, "smallest part count (>= 3)");
  table->add_flag("--exact", t_exact, "add exhaustive rows for hosts within --max-edges");
  table->add_option("--max-edges", t_max_edges, "edge cap for --exact rows");
  table->add_flag("--json", t_json, "JSON instead of CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*formula)
      return detail::run_formula(f_family, f_host, f_n, f_m, f_k, f_s, out);

    if (*construct) {
      const auto coloring = detail::construct(c_family, c_host.resolve());
      const auto text = io::store_coloring(coloring);
      if (c_out.empty()) {
        out << text;
      } else {
        io::write_file(c_out, text);
        out << coloring.color_count() << " colors written to " << c_out << "\n";
      }
      return exit_ok;
    }

    if (*check) {
      const auto targets = detail::parse_targets(k_targets);
      if (k_random > 0) {
        if (!k_coloring.empty())
          throw InvalidInput("--random generates colorings; do not pass --coloring");
        auto host = make_host(k_host.resolve());
        if (k_colors < 1 || k_colors > host->edge_count())
          throw InvalidInput("--colors must lie in [1, |E|]");
        std::mt19937_64 rng(k_seed);
        int with_copy = 0;
        for (int i = 0; i < k_random; ++i)
          with_copy += detail::scan_targets(detail::random_coloring(host, k_colors, rng), targets,
                                            nullptr)
                           ? 1
                           : 0;
        out << "colorings " << k_random << ", with rainbow target " << with_copy
            << ", rainbow-free " << k_random - with_copy << "\n";
        if (k_assert_free && with_copy > 0)
          return exit_violation;
        if (k_assert_found && with_copy < k_random)
          return exit_violation;
        return exit_ok;
      }
      if (k_coloring.empty())
        throw InvalidInput("check needs --coloring or --random");
      const auto coloring = io::load_coloring(io::read_file(k_coloring));
      const bool any = detail::scan_targets(coloring, targets, &out);
      if (k_assert_free && any)
        return exit_violation;
      if (k_assert_found && !any)
        return exit_violation;
      return exit_ok;
    }

    if (*exact) {
      const auto parts = e_host.resolve();
      const auto family = CycleFamily::parse(e_targets);
      auto host = make_host(parts);
      const auto start = std::chrono::steady_clock::now();
      const auto result = exact_ar(host, family, e_max_edges);
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      out << result.value << "\n";
      if (!e_out.empty() && result.witness)
        io::write_file(e_out, io::store_coloring(*result.witness));
      detail::json record;
      record["parts"] = parts.values();
      record["family"] = family.name();
      record["value"] = result.value;
      record["method"] = std::string(to_string(result.method));
      record["elapsed"] = elapsed.count();
      if (!e_record.empty())
        io::write_file(e_record, record.dump() + "\n");
      else
        out << record.dump() << "\n";
      return exit_ok;
    }

    if (*pack) {
      const auto parts = p_host.resolve();
      const auto packing = greedy_triangle_packing(parts);
      out << packing.size() << "\n";
      for (const auto &t : packing.triangles)
        out << to_string(t[0]) << " " << to_string(t[1]) << " " << to_string(t[2]) << "\n";
      if (p_brute) {
        const int brute = brute_triangle_packing(build_host(parts));
        out << "brute " << brute << ", formula " << max_independent_triangles(parts) << "\n";
        if (brute != packing.size() || brute != max_independent_triangles(parts))
          return exit_violation;
      }
      return exit_ok;
    }

    if (*extremal) {
      const auto parts = x_host.resolve();
      Forbidden which;
      if (x_forbidden == "p3")
        which = Forbidden::multipartite_p3;
      else if (x_forbidden == "cycle")
        which = Forbidden::multipartite_cycle;
      else
        throw InvalidInput("--forbidden must be p3 or cycle");
      const Count bound = extremal_edge_bound(parts, which);
      out << bound << "\n";
      if (x_brute) {
        const int brute = brute_extremal_edges(build_host(parts), which, x_max_edges);
        out << "brute " << brute << "\n";
        if (brute != bound)
          return exit_violation;
      }
      return exit_ok;
    }

    if (*table) {
      if (t_min_parts < 3)
        throw InvalidInput("--min-parts must be >= 3");
      std::vector<CycleFamily> families;
      if (t_family == "all")
        families = {CycleFamily{3}, CycleFamily{4}, CycleFamily{3, 4}};
      else
        families = {CycleFamily::parse(t_family)};

      struct Row {
        PartSizes parts;
        std::string family;
        Count value;
        std::string method;
      };
      std::vector<Row> rows;
      bool violated = false;
      for (const auto &parts : all_part_sizes(t_max_vertices, t_min_parts)) {
        const Count c3 = ar_rpartite_c3(parts), c4 = ar_rpartite_c4(parts),
                    c3c4 = ar_rpartite_c3c4(parts);
        if (c3 < c3c4 || c4 < c3c4 ||
            c3 != extremal_edge_bound(parts, Forbidden::multipartite_cycle)) {
          err << "identity violated at " << parts.to_string() << "\n";
          violated = true;
        }
        for (const auto &fam : families) {
          const Count value = closed_form_ar(parts, fam);
          rows.push_back({parts, fam.name(), value, "closed-form"});
          if (t_exact && parts.edge_count() <= t_max_edges) {
            const auto ex = exact_ar(make_host(parts), fam, t_max_edges);
            rows.push_back({parts, fam.name(), ex.value, "exhaustive"});
            if (ex.value != value) {
              err << "exhaustive value differs at " << parts.to_string() << " " << fam.name()
                  << "\n";
              violated = true;
            }
          }
        }
      }
      if (t_json) {
        detail::json doc = detail::json::array();
        for (const auto &r : rows)
          doc.push_back({{"parts", r.parts.values()},
                         {"family", r.family},
                         {"value", r.value},
                         {"method", r.method}});
        out << doc.dump(1) << "\n";
      } else {
        out << "parts,family,value,method\n";
        for (const auto &r : rows)
          out << detail::parts_field(r.parts) << "," << r.family << "," << r.value << ","
              << r.method << "\n";
      }
      return violated ? exit_violation : exit_ok;
    }
  } catch (const InvalidInput &e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const CapExceeded &e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const ContractViolation &e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const InvariantFailure &e) {
    err << "internal error: " << e.what() << "\n";
    return exit_violation;
  }
  return exit_usage;
}

} // namespace antiramsey::cli
