#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "antiramsey/io.hpp"
#include "cli.hpp"

using namespace antiramsey;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "antiramsey");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string &s) { return s.substr(0, s.find('\n')); }

fs::path scratch(const std::string &name) {
  const auto dir = fs::temp_directory_path() / "antiramsey_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

} // namespace

TEST(Cli, Formula) {
  auto r = run({"formula", "--family", "c4", "--parts", "2,2,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "7");
  EXPECT_NE(r.out.find("6 + 2 - 1"), std::string::npos);

  EXPECT_EQ(first_line(run({"formula", "--family", "c3", "--parts", "2,2,1"}).out), "5");
  EXPECT_EQ(first_line(run({"formula", "--family", "c3c4", "--parts", "2,2,1"}).out), "4");
  EXPECT_EQ(first_line(run({"formula", "--family", "kn", "--n", "7", "--k", "4"}).out), "8");
  EXPECT_EQ(first_line(run({"formula", "--family", "kmn-even", "--m", "3", "--n", "3", "--k", "2"}).out), "5");
  EXPECT_EQ(first_line(run({"formula", "--family", "split-c3", "--n", "4", "--s", "4"}).out), "7");
  EXPECT_EQ(first_line(run({"formula", "--family", "split-c4", "--n", "4", "--s", "2"}).out), "7");

  r = run({"formula", "--family", "split-c4", "--n", "6", "--s", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(first_line(r.out), "not covered");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"formula", "--family", "c4", "--parts", "1,2,2"}).code, 2);
  EXPECT_EQ(run({"formula", "--family", "c9", "--parts", "2,2,2"}).code, 2);
  EXPECT_EQ(run({"formula", "--family", "c4", "--parts", "2,2"}).code, 2);
  EXPECT_EQ(run({"formula", "--family", "kn", "--n", "5"}).code, 2);
  EXPECT_EQ(run({"exact", "--parts", "3,3,3", "--targets", "c3"}).code, 2);
  EXPECT_EQ(run({"check", "--coloring", scratch("missing.json").string()}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ConstructThenCheck) {
  for (const std::string family : {"c3", "c4", "c3c4"}) {
    const auto path = scratch("construct_" + family + ".json");
    auto r = run({"construct", "--family", family, "--parts", "3,2,2", "-o", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto targets = family == "c3c4" ? "c3,c4" : family;
    r = run({"check", "--coloring", path.string(), "--targets", targets, "--assert-free"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("none"), std::string::npos);
  }
  // In a 3-partite host every C5 meets three parts, so it cannot be rainbow
  // without a rainbow triangle.
  const auto path = scratch("construct_c3c4.json");
  const auto r = run({"check", "--coloring", path.string(), "--targets", "c5,mc", "--assert-free"});
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, ConstructToStdoutIsDeterministic) {
  const auto a = run({"construct", "--family", "c4", "--parts", "3,3,2,1"});
  const auto b = run({"construct", "--family", "c4", "--parts", "3,3,2,1"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(io::load_coloring(a.out).color_count(), ar_rpartite_c4({3, 3, 2, 1}));
}

TEST(Cli, CheckFindsRainbowInAllDistinct) {
  auto host = make_host({2, 2, 1});
  std::vector<ColorId> colors(static_cast<std::size_t>(host->edge_count()));
  std::iota(colors.begin(), colors.end(), 0);
  const auto path = scratch("distinct.json");
  io::write_file(path.string(), io::store_coloring(EdgeColoring(host, colors)));
  auto r = run({"check", "--coloring", path.string(), "--targets", "c3,mc", "--assert-free"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("\"kind\":\"triangle\""), std::string::npos);
}

TEST(Cli, CheckRandomMode) {
  // Above n - 1 colors every coloring has a rainbow C3 or C4.
  auto r = run({"check", "--parts", "2,2,2", "--colors", "6", "--random", "200", "--seed", "5",
                "--targets", "c3,c4", "--assert-found"});
  EXPECT_EQ(r.code, 0) << r.out;
  const auto again = run({"check", "--parts", "2,2,2", "--colors", "6", "--random", "200", "--seed",
                          "5", "--targets", "c3,c4", "--assert-found"});
  EXPECT_EQ(r.out, again.out);
  EXPECT_EQ(run({"check", "--parts", "2,2,2", "--colors", "99", "--random", "3"}).code, 2);
}

TEST(Cli, Exact) {
  const auto witness = scratch("exact_witness.json");
  const auto record = scratch("exact_record.json");
  auto r = run({"exact", "--parts", "1,1,1", "--targets", "c3", "-o", witness.string(), "--record",
                record.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(first_line(r.out), "2");
  const auto w = io::load_coloring(io::read_file(witness.string()));
  EXPECT_EQ(w.color_count(), 2);
  const auto doc = io::json::parse(io::read_file(record.string()));
  EXPECT_EQ(doc["value"], 2);
  EXPECT_EQ(doc["method"], "exhaustive");
  EXPECT_EQ(doc["family"], "c3");

  r = run({"exact", "--parts", "2,2,1", "--targets", "c3,c4"});
  EXPECT_EQ(first_line(r.out), "4");
  EXPECT_NE(r.out.find("\"parts\":[2,2,1]"), std::string::npos);
}

TEST(Cli, PackAndExtremal) {
  auto r = run({"pack", "--parts", "2,2,2", "--brute"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "2");
  EXPECT_NE(r.out.find("0:0 1:0 2:0"), std::string::npos);

  r = run({"extremal", "--parts", "2,2,1", "--forbidden", "cycle", "--brute"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "5");
  r = run({"extremal", "--parts", "2,2,1", "--forbidden", "p3", "--brute"});
  EXPECT_EQ(first_line(r.out), "4");
  EXPECT_EQ(run({"extremal", "--parts", "2,2,1", "--forbidden", "path"}).code, 2);
}

TEST(Cli, Table) {
  auto r = run({"table", "--family", "c4", "--max-vertices", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "parts,family,value,method\n"
                   "\"1,1,1\",c4,3,closed-form\n"
                   "\"2,1,1\",c4,4,closed-form\n"
                   "\"1,1,1,1\",c4,4,closed-form\n");
  r = run({"table", "--max-vertices", "5", "--exact", "--max-edges", "8"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"2,2,1\",c3c4,4,exhaustive"), std::string::npos);
  r = run({"table", "--max-vertices", "4", "--json"});
  EXPECT_EQ(io::json::parse(r.out).size(), 9u);
  EXPECT_EQ(run({"table", "--min-parts", "2"}).code, 2);
}
