#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = refclass::cli::main(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const auto d = fs::temp_directory_path() / ("refclass_cli_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

const char* kSmall[] = {"--papers", "60", "--categories", "6", "--areas", "2", "--papers-per-journal", "4",
                        "--misc", "0.2", "--multidisciplinary", "0.1", "--low-refs", "0.1"};

Result make_small(const fs::path& dir) {
  std::vector<std::string> args{"synth", "--seed", "5", "--out", dir.string()};
  args.insert(args.end(), std::begin(kSmall), std::end(kSmall));
  return cli(args);
}

}  // namespace

TEST_CASE("run writes all twelve variants and a report") {
  const auto d = scratch("run");
  REQUIRE(make_small(d / "in").code == 0);
  const auto r = cli({"run", "--input", (d / "in").string(), "--out", (d / "out").string(), "--variants", "all"});
  REQUIRE(r.code == 0);
  int tables = 0;
  for (const auto& e : fs::directory_iterator(d / "out" / "classifications")) tables += e.path().extension() == ".tsv";
  CHECK(tables == 12);
  for (const auto* f : {"structure.tsv", "assignments.tsv", "correlations.tsv", "areas.tsv", "refs_acv.tsv",
                        "retention.tsv", "flow.tsv", "metadata.json"}) {
    CHECK(fs::exists(d / "out" / "metrics" / f));
  }
  CHECK(fs::exists(d / "out" / "run.json"));
  CHECK(fs::exists(d / "out" / "unreclassified.tsv"));

  SUBCASE("reruns and thread counts give byte-identical files") {
    REQUIRE(cli({"run", "--input", (d / "in").string(), "--out", (d / "again").string(), "--threads", "8"}).code == 0);
    for (const auto& e : fs::recursive_directory_iterator(d / "out")) {
      if (!e.is_regular_file()) continue;
      const auto rel = fs::relative(e.path(), d / "out");
      CHECK_MESSAGE(slurp(e.path()) == slurp(d / "again" / rel), rel.string());
    }
  }

  SUBCASE("metrics subcommand reads existing classifications") {
    const auto m = cli({"metrics", "--input", (d / "in").string(), "--out", (d / "m").string(), "--classification",
                        "A=" + (d / "out" / "classifications" / "U1-F-0.8.tsv").string(), "--compare",
                        "B=" + (d / "out" / "classifications" / "JL-F-0.8.tsv").string()});
    CHECK(m.code == 0);
    CHECK(fs::exists(d / "m" / "coincidence.tsv"));
  }
}

TEST_CASE("config file with relative paths and flag overrides") {
  const auto d = scratch("config");
  REQUIRE(make_small(d / "in").code == 0);
  {
    std::ofstream cfg(d / "run.json");
    cfg << R"({"input_dir": "in", "out": "out", "variants": ["JL-F-raw", "U1-NF-0.5"],
               "engine": {"threshold_mode": "absolute", "threshold": 1e-6, "max_iterations": 20}})";
  }
  const auto r = cli({"run", "--config", (d / "run.json").string(), "--min-refs", "4"});
  REQUIRE(r.code == 0);
  CHECK(fs::exists(d / "out" / "classifications" / "JL-F-raw.tsv"));
  CHECK(fs::exists(d / "out" / "classifications" / "U1-NF-0.5.tsv"));
  CHECK(slurp(d / "out" / "run.json").find("\"min_refs\": 4") != std::string::npos);
}

TEST_CASE("validation errors exit non-zero") {
  const auto d = scratch("invalid");
  REQUIRE(make_small(d / "in").code == 0);
  CHECK(cli({"run", "--input", (d / "in").string(), "--out", (d / "o").string(), "--variants", ""}).code == 2);
  {
    std::ofstream cfg(d / "empty.json");
    cfg << R"({"input_dir": "in", "out": "o", "variants": []})";
  }
  CHECK(cli({"run", "--config", (d / "empty.json").string()}).code == 2);
  CHECK(cli({"run", "--input", (d / "in").string(), "--out", (d / "o").string(), "--variants", "XX-F-0.8"}).code == 2);
  CHECK(cli({"run", "--input", (d / "in").string(), "--out", (d / "o").string(), "--threshold-mode", "bogus"}).code == 2);
  CHECK(cli({"run", "--input", (d / "missing").string(), "--out", (d / "o").string()}).code == 2);
  CHECK(cli({"synth", "--out", (d / "s").string()}).code == 2);
  CHECK(cli({}).code == 2);
}

TEST_CASE("oracle subcommand") {
  const auto d = scratch("oracle");
  REQUIRE(make_small(d / "in").code == 0);
  const auto ok = cli({"oracle", "--input", (d / "in").string()});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("PASS") != std::string::npos);
  CHECK(cli({"oracle", "--input", (d / "in").string(), "--perturb"}).code == 1);

  REQUIRE(cli({"synth", "--seed", "1", "--papers", "150", "--out", (d / "big").string()}).code == 0);
  const auto big = cli({"oracle", "--input", (d / "big").string()});
  CHECK(big.code == 3);
  CHECK(big.err.find("at most 100") != std::string::npos);
}
