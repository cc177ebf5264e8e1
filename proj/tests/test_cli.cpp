#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fgr/cli.hpp"

using namespace fgr;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / ("fgred-cli-" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("gen and solve round trip") {
  TempDir dir;
  const auto dg = dir / "p.dg";
  REQUIRE(cli({"gen", "--kind", "planted-kcycle", "--n", "12", "--m", "30", "--k", "5", "--seed", "7", "--out", dg})
              .code == 0);
  auto oracle = cli({"solve", "--problem", "min-kcycle", "--algo", "oracle", "--in", dg, "--k", "5"});
  REQUIRE(oracle.code == 0);
  CHECK(oracle.out.rfind("found ", 0) == 0);
  for (const char* algo : {"fast", "color-coding", "shortest-cycle", "density"}) {
    auto r = cli({"solve", "--problem", "min-kcycle", "--algo", algo, "--in", dg, "--k", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == oracle.out);
  }
  const auto wit = dir / "w.txt";
  auto stats = cli({"solve", "--problem", "min-kcycle", "--algo", "fast", "--in", dg, "--k", "5", "--stats",
                    "--witness", wit});
  CHECK(stats.out.find("\"paths_enumerated\"") != std::string::npos);
  CHECK(slurp(wit).rfind("witness cycle", 0) == 0);
}

TEST_CASE("reduce writes sidecars") {
  TempDir dir;
  const auto hg = dir / "c.hg";
  const auto lay = dir / "c.lay";
  REQUIRE(cli({"gen", "--kind", "planted-kclique", "--k", "5", "--part-size", "2", "--out", hg}).code == 0);
  auto r = cli({"reduce", "--from", "clique", "--to", "cycle", "--in", hg, "--out", lay});
  REQUIRE(r.code == 0);
  CHECK(r.out == "nodes 20 edges 40\n");
  CHECK(slurp(lay + ".weight_map") == "scale 1 shift 0\n");
  auto a = cli({"solve", "--problem", "min-clique", "--in", hg});
  auto b = cli({"solve", "--problem", "min-kcycle", "--algo", "oracle", "--in", lay});
  CHECK(a.out == b.out);

  const auto rad = dir / "r.dg";
  REQUIRE(cli({"reduce", "--from", "kcycle", "--to", "radius", "--in", lay, "--out", rad}).code == 0);
  CHECK(slurp(rad + ".threshold").rfind("threshold ", 0) == 0);
  const auto wie = dir / "w.dg";
  REQUIRE(cli({"reduce", "--from", "kcycle", "--to", "wiener-unweighted", "--in", lay, "--out", wie}).code == 0);
  CHECK(slurp(wie + ".subgraphs").rfind("core ", 0) == 0);
  CHECK(cli({"solve", "--problem", "radius", "--algo", "apsp", "--in", rad}).out ==
        cli({"solve", "--problem", "radius", "--in", rad}).out);
}

TEST_CASE("CNF pipeline through the CLI") {
  TempDir dir;
  const auto cnf = dir / "f.cnf";
  REQUIRE(cli({"gen", "--kind", "cnf", "--n", "6", "--m", "14", "--k", "3", "--seed", "4", "--out", cnf}).code == 0);
  auto want = cli({"solve", "--problem", "maxsat", "--in", cnf});
  for (const char* algo : {"hyperclique", "cycle", "guessing"})
    CHECK(cli({"solve", "--problem", "maxsat", "--algo", algo, "--in", cnf, "--l", "4"}).out == want.out);
}

TEST_CASE("verify exit codes") {
  auto ok = cli({"verify", "--reduction", "clique-cycle", "--trials", "20"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("mismatches 0") != std::string::npos);
  auto bad = cli({"verify", "--reduction", "clique-cycle", "--trials", "5", "--corrupt-for-test"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("first_failure") != std::string::npos);
  std::filesystem::remove_all("fgred-failures");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"solve", "--problem", "min-kcycle"}).code == 2);
  CHECK(cli({"solve", "--problem", "nope", "--in", "/nonexistent"}).code == 2);
  CHECK(cli({"gen", "--kind", "nope"}).code == 2);
  CHECK(cli({"verify", "--reduction", "nope"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({"bench", "--schedule", "x"}).code == 2);
}

TEST_CASE("malformed input reports a parse error") {
  TempDir dir;
  const auto bad = dir / "bad.dg";
  std::ofstream(bad) << "digraph 2 1\n0 1 x\n";
  auto r = cli({"solve", "--problem", "min-kcycle", "--in", bad, "--k", "2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("bench CSV and slope") {
  std::ostringstream csv;
  BenchOptions o;
  o.log2_m = {6, 7, 8};
  o.repeats = 1;
  o.trials = 1;
  auto r = run_bench(o, &csv);
  CHECK(r.rows.size() == 3);
  CHECK(csv.str().rfind(bench_csv_header(), 0) == 0);
  CHECK(r.slope.has_value());
  CHECK(*loglog_slope({1, 2, 4}, {1, 4, 16}) == doctest::Approx(2.0));
  CHECK_FALSE(loglog_slope({1}, {1}).has_value());
  auto out = cli({"bench", "--schedule", "6,7", "--trials", "1", "--repeats", "1"});
  CHECK(out.code == 0);
  CHECK(out.out.find("slope ") != std::string::npos);
}

TEST_CASE("binary entry point") {
  const std::string cmd = std::string(FGRED_BINARY) + " solve --problem bogus --in /nonexistent 2>/dev/null";
  const int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 2);
}
