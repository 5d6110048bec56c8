// Drives the installed command-line binary as a subprocess. The harness
// passes its location in RMSC_CLI.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "io.hpp"

namespace fs = std::filesystem;

namespace {

std::string cli_path() {
  const char* env = std::getenv("RMSC_CLI");
  REQUIRE_MESSAGE(env != nullptr, "set RMSC_CLI to the command-line binary");
  return env;
}

struct RunResult {
  int exit_code = -1;
  std::string err;
};

// Runs the binary with stderr captured to a scratch file.
RunResult run_cli(const std::string& args, const fs::path& scratch) {
  fs::path errfile = scratch / "stderr.txt";
  std::string cmd = "'" + cli_path() + "' " + args + " 2>'" + errfile.string() + "'";
  int raw = std::system(cmd.c_str());
  RunResult res;
  res.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(errfile);
  std::ostringstream ss;
  ss << in.rdbuf();
  res.err = ss.str();
  return res;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(bool(in));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("rmsc-cli-" + tag + "-" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

// Benchmark generated once through the binary itself.
const fs::path& bench_dir() {
  static TempDir dir("bench");
  static bool ready = false;
  if (!ready) {
    RunResult r = run_cli("gen-synthetic --output-dir '" + (dir.path / "data").string() +
                              "' --nodes 60 --seed 5",
                          dir.path);
    REQUIRE_MESSAGE(r.exit_code == 0, r.err);
    ready = true;
  }
  return dir.path;
}

std::string quoted(const fs::path& p) { return "'" + p.string() + "'"; }

}  // namespace

TEST_CASE("cli: help and bad usage") {
  TempDir dir("usage");
  CHECK(run_cli("--help", dir.path).exit_code == 0);
  CHECK(run_cli("classify --help", dir.path).exit_code == 0);
  CHECK(run_cli("", dir.path).exit_code != 0);            // a subcommand is required
  CHECK(run_cli("frobnicate", dir.path).exit_code != 0);  // unknown subcommand
}

TEST_CASE("cli: gen-synthetic writes the benchmark files") {
  const fs::path& base = bench_dir();
  CHECK(fs::exists(base / "data" / "manifest.txt"));
  CHECK(fs::exists(base / "data" / "truth.labels"));
  CHECK(fs::exists(base / "data" / "view0.edges"));
  CHECK(fs::exists(base / "data" / "view4.edges"));
}

TEST_CASE("cli: classify writes scores and weights") {
  const fs::path& base = bench_dir();
  TempDir dir("classify");
  fs::path out = dir.path / "out";
  RunResult r = run_cli(
      "classify --manifest " + quoted(base / "data" / "manifest.txt") + " --labels " +
          quoted(base / "data" / "truth.labels") + " --method eql --output-dir " + quoted(out),
      dir.path);
  REQUIRE_MESSAGE(r.exit_code == 0, r.err);

  auto results = rmsc::read_csv((out / "results.csv").string());
  REQUIRE(results.size() == 61u);
  CHECK(results[0] == std::vector<std::string>{"node", "score", "input_label"});
  auto weights = rmsc::read_csv((out / "weights.csv").string());
  REQUIRE(weights.size() == 6u);
  CHECK(weights[0] == std::vector<std::string>{"view", "weight"});
  CHECK_FALSE(fs::exists(out / "removal_log.csv"));  // not a subset-search method
}

TEST_CASE("cli: config file plus --set overrides") {
  const fs::path& base = bench_dir();
  TempDir dir("config");
  fs::path cfg = dir.path / "run.cfg";
  {
    std::ofstream f(cfg);
    f << "manifest = " << (base / "data" / "manifest.txt").string() << "\n"
      << "labels = " << (base / "data" / "truth.labels").string() << "\n"
      << "methods = eql\nrepeats = 2\nfractions = 0.3\nfolds = 3\n";
  }
  fs::path out = dir.path / "out";
  RunResult r = run_cli("label-sweep --config " + quoted(cfg) + " --output-dir " + quoted(out),
                        dir.path);
  REQUIRE_MESSAGE(r.exit_code == 0, r.err);
  CHECK(fs::exists(out / "results.csv"));
  CHECK(fs::exists(out / "summary.csv"));

  // identical settings, identical bytes
  fs::path out2 = dir.path / "out2";
  RunResult r2 = run_cli("label-sweep --config " + quoted(cfg) + " --output-dir " + quoted(out2),
                         dir.path);
  REQUIRE_MESSAGE(r2.exit_code == 0, r2.err);
  CHECK(slurp(out / "results.csv") == slurp(out2 / "results.csv"));

  // a --set override changes the run
  fs::path out3 = dir.path / "out3";
  RunResult r3 = run_cli("label-sweep --config " + quoted(cfg) + " --output-dir " + quoted(out3) +
                             " --set seed=99",
                         dir.path);
  REQUIRE_MESSAGE(r3.exit_code == 0, r3.err);
  CHECK(slurp(out / "results.csv") != slurp(out3 / "results.csv"));
}

TEST_CASE("cli: errors land on stderr with a nonzero exit") {
  TempDir dir("errors");
  RunResult missing = run_cli(
      "classify --manifest /nonexistent/m.txt --labels /nonexistent/l.txt --output-dir " +
          quoted(dir.path / "out"),
      dir.path);
  CHECK(missing.exit_code == 1);
  CHECK(missing.err.find("error:") != std::string::npos);
  CHECK(missing.err.find("m.txt") != std::string::npos);

  RunResult badkey = run_cli("gen-synthetic --set banana=1 --output-dir " +
                                 quoted(dir.path / "out2"),
                             dir.path);
  CHECK(badkey.exit_code == 1);
  CHECK(badkey.err.find("banana") != std::string::npos);

  RunResult badpair = run_cli("gen-synthetic --set nonsense --output-dir " +
                                  quoted(dir.path / "out3"),
                              dir.path);
  CHECK(badpair.exit_code == 1);
  CHECK(badpair.err.find("key=value") != std::string::npos);
}
