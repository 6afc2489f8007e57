#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "jfrt/error.hpp"
#include "jfrt/io.hpp"
#include "jfrt/joint.hpp"
#include "oracles.hpp"

using namespace jfrt;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "jfrt");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("jfrt_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("parse_grid") {
  CHECK(cli::parse_grid("0.8:1.2:0.1") == std::vector<double>{0.8, 0.9, 1.0, 1.1, 1.2});
  CHECK(cli::parse_grid("0:1:0.25") == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK(cli::parse_grid("0.905") == std::vector<double>{0.905});
  CHECK(cli::parse_grid("0.4,3.8,1") == std::vector<double>{0.4, 3.8, 1.0});
  CHECK(cli::parse_grid("1:1:0.5") == std::vector<double>{1.0});
  CHECK_THROWS_AS(cli::parse_grid("1:0:0.1"), Error);
  CHECK_THROWS_AS(cli::parse_grid("0:1:0"), Error);
  CHECK_THROWS_AS(cli::parse_grid("0:1"), Error);
  CHECK_THROWS_AS(cli::parse_grid("a,b"), Error);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"transform", "--alpha", "0.5"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"transform", "--signal", "/nonexistent.csv", "--graph", "/nonexistent.csv"}).code == 2);
}

TEST_CASE("synth, transform and inverse") {
  TempDir dir;
  const auto prefix = dir / "s";
  REQUIRE(run({"synth", "--kind", "smooth", "--n", "12", "--t", "16", "--seed", "3", "--out-prefix", prefix}).code == 0);
  for (const char* suffix : {"_coords.csv", "_edges.csv", "_signal.csv"}) CHECK(fs::exists(prefix + suffix));
  CHECK_FALSE(fs::exists(prefix + "_labels.csv"));

  const auto forward = run({"transform", "--signal", prefix + "_signal.csv", "--graph", prefix + "_edges.csv",
                            "--alpha", "0.905", "--beta", "1.1", "--out", dir / "y.csv"});
  REQUIRE(forward.code == 0);
  const auto back = run({"transform", "--signal", dir / "y.csv", "--graph", prefix + "_edges.csv", "--alpha", "0.905",
                         "--beta", "1.1", "--inverse"});
  REQUIRE(back.code == 0);
  std::istringstream back_in(back.out);
  const ComplexMatrix recovered = parse_signal_csv(back_in);
  const ComplexMatrix original = read_signal_csv(prefix + "_signal.csv");
  CHECK(frobenius_distance(recovered, original) <= 1e-8 * original.frobenius_norm());

  // library oracle for the forward output
  const Graph g = read_edge_list_csv(prefix + "_edges.csv");
  const ComplexMatrix expected = jfrt_forward({original}, gft_from_laplacian(laplacian(g)), {0.905, 1.1}).values;
  CHECK(read_signal_csv(dir / "y.csv") == expected);

  // k-NN spec from the coordinates reproduces the saved edge list
  const auto knn = run({"transform", "--signal", prefix + "_signal.csv", "--graph", "knn:5:" + prefix + "_coords.csv",
                        "--alpha", "0.905", "--beta", "1.1"});
  REQUIRE(knn.code == 0);
  CHECK(knn.out == slurp(dir / "y.csv"));

  CHECK(run({"transform", "--signal", prefix + "_signal.csv", "--graph", "knn:x:" + prefix + "_coords.csv"}).code == 2);
  CHECK(run({"transform", "--signal", prefix + "_signal.csv", "--graph", prefix + "_edges.csv", "--gft", "nope"}).code ==
        2);
}

TEST_CASE("denoise-sweep writes the CSV and JSON summary") {
  TempDir dir;
  const auto prefix = dir / "s";
  REQUIRE(run({"synth", "--kind", "smooth", "--n", "10", "--t", "24", "--seed", "5", "--out-prefix", prefix}).code == 0);
  const std::vector<std::string> args{"denoise-sweep", "--signal", prefix + "_signal.csv", "--coords",
                                      prefix + "_coords.csv", "--alpha-grid", "0.9:1.1:0.1", "--beta-grid", "1",
                                      "--tau-g-grid", "0,1", "--tau-t-grid", "0,2", "--snr-db", "0", "--seed", "4",
                                      "--out", dir / "sweep.csv"};
  REQUIRE(run(args).code == 0);
  const std::string csv = slurp(dir / "sweep.csv");
  CHECK(csv.rfind("alpha,beta,tau_g,tau_t,mse_percent\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 3 * 1 * 2 * 2);
  const auto summary = nlohmann::json::parse(slurp(dir / "sweep.csv.json"));
  CHECK(summary["grid_shape"] == nlohmann::json::array({3, 1, 2, 2}));
  CHECK(summary["argmin"]["mse_percent"].get<double>() <= summary["noisy_mse_percent"].get<double>());

  auto clean = args;
  clean[clean.size() - 5] = "inf";
  clean.back() = dir / "clean.csv";
  REQUIRE(run(clean).code == 0);
  const auto clean_summary = nlohmann::json::parse(slurp(dir / "clean.csv.json"));
  CHECK(clean_summary["noisy_mse_percent"].get<double>() == 0.0);

  // an explicit noisy file replaces the internal noise
  std::ofstream(dir / "noisy.csv") << slurp(prefix + "_signal.csv");
  auto given = args;
  given.insert(given.begin() + 1, {"--noisy", dir / "noisy.csv"});
  given.back() = "-";
  const auto piped = run(given);
  REQUIRE(piped.code == 0);
  CHECK(piped.out.find("\"argmin\"") != std::string::npos);

  auto bad = args;
  bad[6] = "1:0:0.1";
  CHECK(run(bad).code == 2);
}

TEST_CASE("cluster on motion3 data") {
  TempDir dir;
  const auto prefix = dir / "m";
  REQUIRE(run({"synth", "--kind", "motion3", "--n", "16", "--t", "200", "--seed", "2", "--out-prefix", prefix}).code ==
          0);
  const std::vector<std::string> args{"cluster", "--signals", prefix + "_x.csv," + prefix + "_y.csv," + prefix + "_z.csv",
                                      "--coords", prefix + "_coords.csv", "--labels", prefix + "_labels.csv",
                                      "--window", "40", "--overlap", "0.5", "--alpha-grid", "1", "--beta-grid", "0.9,1",
                                      "--repeats", "2", "--n-init", "2", "--seed", "7"};
  const auto r = run(args);
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("method,alpha,beta,mean,min,q1,median,q3,max\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1 + 2 + 1 + 4);
  CHECK(run(args).out == r.out);

  auto wrong_labels = args;
  wrong_labels[6] = prefix + "_coords.csv";
  CHECK(run(wrong_labels).code == 2);
}

TEST_CASE("installed binary reports exit codes") {
  const std::string tool = JFRT_TOOL_PATH;
  auto status = [](const std::string& cmd) {
    const int raw = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status(tool + " --help") == 0);
  CHECK(status(tool + " transform") == 2);
  TempDir dir;
  CHECK(status(tool + " synth --kind motion3 --n 6 --t 40 --out-prefix " + (dir / "p")) == 0);
  CHECK(status(tool + " synth --kind motion3 --n 2 --t 40 --out-prefix " + (dir / "p")) == 2);
}

TEST_CASE("error kinds map to exit classes") {
  CHECK(is_numerical(ErrorKind::ConvergenceFailure));
  CHECK(is_numerical(ErrorKind::Defective));
  CHECK(is_numerical(ErrorKind::NonRealQuadraticForm));
  CHECK_FALSE(is_numerical(ErrorKind::ParseError));
  CHECK_FALSE(is_numerical(ErrorKind::WindowTooLarge));
  CHECK(to_string(ErrorKind::BadDensity) == "BadDensity");
}
