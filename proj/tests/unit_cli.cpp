#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "subfock/cli.hpp"

using subfock::cli::Result;
using subfock::cli::run;

namespace {

const std::string data_dir = SUBFOCK_DATA_DIR;

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("dims prints m,dim pairs", "[cli]") {
  const Result r = run({"dims", "--system", "symmetric", "--n", "2", "--M", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "0,1\n1,2\n2,3\n3,4\n");
  const Result f = run({"dims", "--system", "full", "--n", "3", "--M", "2"});
  CHECK(f.out == "0,1\n1,3\n2,9\n");
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(run({"validate", "--ideal", data_dir + "/qplane.toml", "--M", "4"}).code == 0);
  CHECK(run({"validate", "--ideal", data_dir + "/qplane.json", "--M", "4"}).code == 0);
  CHECK(run({"invariants", "--system", "symmetric", "--M", "5"}).code == 0);
  CHECK(run({"invariants", "--system", "quantum_plane", "--q", "0.5", "--weights", "2,0.5", "--M", "4"}).code == 0);
  // Invariant weights that do not make j unital.
  CHECK(run({"invariants", "--system", "quantum_plane", "--q", "0.5", "--weights", "1,1", "--M", "4"}).code == 1);
  CHECK(run({"invariants", "--system", "monomial", "--monomials", "z1*z1", "--M", "3"}).code == 1);
  CHECK(run({"build", "--system", "symmetric", "--n", "2", "--M", "3", "--weights", "1,2"}).code == 0);

  const Result bad_poly = run({"validate", "--system", "monomial", "--monomials", "z1*", "--M", "3"});
  CHECK(bad_poly.code == 2);
  CHECK(bad_poly.err.find("error:") != std::string::npos);
  CHECK(run({"dims", "--system", "nonsense"}).code == 2);
  CHECK(run({"dims", "--system", "full", "--seed", "0xZZ"}).code == 2);
  CHECK(run({"dims", "--system", "full", "--format", "xml"}).code == 2);
  CHECK(run({"dims", "--system", "full", "--bogus"}).code == 2);
  CHECK(run({"--system", "full"}).code == 2);
  CHECK(run({"invariants", "--system", "symmetric", "--weights", "1,2,3"}).code == 2);
  CHECK(run({"invariants", "--system", "symmetric", "--weights", "1,-2"}).code == 2);
  CHECK(run({"dims", "--system", "full", "--n", "2", "--M", "20"}).code == 2);
  CHECK(run({"markov", "--system", "symmetric", "--M", "5", "--f", "Zd1*Z1"}).code == 2);

  CHECK(run({"berezin", "--system", "symmetric", "--M", "2", "--f", "Z1*Zd1"}).code == 3);
  CHECK(run({"strict", "--system", "symmetric", "--M", "3", "--f", "Z1*Zd1", "--g", "Z2*Zd2"}).code == 3);
}

TEST_CASE("invariance failure exits 1", "[cli]") {
  const Result bad = run({"invariants", "--system", "monomial", "--monomials", "z1*z1 - z2*z2", "--weights", "1,2", "--M", "3"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("\nweight_invariance,0.375,1e-08,fail\n") != std::string::npos);
}

TEST_CASE("help exits 0", "[cli]") {
  const Result r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("invariants") != std::string::npos);
}

TEST_CASE("csv reports carry a header and the seed", "[cli]") {
  const Result r = run({"invariants", "--system", "symmetric", "--M", "4", "--seed", "7"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("# invariants: ", 0) == 0);
  CHECK(r.out.find("# seed=0x7\n") != std::string::npos);
  CHECK(r.out.find("subproduct_law") != std::string::npos);
  CHECK(r.out.find(",fail") == std::string::npos);
}

TEST_CASE("json output", "[cli]") {
  const Result a = run({"invariants", "--system", "symmetric", "--M", "4", "--json"});
  const Result b = run({"invariants", "--system", "symmetric", "--M", "4", "--format", "json"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["command"] == "invariants");
  CHECK(j["passed"] == true);
  CHECK(j["seed"] == "0xb3");
  CHECK(j["rows"].size() > 5);
  const auto fail = nlohmann::json::parse(run({"invariants", "--system", "quantum_plane", "--q", "0.5", "--M", "3", "--json"}).out);
  CHECK(fail["passed"] == false);
  CHECK(fail["exit_code"] == 1);
}

TEST_CASE("config file", "[cli]") {
  const Result a = run({"invariants", "--config", data_dir + "/symmetric_run.toml"});
  const Result b = run({"invariants", "--system", "symmetric", "--n", "2", "--M", "6", "--seed", "0xB3"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  // Command-line flags win over the file.
  const Result c = run({"dims", "--config", data_dir + "/symmetric_run.toml", "--M", "2"});
  CHECK(c.out == "0,1\n1,2\n2,3\n");
}

TEST_CASE("reports written to a directory", "[cli]") {
  const auto dir = std::filesystem::temp_directory_path() / "subfock_cli_out";
  std::filesystem::remove_all(dir);
  const Result r = run({"strict", "--system", "symmetric", "--M", "7", "--f", "Z1*Zd1", "--g", "Z2*Zd2", "--out", dir.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(std::filesystem::exists(dir / "strict.csv"));
  const auto summary = nlohmann::json::parse(slurp(dir / "summary.json"));
  CHECK(summary["command"] == "strict");
  CHECK(summary["passed"] == true);
  CHECK(slurp(dir / "strict.csv") == run({"strict", "--system", "symmetric", "--M", "7", "--f", "Z1*Zd1", "--g", "Z2*Zd2"}).out);
  std::filesystem::remove_all(dir);
}

TEST_CASE("runs are deterministic", "[cli]") {
  const std::vector<std::string> args = {"invariants", "--system", "quantum_plane", "--q", "0.5", "--weights", "2,0.5", "--M", "4"};
  CHECK(run(args).out == run(args).out);
  const auto seeded = [](const char* s) { return run({"invariants", "--system", "full", "--M", "3", "--seed", s}).out; };
  CHECK(seeded("1") == seeded("0x1"));
  CHECK(seeded("1") != seeded("2"));
}

TEST_CASE("report commands", "[cli]") {
  const Result b = run({"berezin", "--system", "symmetric", "--M", "11", "--f", "Z1*Zd1"});
  REQUIRE(b.code == 0);
  CHECK(b.out.find("\n1,0.303030303") != std::string::npos);
  const Result a = run({"arveson", "--ideal", data_dir + "/z1sq.toml", "--M", "6"});
  CHECK(a.code == 0);
  const Result qa = run({"arveson", "--system", "quantum_plane", "--q", "0.5", "--M", "4"});
  CHECK(qa.code == 0);
  const Result m = run({"markov", "--system", "symmetric", "--M", "8", "--f", "Z1*Zd1", "--y", "Z2*Zd2", "--m", "1"});
  CHECK(m.code == 0);
  const Result x = run({"markov", "--system", "symmetric", "--M", "6", "--x", "Zd1*Z1"});
  CHECK(x.code == 0);
  CHECK(run({"markov", "--system", "symmetric", "--M", "6", "--f", "Z1*Zd1", "--x", "Zd1*Z1"}).code == 2);
  const Result q = run({"qsphere", "--system", "symmetric", "--M", "5"});
  CHECK(q.code == 0);
  CHECK(q.out.find("\n0,1\n") != std::string::npos);
}
