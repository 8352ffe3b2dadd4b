#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "stardec/cli.hpp"
#include "stardec/error.hpp"
#include "stardec/families.hpp"
#include "stardec/io.hpp"

using namespace stardec;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "stardec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch() {
  const auto dir = std::filesystem::temp_directory_path() / "stardec_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("decompose complete graphs") {
  const Run six = run({"decompose", "--complete", "6", "--k", "3"});
  CHECK(six.code == kExitOk);
  const StarDecomposition d = decomposition_from_json(Json::parse(six.out));
  CHECK(d.stars.size() == 5);

  const Run five = run({"decompose", "--complete", "5", "--k", "3"});
  CHECK(five.code == kExitOk);
  CHECK(Json::parse(five.out).at("exists") == false);
  CHECK(five.err.find("none exists") != std::string::npos);
}

TEST_CASE("decompose graph files") {
  const auto dir = scratch();
  write_text(dir / "tri.txt", "3\n0 1\n1 2\n0 2\n");
  const Run tri = run({"decompose", "--graph", (dir / "tri.txt").string(), "--k", "2"});
  CHECK(tri.code == kExitOk);
  CHECK(Json::parse(tri.out).at("odd_component").at("edge_count") == 3);

  write_text(dir / "path.json", "{\"n\":3,\"edges\":[[0,1],[1,2]]}");
  const Run path = run({"decompose", "--graph", (dir / "path.json").string(), "--k", "2",
                        "--dot", (dir / "path.dot").string()});
  CHECK(path.code == kExitOk);
  CHECK(read_text(dir / "path.dot").find("graph stars") == 0);

  write_text(dir / "gamma.json", "[1,1,1,1,1,0]");
  write_graph(dir / "k6.json", complete_graph(6));
  const Run prescribed = run({"decompose", "--graph", (dir / "k6.json").string(), "--k", "3", "--gamma",
                              (dir / "gamma.json").string()});
  CHECK(prescribed.code == kExitOk);
  CHECK(Json::parse(prescribed.out).at("stars").size() == 5);

  write_text(dir / "bad.txt", "3\n0 7\n");
  CHECK(run({"decompose", "--graph", (dir / "bad.txt").string(), "--k", "3"}).code == kExitInput);
  CHECK(run({"decompose", "--k", "3"}).code == kExitInput);
  CHECK(run({"decompose", "--complete", "4"}).code == kExitInput);
}

TEST_CASE("budget flag and environment precedence") {
  const auto dir = scratch();
  write_graph(dir / "k12.txt", complete_graph(12));
  const std::string file = (dir / "k12.txt").string();

  const Run tight = run({"decompose", "--graph", file, "--k", "3", "--budget", "1"});
  CHECK(tight.code == kExitBudget);

  ::setenv(kBudgetEnv, "1", 1);
  CHECK(resolve_budget(std::nullopt, 99) == 1);
  CHECK(resolve_budget(7, 99) == 7);
  CHECK(run({"decompose", "--graph", file, "--k", "3"}).code == kExitBudget);
  CHECK(run({"decompose", "--graph", file, "--k", "3", "--budget", "1000000"}).code == kExitOk);
  ::setenv(kBudgetEnv, "lots", 1);
  CHECK_THROWS_AS(resolve_budget(std::nullopt, 99), InvalidInput);
  CHECK(run({"decompose", "--graph", file, "--k", "3"}).code == kExitInput);
  ::unsetenv(kBudgetEnv);
  CHECK(resolve_budget(std::nullopt, 99) == 99);
}

TEST_CASE("embed writes a certificate") {
  const auto dir = scratch();
  write_text(dir / "leave.txt", "8\n0 1\n");
  const auto cert_path = dir / "cert.json";
  const Run r = run({"embed", "--leave", (dir / "leave.txt").string(), "--k", "3", "--out", cert_path.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  const EmbeddingCertificate c = certificate_from_json(Json::parse(read_text(cert_path)));
  CHECK(c.s == 4);
  CHECK(c.rejections.size() == 4);

  const Run capped = run({"embed", "--leave", (dir / "leave.txt").string(), "--k", "3", "--max-s", "3"});
  CHECK(capped.code == kExitBudget);

  write_text(dir / "notleave.txt", "3\n0 1\n");
  CHECK(run({"embed", "--leave", (dir / "notleave.txt").string(), "--k", "3"}).code == kExitInput);
}

TEST_CASE("family command") {
  const Run r = run({"family", "--id", "single-edge", "--k", "3", "--n", "8", "--verify"});
  CHECK(r.code == kExitOk);
  const FamilyReport report = report_from_json(Json::parse(r.out));
  CHECK(report.ok());
  CHECK(r.err.find("no-decomposition-at-k-1: verified") != std::string::npos);

  const Run instance = run({"family", "--id", "even-bound", "--t", "3"});
  CHECK(instance.code == kExitOk);
  CHECK(Json::parse(instance.out).at("leave").at("n") == 28);

  CHECK(run({"family", "--id", "single-edge", "--k", "4", "--n", "10"}).code == kExitInput);
  CHECK(run({"family", "--id", "nonsense"}).code == kExitInput);
  CHECK(run({"family", "--id", "bound-n"}).code == kExitInput);

  const Run scan = run({"family", "--id", "odd-bound", "--scan", "3", "60"});
  CHECK(scan.code == kExitOk);
  CHECK(Json::parse(scan.out).at("smallest_k_all_hold") == 13);
}

TEST_CASE("sweep command is reproducible") {
  const std::vector<std::string> args{"sweep", "--k", "2..3", "--n-max", "7", "--seeds", "2"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("# stardec-sweep v1\n", 0) == 0);
  // header + 2 seeds * (5 + 4) cells
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 2 + 18);
}

TEST_CASE("bounds command") {
  const Run r = run({"bounds", "--k", "8"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("\n8,,8,") != std::string::npos);
  const Run grid = run({"bounds", "--k", "3", "--n", "100"});
  CHECK(grid.out.find("\n3,100,") != std::string::npos);
  CHECK(run({"bounds", "--k", "1"}).code == kExitInput);
  CHECK(run({"bounds", "--k", "x"}).code == kExitInput);
}

TEST_CASE("argument errors") {
  CHECK(run({}).code == kExitInput);
  CHECK(run({"frobnicate"}).code == kExitInput);
  CHECK(run({"--help"}).code == kExitOk);
}
