#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + ABELS_CLI_PATH + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::ordered_json parse(const Run& r) { return nlohmann::ordered_json::parse(r.out); }

}  // namespace

TEST_CASE("finiteness reports") {
  const auto a = run("finiteness --w1 1,0,0 --w2 0,0,-1");
  REQUIRE(a.code == 0);
  const auto j = parse(a);
  CHECK(j["results"].dump().rfind(R"({"classical":1,"bredon":0,"m":1,"witness":[[1,3],[2]])", 0) == 0);
  const auto b = parse(run("finiteness --w1 2,2,2,2 --w2 1,1,0,-2 --oracle"));
  CHECK(b["results"]["classical"] == 2);
  CHECK(b["results"]["bredon"] == 1);
  CHECK(b["results"]["oracle"]["agrees"] == true);
  const auto text = run("finiteness --w1 1,0,0 --w2 0,0,-1 --format text");
  CHECK(text.out.find("classical: 1\nbredon: 0\n") == 0);
}

TEST_CASE("validation errors exit with 1") {
  const auto r = run("finiteness --w1 0,1 --w2 0,-1");
  CHECK(r.code == 1);
  CHECK(parse(r)["error"]["kind"] == "NotMonotone");
  CHECK(run("finiteness --w1 1,0").code == 1);
  CHECK(run("ball --p 4 --dim 2 --radius 1").code == 1);
  CHECK(run("ball --p 3 --dim 1 --radius 1").code == 1);
  CHECK(run("slice-homology --p 2 --dim 2 --radius 2 --w 1,-1 --interval 1:0").code == 1);
  CHECK(run("slice-homology --p 2 --dim 2 --radius 2 --w 1,0 --interval 0:1").code == 1);
  CHECK(run("nonsense").code == 1);
}

TEST_CASE("resource caps exit with 2") {
  const auto r = run("ball --p 3 --dim 3 --radius 3 --cap 100");
  CHECK(r.code == 2);
  CHECK(parse(r)["error"]["kind"] == "CapExceeded");
}

TEST_CASE("building experiments") {
  const auto b = parse(run("ball --p 3 --dim 2 --radius 1 --model quotient"));
  CHECK(b["results"]["vertices"] == 5);
  CHECK(b["results"]["simplices"]["1"] == 4);
  CHECK(b["truncation"]["cap"] == 50000);
  const auto alias = parse(run("building ball --p 3 --dim 2 --radius 1 --model quotient"));
  CHECK(alias["results"] == b["results"]);
  const auto f = parse(run("fixed-points --p 2 --dim 2 --radius 2 --signs +-"));
  CHECK(f["results"]["fixed"].get<int>() >= 1);
  CHECK(f["results"]["fixed_not_split"].get<int>() >= 1);
  CHECK(f["results"]["product_check"]["holds"] == false);
  const auto g = parse(run("fixed-points --p 3 --dim 3 --radius 1 --signs +-+"));
  CHECK(g["results"]["product_check"]["holds"] == true);
  CHECK(g["results"]["fixed_not_split"] == 0);
  const auto s = parse(run("slice-homology --p 3 --dim 3 --radius 1 --w 1,0,-1 --interval -1:1"));
  CHECK(s["results"]["homology"][0]["k"] == 0);
}

TEST_CASE("slice homology of the tree example") {
  // The tree-walk oracle gives one component for the deep annulus [-2, 0];
  // see the decisions ledger for the comparison with the expected value.
  const auto s = parse(run("slice-homology --p 2 --dim 2 --radius 4 --w 1,-1 --interval -2:0 --deep"));
  CHECK(s["results"]["homology"][0]["betti"] == 0);
  CHECK(s["truncation"]["deep"] == true);
  const auto wide = parse(run("slice-homology --p 2 --dim 2 --radius 6 --w 1,-1 --interval -1:0 --deep"));
  CHECK(wide["results"]["homology"][0]["betti"] == 3);
}

TEST_CASE("file outputs and cache") {
  const auto dir = std::filesystem::temp_directory_path() / "abels-cli-test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const auto dot = dir / "tree.dot";
  const auto complex = dir / "tree.json";
  const std::string flags = "ball --p 2 --dim 2 --radius 2 --dot " + dot.string() + " --complex-json " + complex.string();
  const std::string env = "ABELS_CACHE_DIR=" + (dir / "cache").string();
  const auto first = run(flags, env);
  const auto second = run(flags, env);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(std::filesystem::exists(dir / "cache" / "ball-p2-dim2-r2-quotient.json"));
  CHECK(std::filesystem::exists(dot));
  CHECK(std::filesystem::exists(complex));
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify suites are deterministic") {
  const auto a = run("verify --suite homology --seed 7");
  const auto b = run("verify --suite homology --seed 7");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(parse(a)["results"]["passed"] == true);
  CHECK(run("verify --suite nothing").code == 1);
  const auto timed = parse(run("--timings verify --suite homology"));
  CHECK(timed.contains("timings"));
  CHECK_FALSE(parse(a).contains("timings"));
}
