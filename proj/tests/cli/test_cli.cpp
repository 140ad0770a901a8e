#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef CWL_CLI_PATH
#error "CWL_CLI_PATH must point at the cwl executable"
#endif

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" CWL_CLI_PATH "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (const auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

void check_round_trip(const std::string& out) {
  REQUIRE(!out.empty());
  CHECK(out.back() == '\n');
  const auto body = out.substr(0, out.size() - 1);
  CHECK(body.find('\n') == std::string::npos);
  CHECK(nlohmann::json::parse(body).dump() == body);
}

}  // namespace

TEST_CASE("check") {
  auto r = run("check 10 8,3,3,3,8");
  CHECK(r.status == 0);
  CHECK(r.out.find("solution with sign") != std::string::npos);
  r = run("check 5 1,1,1");
  CHECK(r.out.find("solution with sign -1") != std::string::npos);
  r = run("check 5 1,2");
  CHECK(r.status == 0);
  CHECK(r.out.find("not a solution") != std::string::npos);
  CHECK(run("check 5 1,x").status == 2);
  CHECK(run("check 1 1,1").status == 2);
}

TEST_CASE("monomial") {
  auto r = run("monomial 16 --all");
  CHECK(r.status == 0);
  CHECK(r.out.find("irreducible count: 13") != std::string::npos);
  r = run("monomial 9 3");
  CHECK(r.out.find("h=6") != std::string::npos);
  CHECK(r.out.find(" reducible") != std::string::npos);
  r = run("monomial 7 2");
  CHECK(r.out.find("h=7") != std::string::npos);
  CHECK(r.out.find("irreducible") != std::string::npos);
  CHECK(run("monomial 7 7").status == 2);
  CHECK(run("monomial 7 -1").status == 2);
}

TEST_CASE("verify") {
  CHECK(run("verify --preset prime-powers").status == 0);
  auto r = run("verify --N 10");
  CHECK(r.status == 0);
  CHECK(r.out.find("reference_cases [N=10]") != std::string::npos);
  CHECK(run("verify --N 2..6").status == 0);
  CHECK(run("verify --preset huge").status == 2);
  CHECK(run("verify --N 6..2").status == 2);
  CHECK(run("verify --preset small --N 3").status == 2);
}

TEST_CASE("verify is deterministic across runs and threads") {
  const auto a = run("verify --preset small");
  const auto b = run("verify --preset small");
  const auto c = run("verify --preset small --threads 3");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
}

TEST_CASE("thin wrappers") {
  CHECK(run("sum 11 3,2,1 1,2,3").out == "6,2,2,2\n");
  CHECK(run("sum 7 -2,0,-1,1 3,-2,2").out == "0,0,6,4,5\n");
  CHECK(run("sum 7 1 2,3").status == 2);
  CHECK(run("canon 5 3,1,2").out == "1,2,3\n");
  CHECK(run("roots 10 3").out == "0,3,5,8\n");
  CHECK(run("phi 30").out == "8\n");
  CHECK(run("factor 30").out == "30 = 2 * 3 * 5\n");
  CHECK(run("binom-val 8 3 2").out == "3\n");
  CHECK(run("binom-val 3 8 2").status == 2);
  CHECK(run("phi 0").status == 2);
}

TEST_CASE("enumerate") {
  auto r = run("enumerate 5 3");
  CHECK(r.status == 0);
  CHECK(r.out == "N=5 n=3 total=2\n1,1,1\n4,4,4\n");
  r = run("enumerate 5 3 --format csv");
  CHECK(r.out == "a1,a2,a3\n1,1,1\n4,4,4\n");
  r = run("enumerate 4 2 --format json");
  CHECK(r.out == "{\"N\":4,\"n\":2,\"representatives\":[[0,0]],\"total\":1}\n");
  CHECK(run("enumerate 10 3", "CWL_BUDGET=100").status == 2);
  CHECK(run("enumerate 10 3", "CWL_BUDGET=2000").status == 0);
  CHECK(run("enumerate 10 3", "CWL_BUDGET=abc").status == 2);
  CHECK(run("enumerate 30 8").status == 2);
  CHECK(run("enumerate 6 4 --dedup --threads 2").out == run("enumerate 6 4 --dedup").out);
}

TEST_CASE("json output round-trips") {
  for (const char* args :
       {"check 10 8,3,3,3,8", "monomial 16 --all", "monomial 10 3", "verify --N 4",
        "sum 7 1,2,3 1,1,1", "canon 6 0,4,0,2", "enumerate 6 4 --dedup", "roots 12 4", "phi 9",
        "factor 360", "binom-val 60 30 6", "size 30 6", "family odd_boundary 3 3 1 1",
        "matrix-identity 4 3", "oracle 10 3,3,3,3,3,3,3,3,3,3,3,3,3,3,3"}) {
    CAPTURE(args);
    const auto r = run(std::string(args) + " --format json");
    CHECK(r.status == 0);
    check_round_trip(r.out);
  }
}

TEST_CASE("csv output has a header row") {
  const auto r = run("monomial 8 --all --format csv");
  CHECK(r.out.rfind("k,h,sign,irreducible,certificate\n", 0) == 0);
}

TEST_CASE("usage errors") {
  CHECK(run("").status == 2);
  CHECK(run("nosuch 3").status == 2);
  CHECK(run("check 10").status == 2);
  CHECK(run("check 10 1,2 --format xml").status == 2);
  CHECK(run("--help").status == 0);
  CHECK(run("family odd_boundary 2 3 1 1").status == 2);
  CHECK(run("matrix-identity 4 2").status == 2);
}
