// End-to-end exercises of the command-line binary: exit-code contract,
// format stability and the documented examples. The binary path arrives as
// argv[1] from ctest.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

std::string g_binary;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = g_binary + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) {
    r.out.append(buf.data(), got);
  }
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("trace --weight 12 prints -24 and exits 0") {
  auto r = run("trace --weight 12");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "-24\n");
  auto r20 = run("trace --weight 20");
  CHECK(r20.out == "456\n");
}

TEST_CASE("json outputs parse and keep integers as decimal strings") {
  auto r = run("--format json trace --weight 40");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["trace"].is_string());
  CHECK(j["weight"] == 40);

  auto h = run("--format json hurwitz --n 12");
  auto hj = nlohmann::json::parse(h.out);
  CHECK(hj["value"] == "4/3");
  CHECK(hj["forms"].size() == 2);
}

TEST_CASE("hurwitz-table csv") {
  auto r = run("--format csv hurwitz-table --max 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "n,value\n0,-1/12\n1,0\n2,0\n3,1/3\n4,1/2\n");
}

TEST_CASE("verify theorem small range exits 0 with empty collisions") {
  auto r = run("--format json verify theorem --kmax 100");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j[0]["status"] == "pass");
  CHECK(j[0]["stage"] == "theorem");
}

TEST_CASE("search repeats reports the expected witness") {
  auto r = run("--format json search repeats --sequence eps-minus --max 1000");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["sequence_id"] == "a_plus_2n");
  REQUIRE(j["collisions"].size() == 1);
  CHECK(j["collisions"][0]["m"] == 5);
  CHECK(j["collisions"][0]["n"] == 9);
  CHECK(j["collisions"][0]["value"] == "55");
  CHECK(j["collisions"][0]["expected"] == true);
  CHECK(j["primes"].size() == 3);
}

TEST_CASE("schema golden file for the search report") {
  auto r = run("--format json search repeats --sequence a --max 10");
  auto j = nlohmann::json::parse(r.out);
  j["runtime_ms"] = 0;
  const std::string golden =
      R"({"sequence_id":"a","range_max":10,"primes":["4611686018427387847",)"
      R"("4611686018427387817","4611686018427387787"],"collisions":[)"
      R"({"m":1,"n":2,"value":"-1","expected":true},)"
      R"({"m":1,"n":6,"value":"-1","expected":true},)"
      R"({"m":2,"n":6,"value":"-1","expected":true}],)"
      R"("fingerprint_false_positives":0,"runtime_ms":0})";
  CHECK(j.dump() == golden);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("trace").exit_code == 2);            // missing required flag
  CHECK(run("trace --weight 7").exit_code == 2); // odd weight
  CHECK(run("no-such-command").exit_code == 2);
  CHECK(run("").exit_code == 2);
  CHECK(run("search repeats --sequence a --max 10 --primes 7").exit_code == 2);
}

TEST_CASE("injected fault exits 1") {
  auto r = run("--format json verify recurrence --kmax 25 --inject-fault");
  CHECK(r.exit_code == 1);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j[0]["status"] == "fail");
  CHECK(!j[0]["witnesses"].empty());
}

TEST_CASE("verify subcommands pass on small ranges") {
  CHECK(run("verify recurrence --kmax 50").exit_code == 0);
  CHECK(run("verify identities --nmax 100").exit_code == 0);
  CHECK(run("verify valuation --kmax 100").exit_code == 0);
}

TEST_CASE("omega prints residues") {
  auto r = run("omega --t 0 --precision 64");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["mod_4"] == "3");
  auto r8 = run("omega --t 8 --precision 64");
  auto j8 = nlohmann::json::parse(r8.out);
  CHECK(j8["mod_4"] == "2");
}

TEST_CASE("constants and thresholds emit json") {
  auto c = nlohmann::json::parse(run("--format json constants").out);
  CHECK(c["a"]["tolerance"] == 1e-3);
  auto t = nlohmann::json::parse(run("--format json thresholds").out);
  REQUIRE(t.size() == 2);
  CHECK(t[0]["verified_upper"] == 352000);
  CHECK(t[1]["verified_upper"] == 302000);
}

TEST_CASE("pipeline truncated run is deterministic modulo runtimes") {
  const std::string args =
      "--format json pipeline --a-max 600 --eps-max 600 --theorem-kmax 200 "
      "--oracle-kmax 60 --identities-nmax 120 --valuation-kmax 80";
  auto r1 = run(args);
  auto r2 = run(args);
  CHECK(r1.exit_code == 0);
  auto strip = [](const std::string& text) {
    auto j = nlohmann::json::parse(text);
    for (auto& stage : j) stage["runtime_ms"] = 0;
    return j.dump();
  };
  CHECK(strip(r1.out) == strip(r2.out));
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_e2e <path-to-binary>\n");
    return 1;
  }
  g_binary = argv[1];
  doctest::Context ctx;
  ctx.applyCommandLine(1, argv);
  return ctx.run();
}
