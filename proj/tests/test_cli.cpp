// Drives the partition-meter executable and checks output and exit codes.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "doctest.h"
#include "json.hpp"

#ifndef PARTITION_METER_BIN
#error "PARTITION_METER_BIN must name the CLI executable"
#endif

namespace {

struct Result {
  int code = -1;
  std::string out;
};

// Runs the CLI with `args`; `redirect` picks which streams are captured.
Result run(const std::string& args, const std::string& redirect = "2>/dev/null",
           const std::string& env = "") {
  const std::string cmd = env + " '" PARTITION_METER_BIN "' " + args + " " + redirect;
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Result run_stderr(const std::string& args) { return run(args, "2>&1 >/dev/null"); }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("enumerate") {
  auto r = run("enumerate --n 5 --m 2 --format lines");
  CHECK(r.code == 0);
  CHECK(r.out == "2+3\n5\n");

  r = run("enumerate --n 1");
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");

  r = run_stderr("enumerate --n 5 --m 6");
  CHECK(r.code == 2);
  CHECK(r.out.find("m must satisfy 1 ≤ m ≤ n") != std::string::npos);

  r = run("enumerate --n 4 --format csv");
  CHECK(r.out == "a1,a2,a3,a4\n1,1,1,1\n1,1,2,\n1,3,,\n2,2,,\n4,,,\n");
}

TEST_CASE("enumerate json round-trips") {
  for (int n : {1, 7, 12}) {
    for (int m : {1, 2, 3}) {
      if (m > n) continue;
      const auto r = run("enumerate --n " + std::to_string(n) + " --m " + std::to_string(m) +
                         " --format json");
      REQUIRE(r.code == 0);
      const auto parsed = nlohmann::json::parse(r.out).get<std::vector<brute::Seq>>();
      CHECK(parsed == brute::compositions(n, m));
    }
  }
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("enumerate --n 0").code == 2);
  CHECK(run("enumerate --n abc").code == 2);
  CHECK(run("enumerate --n 5 --format xml").code == 2);
  CHECK(run("enumerate").code == 2);
  CHECK(run("frobnicate --n 3").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("verify eq2 --max-n 3").code == 2);
  CHECK(run("verify eq1 --max-n 0").code == 2);
  CHECK(run("verify eq1 --max-n 3 --domain full").code == 2);
  CHECK(run("count --n 5 --m 2 --oracle").code == 2);
  CHECK(run("boxes --n 31").code == 2);
  CHECK(run("boxes --n 5 --format png").code == 2);
  CHECK(run("count --n 5", "2>/dev/null", "PARTITION_METER_MEMO_LIMIT=lots").code == 2);
  CHECK(run("--help", ">/dev/null 2>&1").code == 0);
}

TEST_CASE("count") {
  CHECK(run("count --n 5").out == "7\n");
  CHECK(run("count --n 5 --m 2").out == "2\n");
  const auto r = run("count --n 10 --oracle");
  CHECK(r.code == 0);
  CHECK(r.out == "42 42 MATCH\n");
  CHECK(run("count --n 1000").out == "24061467864032622473692149727991\n");

  const auto over = run_stderr("count --n 1459");
  CHECK(over.code == 3);
  CHECK(over.out.find("overflow") != std::string::npos);

  CHECK(run("count --n 100", "2>/dev/null", "PARTITION_METER_MEMO_LIMIT=10").code == 3);
  CHECK(run("count --n 4", "2>/dev/null", "PARTITION_METER_MEMO_LIMIT=10").out == "5\n");
}

TEST_CASE("verify") {
  auto r = run("verify eq1 --max-n 60");
  CHECK(r.code == 0);
  CHECK(r.out.find("eq1: 60/60 rows pass") != std::string::npos);

  r = run("verify theorem1 --max-n 40 --jobs 4");
  CHECK(r.code == 0);
  CHECK(r.out.find("theorem1: 820/820 rows pass") != std::string::npos);

  r = run("verify eq6 --max-n 30");
  CHECK(r.code == 0);
  CHECK(r.out.find("eq6: 465/465 rows pass") != std::string::npos);

  r = run("verify eq6 --max-n 6 --domain full");
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);

  r = run("verify eq6 --max-n 5 --format csv");
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 16);
  CHECK(rows[0] == "n,m,2*nac-1,floor(n(1-m)/m)+sum,large_parts_sum,pass");
  CHECK(rows[12] == "5,2,3,3,6,PASS");

  r = run("verify eq1 --max-n 10 --format json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["all_pass"] == true);
  CHECK(j["rows"][9]["large_parts_sum"] == 83);
  CHECK(j["rows"][9]["2*p-1"] == 83);
}

TEST_CASE("boxes") {
  auto r = run("boxes --n 5");
  CHECK(r.code == 0);
  CHECK(r.out.find("boxes=13 = 2*7-1") != std::string::npos);
  CHECK(r.out.rfind("+---+---+---+---+---+\n", 0) == 0);

  r = run("boxes --n 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("boxes=1") != std::string::npos);

  r = run("boxes --n 5 --m 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("boxes=3 = 2*2-1") != std::string::npos);

  r = run("boxes --n 6 --format svg");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("<svg", 0) == 0);
  CHECK(r.out.find("boxes=21 = 2*11-1") != std::string::npos);

  CHECK(run("boxes --n 31 --max-render-n 31 --m 10").code == 0);
}

TEST_CASE("meter") {
  auto r = run("meter --n 5");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("writes=13 compositions=7 amortized=13/7", 0) == 0);
  CHECK(r.out.find("2-1/7") != std::string::npos);

  CHECK(run("meter --n 1").out.rfind("writes=1 compositions=1 amortized=1/1", 0) == 0);
  CHECK(run("meter --n 10").out.rfind("writes=83 compositions=42 amortized=83/42", 0) == 0);

  r = run("meter --n 10 --format json");
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["writes"] == 83);
  CHECK(j["compositions"] == 42);
  CHECK(j["amortized"] == "83/42");
  CHECK(j["closed_form_holds"] == true);

  r = run("meter --n 5 --m 2 --format csv");
  CHECK(lines(r.out).at(1).rfind("5,2,3,2,3/2,2-1/2,", 0) == 0);
}
