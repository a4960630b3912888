/* Copyright 2026 The chevalley authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {
struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = chevalley::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) { return std::string(CHEVALLEY_GOLDEN_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& body) {
  fs::path p = fs::temp_directory_path() / ("chevalley_cli_test_" + name);
  std::ofstream(p) << body;
  return p.string();
}

std::string last_line(const std::string& s) {
  auto end = s.find_last_not_of('\n');
  auto start = s.rfind('\n', end);
  return s.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}
}  // namespace

TEST_CASE("check-tits on G2") {
  Run r = run({"check-tits", "G2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("12") != std::string::npos);
  CHECK(last_line(r.out).rfind("RESULT 0 ", 0) == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify-theorem on the SL(2) discrete series") {
  Run r = run({"verify-theorem", golden("sl2r-ds.param")});
  CHECK(r.code == 0);
  CHECK(last_line(r.out) == "RESULT 0 verify-theorem: 4/4 PASS");
}

TEST_CASE("validate-param reports clause (e)") {
  Run r = run({"validate-param", golden("bad.param")});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL (e)") != std::string::npos);
  CHECK(last_line(r.out) == "RESULT 1 validate-param: clause (e) FAIL");
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"check-tits", "E8"}).code == 2);
  CHECK(run({"check-tits", "Q7"}).code == 2);
  CHECK(run({"validate-param", "/nonexistent/file.param"}).code == 2);
  CHECK(run({"validate-param", write_temp("garbage.param", "{not json")}).code == 2);
  CHECK(run({"validate-param", write_temp("missing.param", R"j({"group":"A1 sc"})j")}).code == 2);
  CHECK(run({"weilrep", "I(1,0"}).code == 2);
  std::string nonnormal = write_temp(
      "nonnormal.param", R"j({"group":"GL(2)","inner_class":"split","lambda":["1/2","1/2"],"mu":["1/2","0"],"w":[1]})j");
  Run nn = run({"verify-theorem", nonnormal});
  CHECK(nn.code == 3);
  CHECK(nn.out.find("NormalizationRequired") != std::string::npos);
  // A parameter failing validity cannot be verified.
  CHECK(run({"verify-theorem", golden("bad.param")}).code == 1);
}

TEST_CASE("inner class given as a matrix") {
  std::string p = write_temp(
      "a2flip.param",
      R"j({"group":"A2 sc","inner_class":[[0,1],[1,0]],"lambda":["0","0"],"mu":["0","0"],"w":[]})j");
  Run r = run({"validate-param", p});
  CHECK(r.code == 0);
  std::string bad = write_temp(
      "a2bad.param", R"j({"group":"A2 sc","inner_class":[[1,1],[0,1]],"lambda":["0","0"],"mu":["0","0"],"w":[]})j");
  CHECK(run({"validate-param", bad}).code == 2);
}

TEST_CASE("invariants and contragredient") {
  Run r = run({"invariants", golden("sl2r-ds.param")});
  CHECK(r.code == 0);
  CHECK(r.out.find("discrete_series: yes") != std::string::npos);
  Run c = run({"contragredient", golden("sl2r-ds.param")});
  CHECK(c.code == 0);
  CHECK(c.out.find("conjugate: yes") != std::string::npos);
}

TEST_CASE("weilrep") {
  Run r = run({"weilrep", "chi(1/2,0)+chi(-1/2,0)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("hermitian: yes") != std::string::npos);
  CHECK(r.out.find("unitary: no") != std::string::npos);
  CHECK(run({"weilrep", "I(1,0)"}).out.find("parameter: lambda=(1/2,-1/2)") != std::string::npos);
}

TEST_CASE("json output") {
  Run r = run({"verify-theorem", golden("sl2r-ds.param"), "--json"});
  CHECK(r.code == 0);
  auto first = r.out.substr(0, r.out.find('\n'));
  auto j = nlohmann::json::parse(first);
  CHECK(j["command"] == "verify-theorem");
  CHECK(j["checks"].size() == 4);
  CHECK(j["result"]["code"] == 0);
  CHECK(j["data"]["parameter"]["w"] == nlohmann::json::array({1}));
  CHECK(last_line(r.out) == "RESULT 0 verify-theorem: 4/4 PASS");
}

TEST_CASE("fuzz is deterministic and independent of the job count") {
  Run a = run({"fuzz", "--group", "B2", "--seed", "9", "--count", "12", "--jobs", "1"});
  Run b = run({"fuzz", "--group", "B2", "--seed", "9", "--count", "12", "--jobs", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(last_line(a.out) == "RESULT 0 fuzz: 12/12 instances PASS");
  Run c = run({"fuzz", "--group", "B2", "--seed", "10", "--count", "12"});
  CHECK(c.out != a.out);
  Run d = run({"fuzz", "--group", "A2 sc", "--inner-class", "compact", "--seed", "3", "--count", "8"});
  CHECK(d.code == 0);
}

TEST_CASE("help") {
  Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify-theorem") != std::string::npos);
}
