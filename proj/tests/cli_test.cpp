// Copyright 2026 The bacore authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using Json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(BACORE_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/bacore_cli_test_") + name;
  std::ofstream(path) << content;
  return path;
}

const char* kMajority = R"({
  "universe": {"finite": 3},
  "values": [
    {"set": [1,2], "value": "1"},
    {"set": [1,3], "value": "1"},
    {"set": [2,3], "value": "1"}
  ],
  "grand": "1"
})";

}  // namespace

TEST_CASE("core on the majority game reports emptiness with value 3/2") {
  std::string path = write_temp("majority.json", kMajority);
  RunResult r = run_cli("core " + path);
  CHECK(r.exit_code == 0);  // emptiness is still a decided answer
  Json j = Json::parse(r.out);
  CHECK(j.at("status") == "empty");
  CHECK(j.at("certificate").at("value_sum") == "3/2");
}

TEST_CASE("certify marks the decision as verified") {
  std::string path = write_temp("majority.json", kMajority);
  RunResult r = run_cli("certify " + path);
  CHECK(r.exit_code == 0);
  CHECK(Json::parse(r.out).at("verified") == true);
}

TEST_CASE("ladder ends at 11/6 for n = 3") {
  RunResult r = run_cli("ladder --rule example1 --n 3");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.out);
  REQUIRE(j.at("stages").size() == 3);
  CHECK(j.at("stages").back().at("bound") == "11/6");
  CHECK(j.at("conclusion") == "diverges_unbounded");
}

TEST_CASE("restricted ladder flags the discrepancy") {
  RunResult r = run_cli("ladder --rule example2 --n 4");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("conclusion") == "infeasible");
  CHECK(j.contains("discrepancy"));
}

TEST_CASE("hull emits members and atoms") {
  std::string path = write_temp("rule1.json",
                                R"({"universe":"naturals","rule":"example1"})");
  RunResult r = run_cli("hull " + path + " --family \"1;2\"");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("members").size() == 8);
  CHECK(j.at("atoms").size() == 3);
}

TEST_CASE("witness runs the pipeline on a rule game") {
  std::string path = write_temp("rule1.json",
                                R"({"universe":"naturals","rule":"example1"})");
  RunResult r = run_cli("witness " + path + " --family \"1;2\"");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("status") == "non_empty");
  CHECK(j.at("report").at("pass") == true);
}

TEST_CASE("epsilon reports the flip of the majority game") {
  std::string path = write_temp("majority.json", kMajority);
  RunResult r = run_cli("epsilon " + path + " --eps 1/4,1/2,1");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("cover_value") == "3/2");
  CHECK(j.at("stages")[0].at("status") == "empty");
  CHECK(j.at("stages")[1].at("status") == "non_empty");
  CHECK(j.at("views_agree") == true);
}

TEST_CASE("input errors exit with code 2") {
  CHECK(run_cli("core /tmp/bacore_no_such_file.json").exit_code == 2);
  std::string bad = write_temp("bad.json",
      R"({"universe":{"finite":2},"values":[{"set":[1],"value":"1/0"}],"grand":"0"})");
  CHECK(run_cli("core " + bad).exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("hull cap exhaustion exits with code 3") {
  std::string path = write_temp("wide.json", R"({
    "universe": {"finite": 10},
    "values": [],
    "grand": "0"
  })");
  RunResult r = run_cli("hull " + path +
                        " --family \"1;2;3;4;5;6;7;8;9;10\" --cap 16");
  CHECK(r.exit_code == 3);
}

TEST_CASE("hull cap can come from the environment") {
  std::string path = write_temp("wide.json", R"({
    "universe": {"finite": 10},
    "values": [],
    "grand": "0"
  })");
  std::string cmd = "BACORE_HULL_CAP=16 " + std::string(BACORE_CLI_PATH) + " hull " +
                    path + " --family \"1;2;3;4;5;6;7;8;9;10\" 2>/dev/null";
  int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 3);
}

TEST_CASE("output is byte-identical across runs") {
  std::string path = write_temp("majority.json", kMajority);
  RunResult a = run_cli("core " + path);
  RunResult b = run_cli("core " + path);
  CHECK(a.out == b.out);
  RunResult c = run_cli("ladder --rule example1 --n 20");
  RunResult d = run_cli("ladder --rule example1 --n 20");
  CHECK(c.out == d.out);
}

TEST_CASE("supcheck separates the sups on the signed instance") {
  std::string path = write_temp("signed.json", R"({
    "universe": {"finite": 2},
    "values": [
      {"set": [1], "value": "1"},
      {"set": [2], "value": "-1"}
    ],
    "grand": "0"
  })");
  RunResult r = run_cli("supcheck " + path);
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("sup_eq").at("value") == "0");
  CHECK(j.at("sup_ineq").at("value") == "1");
}

TEST_CASE("restricted-core and bounded-balanced run on a restricted file") {
  std::string path = write_temp("restricted.json", R"({
    "universe": {"finite": 3},
    "family": [[1], [2,3]],
    "values": [
      {"set": [1], "value": "1"},
      {"set": [2,3], "value": "1"}
    ],
    "grand": "0"
  })");
  RunResult r = run_cli("restricted-core " + path);
  CHECK(r.exit_code == 0);
  CHECK(Json::parse(r.out).at("status") == "empty");
  RunResult b = run_cli("bounded-balanced " + path);
  CHECK(b.exit_code == 0);
  CHECK(Json::parse(b.out).at("bounded_balanced") == false);
}

TEST_CASE("norm command evaluates a measure file") {
  std::string path = write_temp("measure.json", R"({
    "universe": "naturals",
    "family": [[1], [2]],
    "support": [
      {"point": 1, "weight": "3/2"},
      {"point": 2, "weight": "-1/2"}
    ]
  })");
  RunResult r = run_cli("norm " + path);
  CHECK(r.exit_code == 0);
  CHECK(Json::parse(r.out).at("norm") == "2");
}
