// Copyright 2026 The bincurve Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "bincurve/json_io.hpp"
#include "doctest.h"

using bincurve::Json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  Json json() const { return Json::parse(out); }
};

std::filesystem::path work_dir() {
  static const auto dir = [] {
    const auto d = std::filesystem::temp_directory_path() / "bincurve-cli-test";
    std::filesystem::remove_all(d);
    std::filesystem::create_directories(d);
    setenv("BINCURVE_CACHE_DIR", (d / "cache").c_str(), 1);
    return d;
  }();
  return dir;
}

Run run(const std::string& args) {
  const char* cli = std::getenv("BINCURVE_CLI");
  REQUIRE(cli != nullptr);
  work_dir();
  const std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto path = work_dir() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("h0 command") {
  auto r = run("h0 --random-genus 2 --p 7 --bundle trivial");
  REQUIRE(r.code == 0);
  auto j = r.json();
  CHECK(j["h0"] == 1);
  CHECK(j["h1"] == 2);
  CHECK(j["version"] == bincurve::kVersion);
  CHECK(j["config"]["curve_source"]["random"]["g"] == 2);

  r = run("h0 --random-genus 3 --p 7 --seed 4 --bundle canonical");
  REQUIRE(r.code == 0);
  CHECK(r.json()["h0"] == 3);
  CHECK(r.json()["h1"] == 1);
  CHECK(r.json()["base_locus"]["nodes"].empty());

  r = run("h0 --random-genus 3 --p 7 --md 2,3");
  REQUIRE(r.code == 0);
  CHECK(r.json()["h0"] == 3);
  CHECK(r.json()["h1"] == 0);

  const auto curve = write_file("c.json", R"({"field":{"type":"Q"},"nodes":[["0","0"],["1","1"],["inf","inf"]]})");
  r = run("h0 --curve " + curve + R"( --bundle '{"md":[1,2],"c":["1","-1/2","3"]}')");
  REQUIRE(r.code == 0);
  CHECK(r.json()["h0"] == 2);
  CHECK(r.json()["bundle"]["c"] == Json::array({"1/3", "-1/6", "1"}));
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("h0 --random-genus 2").code == 2);
  CHECK(run("h0 --random-genus 2 --p 7").code == 2);
  CHECK(run("h0 --random-genus 2 --p 8 --md 1,1").code == 2);
  CHECK(run("h0 --random-genus 2 --p 7 --md one").code == 2);
  CHECK(run("h0 --curve " + write_file("bad.json", "{nope") + " --md 1,1").code == 2);
  CHECK(run("h0 --curve " + write_file("short.json", R"({"field":{"type":"Fp","p":7},"nodes":[["0","0"]]})") +
            " --md 1,1")
            .code == 2);
  CHECK(run("verify nosuch").code == 2);
  CHECK(run("bn --random-genus 3 --p 7").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("strata command") {
  auto r = run("strata --g 2 --d 2");
  REQUIRE(r.code == 0);
  CHECK(r.json()["strata"]["type"] == "N");
  CHECK(r.json()["strata"]["count"] == 12);
  r = run("strata --g 2 --d 1");
  CHECK(r.json()["strata"]["type"] == "D");
  CHECK(!r.json()["strata"]["ell0"].is_null());
  CHECK(run("strata --g 2 --d 3").json()["strata"]["type"] == "D");
}

TEST_CASE("verify command") {
  auto r = run("verify riemann --g 2 --p 7");
  CHECK(r.code == 0);
  CHECK(r.json()["pass"] == true);
  CHECK(r.json()["label"].get<std::string>().find("Riemann") != std::string::npos);
  CHECK(run("verify clifford --g 3 --p 5 --exhaustive").code == 0);
  CHECK(run("verify empty --g 3 --p 7").code == 0);
  r = run("verify lemma-e --p 5");
  CHECK(r.code == 1);
  CHECK(r.json()["pass"] == false);
  r = run("verify riemann --g 2 --p 7 --format text");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  const auto a = run("verify hyperelliptic --g 3 --p 7 --curves 15 --jobs 1 --seed 9");
  const auto b = run("verify hyperelliptic --g 3 --p 7 --curves 15 --jobs 4 --seed 9");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("bn command and cache") {
  const std::string q = "bn --random-genus 3 --p 7 --seed 2 --md 2,2 --r 2";
  const auto first = run(q);
  REQUIRE(first.code == 0);
  const auto j = first.json();
  CHECK(j["count"] == 1);
  CHECK(j["query"] == Json{{"md", {2, 2}}, {"r", 2}});
  CHECK(j["seed"] == 2);
  CHECK(run(q).out == first.out);
  CHECK(run(q + " --no-cache").out == first.out);
  CHECK(run(q + " --audit").json()["audit"] == Json::array({"match"}));

  const auto file = work_dir() / "cache" / "scans.jsonl";
  std::ifstream in(file);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();
  const auto at = text.find("\"count\":1");
  REQUIRE(at != std::string::npos);
  text.replace(at, 9, "\"count\":5");
  std::ofstream(file) << text;
  const auto poisoned = run(q + " --audit");
  CHECK(poisoned.code == 1);
  CHECK(poisoned.json()["audit"] == Json::array({"mismatch"}));
  CHECK(poisoned.json()["count"] == 5);

  const auto curve =
      write_file("h.json", R"({"field":{"type":"Q"},"nodes":[["0","0"],["1","1"],["inf","inf"],["2","2"]]})");
  const auto dim = run("bn --curve " + curve + " --md 1,1 --r 1 --primes 7,11 --no-cache");
  REQUIRE(dim.code == 0);
  CHECK(dim.json()["dimension"]["rounded"] == 0);
}

TEST_CASE("clifford and abel commands") {
  auto r = run("clifford --curve " +
               write_file("hyp.json", R"({"field":{"type":"Fp","p":11},"nodes":[["0","0"],["1","1"],["inf","inf"],["3","3"]]})"));
  REQUIRE(r.code == 0);
  CHECK(r.json()["clifford"]["cliff"] == 0);
  r = run("abel --random-genus 3 --p 11 --md 1,1 --trials 50 --seed 3");
  REQUIRE(r.code == 0);
  CHECK(r.json()["abel"]["trials"] == 50);
  CHECK(run("abel --random-genus 3 --p 11 --md 1,1 --trials 50 --seed 3").out == r.out);
}
