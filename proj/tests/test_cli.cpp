// Copyright 2026 The cu-lattice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "cu/cli.hpp"

using namespace cu;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json strip_time(nlohmann::json j) {
  j.erase("elapsed_ms");
  return j;
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"validate"}).code == kExitUsage);
  CHECK(run({"validate", "builtin:nope"}).code == kExitUsage);
  CHECK(run({"lattice", "builtin:nbar1"}).code == kExitUsage);  // --rays is required
  CHECK(run({"--denominator-bound", "0", "validate", "builtin:nbar1"}).code == kExitUsage);
  CHECK(run({"realify", "builtin:nbar1", "--expr", "hat(1"}).code == kExitUsage);
  CHECK(run({"compare", "builtin:nbar1", "[1,2]", "1"}).code == kExitUsage);
}

TEST_CASE("validate reports per axiom") {
  const Run ok = run({"--json", "validate", "builtin:nbar2"});
  CHECK(ok.code == kExitOk);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j.at("schema") == "cu-lattice/1");
  CHECK(j.at("command") == "validate");
  CHECK(j.at("checks").size() == 6);
  CHECK(run({"validate", "builtin:broken_o6"}).code == kExitCheckFailed);
}

TEST_CASE("compare, cone and lattice") {
  CHECK(run({"compare", "builtin:nbar1", "1", "2"}).code == kExitOk);
  CHECK(run({"compare", "builtin:nbar1", "3", "2"}).code == kExitOk);
  const Run c = run({"--json", "compare", "builtin:nbar2", "[1,0]", "[2,inf]"});
  CHECK(c.code == kExitOk);
  CHECK(c.out.find("true") != std::string::npos);
  CHECK(run({"cone", "builtin:nbar2"}).code == kExitOk);
  CHECK(run({"--trials", "30", "lattice", "builtin:nbar2", "--rays"}).code == kExitOk);
}

TEST_CASE("realify, refine and glimm") {
  const Run r = run({"--json", "realify", "builtin:nbar1", "--expr", "1/2*hat(2) + hat(1)"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("\"2\"") != std::string::npos);
  CHECK(run({"glimm", "builtin:nbar1", "2"}).code == kExitOk);
  CHECK(run({"glimm", "builtin:nbar2", "[1,1]"}).code == kExitCheckFailed);
  CHECK(run({"refine", "builtin:nbar1", "/nonexistent/instance.json"}).code == kExitUsage);
}

TEST_CASE("reports are deterministic apart from timing") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--json", "--seed", "9", "validate", "builtin:chain2"},
        std::vector<std::string>{"--json", "--seed", "9", "--trials", "20", "lattice", "builtin:nbar3", "--rays"}}) {
    const Run a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(strip_time(nlohmann::json::parse(a.out)) == strip_time(nlohmann::json::parse(b.out)));
  }
}
