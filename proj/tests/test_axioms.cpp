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

#include "cu/axioms.hpp"
#include "cu/fixtures.hpp"

using namespace cu;

namespace {

// r with s' + r <= t <= s + r, searched over the grid independently of the checker
bool o5_has_witness_brute(const CuModel& m, const Element& sp, const Element& s, const Element& t) {
  for (const auto& r : m.is_finite() ? m.elements() : m.grid(4))
    if (m.leq(m.add(sp, r), t) && m.leq(t, m.add(s, r))) return true;
  return false;
}

}  // namespace

TEST_CASE("N-bar powers satisfy every axiom") {
  for (std::size_t k = 1; k <= 2; ++k) {
    const auto reports = check_axioms(CuModel::nbar_power(k), {.seed = 3, .trials = 300});
    REQUIRE(reports.size() == 6);
    for (const auto& r : reports) CHECK_MESSAGE(r.status != AxiomStatus::Fail, r.axiom);
  }
}

TEST_CASE("finite fixtures other than the broken one pass") {
  for (const auto& [name, m] : fixtures::builtin_finite())
    for (const auto& r : check_axioms(m)) CHECK_MESSAGE(r.status != AxiomStatus::Fail, (name + " " + r.axiom));
}

TEST_CASE("the broken fixture fails O6 and the counterexample replays") {
  const CuModel m = fixtures::broken_o6();
  const auto r = check_O6(m);
  REQUIRE(r.status == AxiomStatus::Fail);
  REQUIRE(r.counterexample.size() == 4);
  CHECK(replay_counterexample(m, r));
  const auto& c = r.counterexample;
  CHECK_FALSE(find_o6_witness(m, c[0], c[1], c[2], c[3]).has_value());
  // no (r', t') in the whole table
  bool found = false;
  for (const auto& rp : m.elements())
    for (const auto& tp : m.elements())
      if (m.leq(c[0], m.add(rp, tp)) && m.leq(rp, c[2]) && m.leq(rp, c[1]) && m.leq(tp, c[3]) && m.leq(tp, c[1]))
        found = true;
  CHECK_FALSE(found);
}

TEST_CASE("chain models violate O5 at a checkable point") {
  const CuModel m = CuModel::monotone_chain(2);
  const auto r = check_O5(m, {.seed = 0, .trials = 1000});
  REQUIRE(r.status == AxiomStatus::Fail);
  const auto& c = r.counterexample;
  REQUIRE(c.size() == 3);
  CHECK(m.way_below(c[0], c[1]));
  CHECK(m.leq(c[1], c[2]));
  CHECK_FALSE(o5_has_witness_brute(m, c[0], c[1], c[2]));
  const Element sp = m.parse_element("[0,1]"), t = m.parse_element("[1,1]");
  CHECK_FALSE(o5_has_witness_brute(m, sp, sp, t));
  CHECK_FALSE(find_o5_witness(m, sp, sp, t).has_value());
}

TEST_CASE("reports serialize") {
  const CuModel m = fixtures::broken_o6();
  const auto j = axiom_report_to_json(m, check_O6(m));
  CHECK(j.at("status") == "FAIL");
  CHECK(j.contains("counterexample"));
}
