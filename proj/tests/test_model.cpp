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

#include "cu/fixtures.hpp"
#include "cu/model.hpp"

using namespace cu;

namespace {

// s << t straight from the definition, tested on the truncation sequence of t
// (whose supremum is t): s must be finite and below some truncation.
bool way_below_oracle(const CuModel& m, const Element& s, const Element& t) {
  if (s.has_infinite_coordinate()) return false;
  for (std::uint64_t n = 0; n <= 12; ++n)
    if (m.leq(s, m.truncate(t, n))) return true;
  return false;
}

}  // namespace

TEST_CASE("N-bar powers add and order coordinatewise") {
  const CuModel m = CuModel::nbar_power(2);
  const Element a = m.parse_element("[1,inf]"), b = m.parse_element("[2,3]");
  CHECK(m.add(a, b) == m.parse_element("[3,inf]"));
  CHECK(m.leq(b, m.parse_element("[2,inf]")));
  CHECK_FALSE(m.leq(a, b));
  CHECK(m.infinity_multiple(m.parse_element("[0,2]")) == m.parse_element("[0,inf]"));
  CHECK(m.nat_multiple(3, b) == m.parse_element("[6,9]"));
  CHECK(m.top().value() == m.parse_element("[inf,inf]"));
}

TEST_CASE("way-below matches the sequence definition on effective models") {
  for (const auto& m : {CuModel::nbar_power(1), CuModel::nbar_power(2), CuModel::monotone_chain(3)}) {
    const auto grid = m.grid(2);
    for (const auto& s : grid)
      for (const auto& t : grid) CHECK(m.way_below(s, t) == way_below_oracle(m, s, t));
  }
}

TEST_CASE("way-below is the order on finite tables") {
  for (const auto& [name, m] : fixtures::builtin_finite())
    for (const auto& a : m.elements())
      for (const auto& b : m.elements()) CHECK(m.way_below(a, b) == m.leq(a, b));
}

TEST_CASE("monotone chain keeps only nondecreasing vectors") {
  const CuModel m = CuModel::monotone_chain(3);
  CHECK_NOTHROW(m.parse_element("[0,1,inf]"));
  CHECK_THROWS_AS(m.parse_element("[2,1,1]"), Error);
  const auto gens = m.generators();
  REQUIRE(gens.size() == 3);
  CHECK(gens[0] == m.parse_element("[1,1,1]"));
  CHECK(gens[2] == m.parse_element("[0,0,1]"));
  // a = sum_j m_j g_j rebuilt from decompose
  for (const auto& a : m.grid(3, false)) {
    const auto mult = m.decompose(a);
    Element sum = m.zero();
    for (std::size_t j = 0; j < mult.size(); ++j) sum = m.add(sum, m.nat_multiple(mult[j].value(), gens[j]));
    CHECK(sum == a);
  }
}

TEST_CASE("finite table validation names the broken law") {
  // 1 + (1 + 2) = 1 + 2 = 2 but (1 + 1) + 2 = 2 + 2 = 1
  try {
    CuModel::finite_table({{0, 1, 2}, {1, 2, 2}, {2, 2, 1}}, {{true, true, true}, {false, true, true}, {false, false, true}});
    FAIL("expected InvariantViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvariantViolation);
  }
  CHECK_THROWS_AS(CuModel::finite_table({{0, 1}, {1, 1}}, {{true, false}, {false, true}}), Error);
}

TEST_CASE("models round-trip through JSON") {
  for (const auto& [name, m] : fixtures::builtin_models()) {
    const CuModel back = CuModel::load(m.save());
    CHECK(back == m);
    CHECK(back.digest() == m.digest());
  }
  CHECK_THROWS_AS(CuModel::load("{\"kind\":\"nope\"}"), Error);
  CHECK_THROWS_AS(CuModel::load("not json"), Error);
}

TEST_CASE("elements of another model are rejected") {
  const CuModel a = CuModel::nbar_power(2), b = CuModel::nbar_power(3);
  CHECK_THROWS_AS(a.add(a.zero(), b.zero()), Error);
}

TEST_CASE("fixtures are what they claim") {
  const CuModel t3 = fixtures::truncated_chain(3);
  CHECK(t3.size() == 5);
  const CuModel mx = fixtures::idempotent_chain(2);
  for (const auto& a : mx.elements()) CHECK(mx.add(a, a) == a);
  const CuModel p = fixtures::product(fixtures::two_point(), fixtures::truncated_chain(1));
  CHECK(p.size() == 2 * 3);
}
