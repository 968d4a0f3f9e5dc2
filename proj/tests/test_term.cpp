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

#include "cu/term.hpp"

using namespace cu;

namespace {

const Realification& nbar1() {
  static const Realification r(CuModel::nbar_power(1));
  return r;
}

RealElement hat(const char* s) { return nbar1().embed(nbar1().model().parse_element(s)); }

}  // namespace

TEST_CASE("terms evaluate") {
  const auto& r = nbar1();
  CHECK(parse_term(r, "hat(2)") == hat("2"));
  CHECK(parse_term(r, "1/2*hat(2)") == hat("1"));
  CHECK(parse_term(r, "hat(1) + 2*hat(1)") == hat("3"));
  CHECK(parse_term(r, "2*(hat(1)+hat(1))") == hat("4"));
  CHECK(parse_term(r, "inf*hat(1)") == hat("inf"));
  CHECK(parse_term(r, "0") == r.zero());
  CHECK(parse_term(r, "0*hat(3)") == r.zero());
  CHECK(parse_term(r, "sup[hat(1),hat(2),hat(3)]") == hat("3"));
  CHECK(parse_term(r, "diff[hat(3),hat(1)]") == hat("2"));
  CHECK(parse_term(r, "meet[hat(1),hat(2)]") == hat("1"));
}

TEST_CASE("terms round-trip through their provenance string") {
  const auto& r = nbar1();
  for (const char* t : {"hat(2)", "3/2*hat(1) + hat(inf)", "sup[hat(1),hat(2)]", "2*(hat(1)+hat(2))",
                        "diff[hat(3),1/2*hat(1)]"}) {
    const RealElement e = parse_term(r, t);
    CHECK(parse_term(r, e.term) == e);
  }
  const CuModel m2 = CuModel::nbar_power(2);
  const Realification r2(m2);
  const RealElement e = parse_term(r2, "hat([1,inf]) + 1/3*hat([0,2])");
  CHECK(parse_term(r2, e.term) == e);
  CHECK(parse_term(r2, r2.zero().term) == r2.zero());
}

TEST_CASE("malformed terms are parse errors") {
  const auto& r = nbar1();
  for (const char* t : {"", "hat(1", "2*", "hat(1) +", "sup[hat(1)", "diff[hat(1)]", "foo", "3", "hat(1))"}) {
    try {
      parse_term(r, t);
      FAIL("accepted: " << t);
    } catch (const Error& e) {
      CHECK_MESSAGE(e.code() == ErrorCode::ParseError, t);
    }
  }
}

TEST_CASE("semantic failures keep their codes") {
  const auto& r = nbar1();
  try {
    parse_term(r, "sup[hat(2),hat(1)]");
    FAIL("accepted a decreasing chain");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotIncreasing);
  }
  CHECK_THROWS_AS(parse_term(r, "diff[hat(1),hat(2)]"), Error);
}
