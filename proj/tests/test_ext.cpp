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

#include "cu/error.hpp"
#include "cu/ext.hpp"

using namespace cu;

TEST_CASE("extended naturals add and compare with INF on top") {
  const ExtNat inf = ExtNat::inf();
  CHECK(ExtNat(2) + ExtNat(3) == ExtNat(5));
  CHECK(ExtNat(2) + inf == inf);
  CHECK(ExtNat(7) < inf);
  CHECK(inf <= inf);
  CHECK(3 * ExtNat(4) == ExtNat(12));
  CHECK(0 * inf == ExtNat(0));
  CHECK(2 * inf == inf);
  CHECK(monus(ExtNat(5), ExtNat(3)) == ExtNat(2));
  CHECK(monus(ExtNat(3), ExtNat(5)) == ExtNat(0));
  CHECK(inf.to_string() == "inf");
}

TEST_CASE("extended rationals use 0 * INF = 0") {
  const ExtRational inf = ExtRational::inf();
  CHECK(ExtRational(0) * inf == ExtRational(0));
  CHECK(inf * ExtRational(0) == ExtRational(0));
  CHECK(ExtRational(Rational(1, 3)) * inf == inf);
  CHECK(ExtRational(Rational(1, 2)) + ExtRational(Rational(1, 3)) == ExtRational(Rational(5, 6)));
  CHECK(difference(ExtRational(3), ExtRational(Rational(1, 2))) == ExtRational(Rational(5, 2)));
  CHECK(difference(inf, ExtRational(4)) == inf);
  CHECK(ExtRational(5) < inf);
  CHECK(ExtRational(ExtNat::inf()).is_inf());
  CHECK(ExtRational(ExtNat(4)) == ExtRational(4));
}

TEST_CASE("rationals parse and print canonically") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(rational_to_string(Rational(6, 4)) == "3/2");
  CHECK(rational_to_string(Rational(4, 2)) == "2");
  CHECK(ExtRational::parse("inf").is_inf());
  CHECK(ExtRational::parse("3/9") == ExtRational(Rational(1, 3)));
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(ExtRational::parse("-1"), Error);
}

TEST_CASE("errors carry their code") {
  try {
    throw Error(ErrorCode::GridExhausted, "nothing left", "w");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GridExhausted);
    CHECK(e.witness() == "w");
    CHECK(std::string(e.what()).find("GridExhausted") != std::string::npos);
  }
}
