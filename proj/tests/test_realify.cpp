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
#include "cu/realify.hpp"

using namespace cu;

namespace {

const Realification& nbar1() {
  static const Realification r(CuModel::nbar_power(1));
  return r;
}

RealElement hat(const Realification& r, const char* s) { return r.embed(r.model().parse_element(s)); }

std::vector<ExtRational> ev(std::initializer_list<const char*> xs) {
  std::vector<ExtRational> out;
  for (const char* x : xs) out.push_back(ExtRational::parse(x));
  return out;
}

}  // namespace

TEST_CASE("embedding on N-bar") {
  const auto& r = nbar1();
  // representatives: lambda_{0}, zero functional, identity ray
  REQUIRE(r.dimension() == 3);
  CHECK(hat(r, "2").values == ev({"inf", "0", "2"}));
  CHECK(hat(r, "0").values == ev({"0", "0", "0"}));
  CHECK(hat(r, "inf").values == ev({"inf", "0", "inf"}));
  CHECK(Realification::scale(Rational(1, 2), hat(r, "2")) == hat(r, "1"));
  CHECK(Realification::add(hat(r, "1"), hat(r, "2")) == hat(r, "3"));
  CHECK_THROWS_AS(Realification::scale(Rational(0), hat(r, "1")), Error);
}

TEST_CASE("triangle relation on N-bar") {
  const auto& r = nbar1();
  CHECK(r.triangle_lhd(hat(r, "1"), hat(r, "2")));
  CHECK_FALSE(r.triangle_lhd(hat(r, "2"), hat(r, "2")));
  // 1 << INF but INF is not way below 1 or itself
  CHECK(r.triangle_lhd(hat(r, "1"), hat(r, "inf")));
  CHECK_FALSE(r.triangle_lhd(hat(r, "inf"), hat(r, "1")));
  CHECK_FALSE(r.triangle_lhd(hat(r, "inf"), hat(r, "inf")));
  CHECK(r.way_below(r.zero(), r.zero()));
  CHECK(*r.lhd_ratio(hat(r, "1"), hat(r, "4")) == Rational(1, 4));
}

TEST_CASE("membership") {
  const auto& r = nbar1();
  CHECK(r.is_member(hat(r, "3")));
  RealElement bad{ev({"0", "0", "1"}), "bad"};  // lambda_{0} <= id fails
  CHECK_FALSE(r.is_member(bad));
}

TEST_CASE("rapid chain and dini index") {
  const auto& r = nbar1();
  const RealElement f = hat(r, "4");
  const auto chain = r.rapid_chain(f, 6);
  REQUIRE(chain.size() == 6);
  CHECK(chain[0] == hat(r, "2"));
  CHECK(chain[1] == hat(r, "3"));
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) CHECK(Realification::leq(chain[i], chain[i + 1]));
  // with g = 2f: least n with 2^-n <= 2 eps
  const RealElement g = Realification::add(f, f);
  CHECK(r.dini_index(f, chain, g, Rational(1, 8)) == 2);
  CHECK(r.dini_index(f, chain, g, Rational(1, 4)) == 1);
  CHECK(r.dini_index(f, chain, g, Rational(1, 64)) == 5);
  CHECK_THROWS_AS(r.dini_index(f, chain, g, Rational(1, 1024)), Error);
}

TEST_CASE("complement and split") {
  const auto& r = nbar1();
  const RealElement f = Realification::scale(Rational(1, 2), hat(r, "1"));
  const RealElement g = hat(r, "2");
  const RealElement h = r.complement(f, g);
  CHECK(h == Realification::scale(Rational(3, 2), hat(r, "1")));
  CHECK(Realification::add(f, h) == g);
  try {
    r.complement(g, g);
    FAIL("expected HypothesisFailed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HypothesisFailed);
  }

  const RealElement f1 = hat(r, "1");
  const RealElement fp = Realification::scale(Rational(1, 2), f1);
  const auto [hs, hp] = r.almost_algebraic_split(fp, f1, g);
  CHECK(hs == Realification::scale(Rational(3, 4), f1));
  CHECK(r.triangle_lhd(fp, hs));
  CHECK(r.triangle_lhd(hs, f1));
  CHECK(Realification::add(hs, hp) == g);
}

TEST_CASE("canonical refinement instance") {
  const auto& r = nbar1();
  const RealElement one = hat(r, "1");
  const RealElement tq = Realification::scale(Rational(3, 4), one);
  const std::vector<RealElement> f{one, one}, g{one, one}, fp{tq, tq};
  const auto res = r.refinement_witness(fp, f, g, {.denominator = 4});
  REQUIRE(res.status == RefinementStatus::Found);
  const RealElement half = Realification::scale(Rational(1, 2), one);
  for (const auto& row : res.h)
    for (const auto& e : row) CHECK(e == half);
  CHECK(r.refinement_valid(fp, f, g, res.h));
  // rows must sum below f and strictly above f'
  for (std::size_t i = 0; i < 2; ++i) {
    const RealElement row = Realification::add(res.h[i][0], res.h[i][1]);
    CHECK(Realification::leq(row, f[i]));
    CHECK(r.way_below(fp[i], row));
  }
  // a matrix with a column over g_j is rejected
  std::vector<std::vector<RealElement>> wrong{{one, r.zero()}, {one, r.zero()}};
  CHECK_FALSE(r.refinement_valid(fp, f, g, wrong));
}

TEST_CASE("interpolation meet") {
  const auto& r = nbar1();
  CHECK(r.interpolation_meet(hat(r, "1"), hat(r, "2")) == hat(r, "1"));
  CHECK(r.interpolation_meet(hat(r, "3"), hat(r, "inf")) == hat(r, "3"));
  const auto rep = r.check_interpolation(hat(r, "1"), {hat(r, "1"), hat(r, "2")}, hat(r, "1"));
  CHECK(rep.pass());
}

TEST_CASE("cancellation") {
  const auto& r = nbar1();
  const auto c = r.cancellation_check(hat(r, "1"), hat(r, "2"), hat(r, "3"));
  CHECK(c.premise);
  CHECK(c.conclusion);
  CHECK(c.n == 2);
  CHECK_THROWS_AS(r.cancellation_check(hat(r, "2"), hat(r, "1"), hat(r, "inf")), Error);
}

TEST_CASE("cone isomorphism checks") {
  for (const auto& m : {CuModel::nbar_power(1), CuModel::nbar_power(2), fixtures::truncated_chain(2)}) {
    const Realification r(m);
    CHECK(r.cone_iso_check(1, 16).pass());
  }
}

TEST_CASE("halving") {
  const CuModel m = CuModel::nbar_power(1);
  const auto h1 = halving(m, m.parse_element("1"));
  CHECK(h1.chain_case);
  const auto h2 = halving(m, m.parse_element("2"));
  REQUIRE(h2.z.has_value());
  CHECK(m.leq(m.add(*h2.z, *h2.z), m.parse_element("2")));
  CHECK_FALSE(h2.z->coords[0].is_zero());
  const CuModel tp = fixtures::two_point();
  const auto h3 = halving(tp, tp.element(1));
  REQUIRE(h3.z.has_value());
  CHECK(*h3.z == tp.element(1));
  CHECK_THROWS_AS(halving(CuModel::nbar_power(2), CuModel::nbar_power(2).parse_element("[1,1]")), Error);
  CHECK(chain_generator(fixtures::truncated_chain(3)).has_value());
  CHECK_FALSE(chain_generator(fixtures::broken_o6()).has_value());
  CHECK_FALSE(chain_generator(CuModel::nbar_power(2)).has_value());
}
