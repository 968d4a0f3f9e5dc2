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
#include "cu/functional.hpp"

using namespace cu;

namespace {

std::vector<ExtRational> vals(std::initializer_list<const char*> xs) {
  std::vector<ExtRational> out;
  for (const char* x : xs) out.push_back(ExtRational::parse(x));
  return out;
}

}  // namespace

TEST_CASE("N-bar power cones have 2^k + k*2^(k-1) representatives") {
  for (std::size_t k = 1; k <= 3; ++k) {
    const CuModel m = CuModel::nbar_power(k);
    const auto cone = compute_cone(m);
    CHECK(cone.ideals.size() == (1u << k));
    CHECK(cone.representatives.size() == (1u << k) + k * (1u << (k - 1)));
    for (const auto& r : cone.representatives) CHECK_FALSE(functional_violation(m, r).has_value());
  }
}

TEST_CASE("hat comparison on N-bar powers is the coordinatewise order") {
  // lambda = e_i gives s_i <= t_i; the converse is positivity of coefficients
  for (std::size_t k = 1; k <= 2; ++k) {
    const CuModel m = CuModel::nbar_power(k);
    const auto cone = compute_cone(m);
    const auto grid = m.grid(2);
    for (const auto& s : grid)
      for (const auto& t : grid) {
        bool oracle = true;
        for (std::size_t i = 0; i < k; ++i) oracle = oracle && s.coords[i] <= t.coords[i];
        CHECK(compare_hat_lp(m, s, t, cone) == oracle);
      }
  }
}

TEST_CASE("evaluation uses 0 * INF = 0") {
  const CuModel m = CuModel::nbar_power(2);
  const Functional f = from_generator_values(m, vals({"0", "2"}));
  CHECK(evaluate(m, f, m.parse_element("[inf,3]")) == ExtRational(6));
  CHECK(evaluate(m, f, m.parse_element("[1,inf]")).is_inf());
  CHECK(evaluate(m, lambda_ideal(m, 0b01), m.parse_element("[4,0]")).is_zero());
  CHECK(evaluate(m, lambda_ideal(m, 0b01), m.parse_element("[0,1]")).is_inf());
}

TEST_CASE("chain functionals have nonincreasing generator values") {
  const CuModel m = CuModel::monotone_chain(2);
  CHECK_NOTHROW(from_generator_values(m, vals({"3", "1"})));
  CHECK_THROWS_AS(from_generator_values(m, vals({"1", "3"})), Error);
}

TEST_CASE("functional complement") {
  const CuModel m = CuModel::nbar_power(2);
  const Functional a = from_generator_values(m, vals({"1", "1/2"}));
  const Functional b = from_generator_values(m, vals({"3", "inf"}));
  const Functional g = complement(m, a, b);
  CHECK(generator_values(m, g) == vals({"2", "inf"}));
  CHECK(functional_add(m, a, g) == b);
  try {
    complement(m, b, a);
    FAIL("expected NotDominated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDominated);
  }
}

TEST_CASE("finite table functionals") {
  const CuModel m = fixtures::truncated_chain(2);  // 0,1,2,INF
  const auto cone = compute_cone(m);
  CHECK_FALSE(cone.representatives.empty());
  for (const auto& r : cone.representatives) CHECK_FALSE(functional_violation(m, r).has_value());
  // hat order agrees with the order on a finite table up to the cone's reach
  for (const auto& s : m.elements())
    for (const auto& t : m.elements())
      if (m.leq(s, t)) CHECK(compare_hat_lp(m, s, t, cone));
}

TEST_CASE("regularize restores supremum preservation") {
  const CuModel m = CuModel::nbar_power(1);
  RawMap raw;
  raw.finite_gen = vals({"1"});
  raw.inf_gen = vals({"0"});
  CHECK_THROWS_AS(validate_raw(m, raw), Error);  // 1 <= INF but 1 > 0
  // 0 on finite elements, INF on INF: additive and monotone, not sup-preserving
  raw.finite_gen = vals({"0"});
  raw.inf_gen = vals({"inf"});
  CHECK_NOTHROW(validate_raw(m, raw));
  CHECK(regularize(m, raw) == zero_functional(m));
}
