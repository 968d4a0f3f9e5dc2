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

#include <random>

#include "cu/fixtures.hpp"
#include "cu/lattice.hpp"

using namespace cu;

namespace {

// functionals on N-bar^k are coefficient vectors in [0,INF]^k, a lattice
// under coordinatewise max and min
Functional coordinatewise(const CuModel& m, const Functional& a, const Functional& b, bool take_max) {
  auto x = generator_values(m, a), y = generator_values(m, b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = take_max ? max(x[i], y[i]) : min(x[i], y[i]);
  return from_generator_values(m, x);
}

Functional random_functional(const CuModel& m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, 8);
  std::vector<ExtRational> v;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    const int r = d(rng);
    v.push_back(r == 8 ? ExtRational::inf() : ExtRational(Rational(r, 2)));
  }
  return from_generator_values(m, v);
}

}  // namespace

TEST_CASE("join and meet on N-bar powers are coordinatewise max and min") {
  std::mt19937_64 rng(11);
  for (std::size_t k = 1; k <= 3; ++k) {
    const CuModel m = CuModel::nbar_power(k);
    for (int t = 0; t < 40; ++t) {
      const Functional a = random_functional(m, rng), b = random_functional(m, rng);
      CHECK(join(m, a, b) == coordinatewise(m, a, b, true));
      CHECK(meet(m, a, b) == coordinatewise(m, a, b, false));
    }
  }
}

TEST_CASE("lattice identities hold on N-bar and finite fixtures") {
  std::mt19937_64 rng(5);
  const CuModel m = CuModel::nbar_power(2);
  const auto ops = kantorovich_ops(m);
  for (int t = 0; t < 20; ++t) {
    const auto r = check_lattice_identities(m, random_functional(m, rng), random_functional(m, rng),
                                            random_functional(m, rng), ops);
    CHECK(r.all_pass());
  }
  const CuModel f = fixtures::truncated_chain(2);
  const auto cone = compute_cone(f);
  const auto fops = kantorovich_ops(f);
  const auto& reps = cone.representatives;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j)
      CHECK(check_lattice_identities(f, reps[i], reps[j], reps[(i + j) % reps.size()], fops).all_pass());
}

TEST_CASE("kantorovich formulas on a single element") {
  const CuModel m = CuModel::nbar_power(1);
  const Functional a = from_generator_values(m, {ExtRational(1)});
  const Functional b = from_generator_values(m, {ExtRational(3)});
  const Element f = m.parse_element("2");
  CHECK(kantorovich_sup(m, a, b, f) == ExtRational(6));
  CHECK(kantorovich_inf(m, a, b, f) == ExtRational(2));
}

TEST_CASE("directed suprema") {
  const CuModel m = CuModel::nbar_power(2);
  const auto f1 = from_generator_values(m, {ExtRational(1), ExtRational(0)});
  const auto f2 = from_generator_values(m, {ExtRational(2), ExtRational(1)});
  CHECK(directed_sup(m, {f1, f2}) == f2);
  const auto g = from_generator_values(m, {ExtRational(0), ExtRational(3)});
  try {
    directed_sup(m, {f1, g});
    FAIL("expected NotDirected");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDirected);
  }
}
