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

#include <algorithm>
#include <random>
#include <set>

#include "cu/polycone.hpp"

using namespace cu;

namespace {

bool in_cone(const HCone& c, const Vec& x) {
  for (const auto& v : x)
    if (v < 0) return false;
  for (const auto& e : c.equalities)
    if (dot(e, x) != 0) return false;
  for (const auto& g : c.inequalities)
    if (dot(g, x) < 0) return false;
  return true;
}

// brute force: a ray of a pointed cone is a point of the cone whose tight
// constraints (x_i = 0, g.x = 0, plus equalities) have rank dim-1
std::set<Vec> brute_rays(const HCone& c) {
  std::vector<Vec> all = c.equalities;
  for (std::size_t i = 0; i < c.dim; ++i) {
    Vec e(c.dim, 0);
    e[i] = 1;
    all.push_back(e);
  }
  for (const auto& g : c.inequalities) all.push_back(g);
  std::set<Vec> out;
  const std::size_t n = all.size();
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i)
      if (i < c.equalities.size() || (mask >> i & 1)) rows.push_back(all[i]);
    const auto ns = nullspace(rows, c.dim);
    if (ns.size() != 1) continue;
    Vec neg = ns[0];
    for (auto& x : neg) x = -x;
    for (Vec cand : {ns[0], neg}) {
      normalize_ray(cand);
      if (in_cone(c, cand)) out.insert(cand);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("orthant rays are the unit vectors") {
  HCone c{3, {}, {}};
  const auto rays = extreme_rays(c);
  CHECK(rays.size() == 3);
  CHECK(std::set<Vec>(rays.begin(), rays.end()) == brute_rays(c));
}

TEST_CASE("extreme rays agree with a tight-constraint enumeration") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int trial = 0; trial < 60; ++trial) {
    HCone c;
    c.dim = 2 + trial % 3;
    const int ineq = trial % 3, eq = trial % 5 == 0 ? 1 : 0;
    for (int i = 0; i < ineq; ++i) {
      Vec g(c.dim);
      for (auto& x : g) x = coef(rng);
      c.inequalities.push_back(g);
    }
    for (int i = 0; i < eq; ++i) {
      Vec e(c.dim);
      for (auto& x : e) x = coef(rng);
      c.equalities.push_back(e);
    }
    const auto rays = extreme_rays(c);
    CHECK(std::set<Vec>(rays.begin(), rays.end()) == brute_rays(c));
  }
}

TEST_CASE("conic combinations are reconstructed exactly") {
  const std::vector<Vec> gens = {{1, 0, 1}, {0, 1, 1}, {1, 1, 0}};
  const Vec x = {Rational(3, 2), Rational(5, 2), 2};
  const auto c = conic_combination(gens, x);
  REQUIRE(c.has_value());
  Vec back(3, 0);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < 3; ++j) back[j] += (*c)[i] * gens[i][j];
  CHECK(back == x);
  for (const auto& v : *c) CHECK(v >= 0);
  CHECK_FALSE(conic_combination({{1, 0}, {1, 1}}, Vec{0, 1}).has_value());
}

TEST_CASE("rank and nullspace") {
  const std::vector<Vec> rows = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  CHECK(rank(rows, 3) == 2);
  const auto ns = nullspace(rows, 3);
  REQUIRE(ns.size() == 1);
  for (const auto& r : rows) CHECK(dot(r, ns[0]) == 0);
}
