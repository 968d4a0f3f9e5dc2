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

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cu/ext.hpp"

namespace cu {

using Vec = std::vector<Rational>;

/// {x >= 0 : E x = 0, G x >= 0} in dimension `dim`.
struct HCone {
  std::size_t dim = 0;
  std::vector<Vec> equalities;
  std::vector<Vec> inequalities;
};

Rational dot(const Vec& a, const Vec& b);

/// Scales so the first nonzero entry is 1. Zero vectors are left alone.
void normalize_ray(Vec& v);

/// Extreme rays of a pointed cone inside the nonnegative orthant, by the
/// double description method in exact arithmetic. Rays are normalized,
/// deduplicated and sorted lexicographically descending.
std::vector<Vec> extreme_rays(const HCone& cone);

/// Feasibility of x = sum_i c_i gens[i], c >= 0, by phase-one simplex with
/// Bland's rule. Returns the coefficients when feasible.
std::optional<Vec> conic_combination(const std::vector<Vec>& gens, const Vec& x);

/// Basis of {x : A x = 0} (A given by rows, `dim` columns).
std::vector<Vec> nullspace(const std::vector<Vec>& rows, std::size_t dim);

/// Rank of the row set.
std::size_t rank(std::vector<Vec> rows, std::size_t dim);

}  // namespace cu
