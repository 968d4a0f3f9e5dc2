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

#include <string>
#include <vector>

#include "cu/model.hpp"

namespace cu::fixtures {

/// {0}
CuModel trivial();
/// {0, INF}
CuModel two_point();
/// {0,1,...,m,INF}; any sum exceeding m becomes INF.
CuModel truncated_chain(std::uint32_t m);
/// {0,...,m} under max.
CuModel idempotent_chain(std::uint32_t m);
/// Coordinatewise product; index of (a,b) is a*|B| + b.
CuModel product(const CuModel& a, const CuModel& b);
/// {0,a,b,t} with every nonzero sum equal to t and a, b incomparable.
/// A valid ordered monoid that violates weak Riesz decomposition.
CuModel broken_o6();

struct Named {
  std::string name;
  CuModel model;
};

/// Models the selftest runs on: small tables (n <= 10) and the effective
/// families NBAR_POWER(1..3), MONOTONE_NBAR_CHAIN(1..4).
std::vector<Named> builtin_models();
std::vector<Named> builtin_finite();

}  // namespace cu::fixtures
