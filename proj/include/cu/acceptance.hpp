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

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace cu::acceptance {

struct Options {
  std::uint64_t seed = 0;
  /// Sampled trials for the effective-model axiom checks (at least 1000 is used).
  std::uint64_t trials = 1000;
  /// Grid denominator for the refinement search.
  std::uint64_t denominator = 4;
  bool force = false;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  /// Counts and the first few failures; no timings.
  nlohmann::json evidence;
  double elapsed_ms = 0;
};

constexpr int kCriteria = 8;

/// Runs a single criterion (1..8). Criterion 8 reruns 1..7 twice.
CriterionResult run_criterion(int id, const Options& opts);
/// Criteria 1..8 in order. Criterion 8 reuses the first pass as one of its runs.
std::vector<CriterionResult> run_all(const Options& opts);

/// Deterministic report body: no elapsed times.
nlohmann::json results_json(const std::vector<CriterionResult>& results);
/// Full "cu-lattice/1" selftest report including elapsed_ms.
nlohmann::json selftest_report(const std::vector<CriterionResult>& results, const Options& opts, double elapsed_ms);

}  // namespace cu::acceptance
