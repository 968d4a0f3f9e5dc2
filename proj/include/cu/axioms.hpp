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
#include <optional>
#include <utility>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cu/model.hpp"

namespace cu {

enum class AxiomStatus { Pass, Fail, Vacuous };
enum class CheckMethod { Exhaustive, Analytic, Sampled };

std::string_view to_string(AxiomStatus s);
std::string_view to_string(CheckMethod m);

struct AxiomReport {
  std::string axiom;  // "O1".."O6"
  AxiomStatus status = AxiomStatus::Pass;
  CheckMethod method = CheckMethod::Exhaustive;
  /// O5: (s', s, t). O6: (s', s, r, t). Empty unless FAIL.
  std::vector<Element> counterexample;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  /// Hypothesis instances examined.
  std::uint64_t cases = 0;
  std::string note;
};

struct AxiomOptions {
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  /// Largest finite coordinate drawn by the samplers.
  std::uint64_t bound = 6;
  bool force = false;
};

std::vector<AxiomReport> check_O1_to_O4(const CuModel& m, const AxiomOptions& opts = {});
AxiomReport check_O5(const CuModel& m, const AxiomOptions& opts = {});
AxiomReport check_O6(const CuModel& m, const AxiomOptions& opts = {});
/// O1..O6 in order.
std::vector<AxiomReport> check_axioms(const CuModel& m, const AxiomOptions& opts = {});

/// Exact searches used by the checkers and by replay.
/// r with s' + r <= t <= s + r.
std::optional<Element> find_o5_witness(const CuModel& m, const Element& sp, const Element& s, const Element& t);
/// (r', t') with s' <= r' + t', r' <= r, s and t' <= t, s.
std::optional<std::pair<Element, Element>> find_o6_witness(const CuModel& m, const Element& sp, const Element& s,
                                                          const Element& r, const Element& t);

/// Re-runs a FAIL counterexample through the model: true iff the hypothesis
/// holds and no witness exists.
bool replay_counterexample(const CuModel& m, const AxiomReport& report);

nlohmann::json axiom_report_to_json(const CuModel& m, const AxiomReport& r);

}  // namespace cu
