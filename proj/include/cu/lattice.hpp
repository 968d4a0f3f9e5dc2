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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cu/functional.hpp"

namespace cu {

struct LatticeOptions {
  /// Effective models: the generator formula is replayed by brute force on
  /// every finite grid point with coordinates <= this bound.
  std::uint64_t validation_bound = 1;
  bool force = false;
};

/// sup { a(f1) + b(f2) : f1 + f2 <= f }, the sup taken over f1, f2 <= f.
/// `f` must have finite coordinates on effective models.
ExtRational kantorovich_sup(const CuModel& m, const Functional& a, const Functional& b, const Element& f);
/// inf { a(f1) + b(f2) : f <= f1 + f2 }. Covers may be cut down to min(f_i, f)
/// without raising the value, so effective models search below f only.
ExtRational kantorovich_inf(const CuModel& m, const Functional& a, const Functional& b, const Element& f);

/// Least upper bound in F(S): the sup formula followed by regularization.
/// Throws NotAdditive if the result fails the brute-force replay.
Functional join(const CuModel& m, const Functional& a, const Functional& b, const LatticeOptions& opts = {});
/// Greatest lower bound: the inf formula, then sup over f' << f.
Functional meet(const CuModel& m, const Functional& a, const Functional& b, const LatticeOptions& opts = {});

/// Pointwise supremum of a finite upward directed family. Throws NotDirected
/// with the offending pair.
Functional directed_sup(const CuModel& m, const std::vector<Functional>& family);

struct LatticeOps {
  std::function<Functional(const Functional&, const Functional&)> join;
  std::function<Functional(const Functional&, const Functional&)> meet;
};

LatticeOps kantorovich_ops(const CuModel& m, const LatticeOptions& opts = {});

struct LawResult {
  std::string law;
  bool pass = true;
  /// Element where the two sides differ.
  std::string witness;
};

struct LatticeReport {
  std::vector<LawResult> laws;
  bool all_pass() const;
};

/// Both translation identities plus commutativity, associativity,
/// idempotence, absorption, both distributive laws and the bound laws on the
/// triple. Equalities are exact on check_points(m).
LatticeReport check_lattice_identities(const CuModel& m, const Functional& l1, const Functional& l2,
                                       const Functional& l3, const LatticeOps& ops);

nlohmann::json lattice_report_to_json(const LatticeReport& r);

}  // namespace cu
