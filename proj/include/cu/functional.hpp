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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cu/model.hpp"
#include "cu/polycone.hpp"

namespace cu {

/// Bit mask. Finite tables: member set. NBAR_POWER: coordinate support A,
/// members are the elements supported inside A. Chain: same, and only
/// suffixes of {0..k-1} occur (supports of nondecreasing vectors are suffixes).
using Ideal = std::uint64_t;

bool ideal_contains(const CuModel& m, Ideal ideal, const Element& a);

/// A functional S -> [0, INF].
///
/// Finite tables: `values[a]` for every element a. Effective models:
/// coefficients, lambda(u) = sum_i values[i] * u_i with 0 * INF = 0. The form
/// is canonical: two functionals are equal iff their vectors are equal.
/// `ideal` is derived (INF entries mark the complement).
struct Functional {
  Ideal ideal = 0;
  std::vector<ExtRational> values;

  friend bool operator==(const Functional&, const Functional&) = default;
};

ExtRational evaluate(const CuModel& m, const Functional& f, const Element& a);
/// Values on the finite generators (effective models).
std::vector<ExtRational> generator_values(const CuModel& m, const Functional& f);
/// Canonical functional with the given generator values. Chain values must be
/// nonincreasing (throws NotMonotone otherwise).
Functional from_generator_values(const CuModel& m, const std::vector<ExtRational>& mu);
/// Finite tables: builds from a full value vector.
Functional from_values(const CuModel& m, std::vector<ExtRational> values);

Functional zero_functional(const CuModel& m);
/// lambda_I: 0 on I, INF elsewhere.
Functional lambda_ideal(const CuModel& m, Ideal ideal);

/// Pointwise order. Decided on all elements (finite) or on generators g and
/// INF*g (effective; every element is an N-bar combination of generators).
bool functional_leq(const CuModel& m, const Functional& a, const Functional& b);
/// First element where a > b, if any.
std::optional<Element> functional_leq_witness(const CuModel& m, const Functional& a, const Functional& b);
Functional functional_add(const CuModel& m, const Functional& a, const Functional& b);
Functional functional_scale(const CuModel& m, const Rational& q, const Functional& a);

std::string functional_to_string(const CuModel& m, const Functional& f);
nlohmann::json functional_to_json(const CuModel& m, const Functional& f);

/// Elements used for exact checks: all elements (finite) or generators and
/// their INF multiples (effective).
std::vector<Element> check_points(const CuModel& m);

/// Runs the invariant suite (zero, additivity, monotonicity on a grid,
/// ideal shape, supremum preservation along truncations). Returns the first
/// violation as text.
std::optional<std::string> functional_violation(const CuModel& m, const Functional& f, std::uint64_t bound = 2);

// ------------------------------------------------------------- raw maps

/// An additive monotone map that need not preserve suprema.
/// Finite tables: `values` per element. Effective: `finite_gen[j]` on g_j and
/// `inf_gen[j]` on INF*g_j.
struct RawMap {
  std::vector<ExtRational> values;
  std::vector<ExtRational> finite_gen;
  std::vector<ExtRational> inf_gen;
};

ExtRational evaluate_raw(const CuModel& m, const RawMap& a, const Element& x);
RawMap raw_from_functional(const CuModel& m, const Functional& f);
/// Throws NotAdditive or NotMonotone with a witness. Exhaustive on finite
/// tables, on grid(bound) for effective models.
void validate_raw(const CuModel& m, const RawMap& a, std::uint64_t bound = 2);
/// sup_{s' << s} alpha(s'). Identity on finite tables; on effective models it
/// keeps the generator values and sets alpha(INF*g) = INF*alpha(g).
Functional regularize(const CuModel& m, const RawMap& a, std::uint64_t bound = 2);

// --------------------------------------------------------------- cone

struct FunctionalCone {
  std::vector<Ideal> ideals;
  /// rays[i]: extreme rays of the finite-part cone of ideals[i], each as a
  /// full functional (INF off the ideal).
  std::vector<std::vector<Functional>> rays;
  /// Per ideal in order: lambda_I, then its rays.
  std::vector<Functional> representatives;
  std::vector<std::size_t> rep_ideal;
  std::vector<bool> rep_is_ray;
};

/// Ideals ordered by (popcount, mask).
std::vector<Ideal> enumerate_ideals(const CuModel& m, bool force = false);
/// The finite-part cone of `ideal` as an H-description over the ideal's
/// variables (element values for finite tables, generator values otherwise).
HCone finite_part_system(const CuModel& m, Ideal ideal, std::vector<std::size_t>* variables = nullptr);
std::vector<Functional> cone_rays(const CuModel& m, Ideal ideal);
FunctionalCone compute_cone(const CuModel& m, bool force = false);
nlohmann::json cone_to_json(const CuModel& m, const FunctionalCone& cone);

std::vector<ExtRational> hat_evaluate(const CuModel& m, const Element& s, const FunctionalCone& cone);
bool compare_hat_lp(const CuModel& m, const Element& s, const Element& t, const FunctionalCone& cone);

struct MnWitness {
  Element s_prime;
  Rational eps;
  std::uint64_t M = 0;
  std::uint64_t N = 0;
};

struct MnResult {
  bool verdict = false;
  std::vector<MnWitness> witnesses;
  /// On a false verdict: the s' and eps that admit no (M, N).
  std::optional<Element> failing_s_prime;
  Rational failing_eps;
};

struct MnOptions {
  unsigned eps_depth = 8;
  /// Cap on M, N for effective models; exceeding it throws SearchBoundExceeded.
  std::uint64_t search_bound = 1u << 20;
};

MnResult compare_hat_mn(const CuModel& m, const Element& s, const Element& t, const MnOptions& opts = {});

/// gamma with alpha + gamma = beta. Throws NotDominated unless alpha <= beta.
Functional complement(const CuModel& m, const Functional& alpha, const Functional& beta, std::uint64_t bound = 2);

}  // namespace cu
