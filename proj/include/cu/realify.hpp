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
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <nlohmann/json.hpp>

#include "cu/functional.hpp"

namespace cu {

/// A linear lower semicontinuous function on F(S), stored by its values on
/// the cone's representative list. `term` records how it was built.
struct RealElement {
  std::vector<ExtRational> values;
  std::string term;

  /// Value equality; the term is provenance only.
  friend bool operator==(const RealElement& a, const RealElement& b) { return a.values == b.values; }
};

struct GridOptions {
  /// Denominator bound D.
  std::uint64_t denominator = 4;
  /// Numerator bound B (coefficients a/D with a <= D*B). 0 = derived from
  /// the inputs' largest finite value.
  std::uint64_t value_bound = 0;
  /// DFS node budget; exceeding it throws SearchBoundExceeded.
  std::uint64_t node_cap = 2'000'000;
};

enum class RefinementStatus { Found, GridExhausted };

struct RefinementResult {
  RefinementStatus status = RefinementStatus::GridExhausted;
  /// h[i][j], filled when found.
  std::vector<std::vector<RealElement>> h;
  std::uint64_t nodes = 0;
};

struct ConeIsoReport {
  bool representatives_distinct = true;
  bool embedding_additive = true;
  bool extensions_unique = true;
  bool combinations_in_cone = true;
  bool idempotent = true;
  std::size_t generators = 0;
  std::size_t samples = 0;
  std::string witness;
  bool pass() const {
    return representatives_distinct && embedding_additive && extensions_unique && combinations_in_cone && idempotent;
  }
};

struct CancellationResult {
  bool premise = false;
  bool conclusion = false;
  /// Least n <= bound with h <= n*g.
  std::uint64_t n = 0;
  bool holds() const { return !premise || conclusion; }
};

struct InterpolationReport {
  bool sup_compatible = true;    // sup_n (f ^ g_n) = f ^ sup_n g_n
  bool translation = true;       // f^g + h = (f+h)^(g+h)
  bool subadditive = true;       // (f+g)^h <= f^h + g^h
  bool pass() const { return sup_compatible && translation && subadditive; }
};

/// S_R = L(F(S)) at representative level.
class Realification {
 public:
  explicit Realification(CuModel m, bool force = false);

  const CuModel& model() const { return model_; }
  const FunctionalCone& cone() const { return cone_; }
  std::size_t dimension() const { return cone_.representatives.size(); }

  RealElement zero() const;
  RealElement embed(const Element& s) const;
  /// q > 0; throws HypothesisFailed otherwise.
  static RealElement scale(const Rational& q, const RealElement& f);
  static RealElement add(const RealElement& f, const RealElement& g);
  static bool leq(const RealElement& f, const RealElement& g);
  /// Pointwise supremum of a chain increasing under leq; NotIncreasing otherwise.
  static RealElement sup_increasing(const std::vector<RealElement>& chain);

  /// Proxy for f << g via triangle: some eps > 0 with f <= (1-eps) g on every
  /// representative, and f finite on every ray near a representative where g
  /// is finite (rays whose ideal contains that representative's ideal).
  bool triangle_lhd(const RealElement& f, const RealElement& g) const;
  /// max f/g over representatives with g finite and positive (0 if none);
  /// nullopt when f <= (1-eps) g fails for every eps.
  std::optional<Rational> lhd_ratio(const RealElement& f, const RealElement& g) const;
  /// Representative-level membership in S_R: the values must be well defined
  /// and monotone on every sum of at most two representatives.
  bool is_member(const RealElement& f) const;
  /// f << g, decided as f = 0 or f triangle g.
  bool way_below(const RealElement& f, const RealElement& g) const;

  /// (1 - 2^-n) f for n = 1..N.
  std::vector<RealElement> rapid_chain(const RealElement& f, unsigned N = 8) const;
  /// Least 1-based N with f <= chain[N] + eps*g; NoIndexWithinChain if none.
  std::size_t dini_index(const RealElement& f, const std::vector<RealElement>& chain, const RealElement& g,
                         const Rational& eps) const;
  /// h with f + h = g; requires f triangle g. With `proportional`, h also
  /// dominates a positive multiple of g, so f is proportional below h.
  RealElement complement(const RealElement& f, const RealElement& g, bool proportional = false) const;
  /// (h, h') with f' << h << f and h + h' = g.
  std::pair<RealElement, RealElement> almost_algebraic_split(const RealElement& fp, const RealElement& f,
                                                             const RealElement& g) const;

  /// Searches h[i][j] on the rational span grid with
  ///   f'_i << sum_j h_ij <= f_i  and  sum_i h_ij <= g_j.
  RefinementResult refinement_witness(const std::vector<RealElement>& fp, const std::vector<RealElement>& f,
                                      const std::vector<RealElement>& g, const GridOptions& opts = {}) const;
  /// Checks a matrix against the refinement conditions.
  bool refinement_valid(const std::vector<RealElement>& fp, const std::vector<RealElement>& f,
                        const std::vector<RealElement>& g, const std::vector<std::vector<RealElement>>& h) const;

  /// Largest grid element below both f and g; GridExhausted if the grid has
  /// no greatest lower bound.
  RealElement interpolation_meet(const RealElement& f, const RealElement& g, const GridOptions& opts = {}) const;
  InterpolationReport check_interpolation(const RealElement& f, const std::vector<RealElement>& g_chain,
                                          const RealElement& h, const GridOptions& opts = {}) const;

  ConeIsoReport cone_iso_check(std::uint64_t seed = 0, std::size_t samples = 64) const;
  /// ProportionalityUnverified if no n <= bound gives h <= n*g.
  CancellationResult cancellation_check(const RealElement& f, const RealElement& g, const RealElement& h,
                                        std::uint64_t bound = 64) const;

  /// Candidate pool of the span grid sum_j (a_j/D) g_j + INF-flags.
  const std::vector<RealElement>& grid_pool(std::uint64_t denominator, std::uint64_t value_bound) const;

  nlohmann::json to_json(const RealElement& f) const;

 private:
  struct Pool {
    std::vector<RealElement> items;
    std::map<std::vector<ExtRational>, boost::dynamic_bitset<>> below_cache;
  };
  Pool& pool(std::uint64_t denominator, std::uint64_t value_bound) const;
  const boost::dynamic_bitset<>& below_bits(Pool& p, const RealElement& bound) const;
  std::uint64_t derived_bound(std::initializer_list<const std::vector<RealElement>*> groups) const;

  void build_order() const;

  CuModel model_;
  FunctionalCone cone_;
  std::vector<Element> generators_;
  mutable std::mutex mu_;
  mutable std::once_flag order_once_;
  // (lhs, rhs) index lists with sum lhs <= sum rhs as functionals
  mutable std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> order_pairs_;
  mutable std::map<std::pair<std::uint64_t, std::uint64_t>, std::unique_ptr<Pool>> pools_;
};

/// Glimm halving on a simple model: z != 0 with 2z <= x, or the chain case
/// (S is generated by a minimal e with everything n*e or the top).
struct HalvingResult {
  bool chain_case = false;
  std::optional<Element> z;
  std::optional<Element> e;  // the generator in the chain case
};

/// Throws NotSimple unless INF*s is the top for every s != 0, and
/// HypothesisFailed if neither a witness nor the chain structure is found.
HalvingResult halving(const CuModel& m, const Element& x);
/// The minimal e generating a chain {0, e, 2e, ..., top}, if the model is one.
std::optional<Element> chain_generator(const CuModel& m);
/// Simplicity test; returns the first s != 0 with INF*s below the top.
std::optional<Element> simplicity_witness(const CuModel& m);

}  // namespace cu
