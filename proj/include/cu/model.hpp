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
#include <string_view>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cu/error.hpp"
#include "cu/ext.hpp"

namespace cu {

enum class ModelKind { FiniteTable, NbarPower, MonotoneChain };

std::string_view to_string(ModelKind kind);

/// A member of a model. Finite tables use `index`; the effective models
/// (NBAR_POWER, MONOTONE_NBAR_CHAIN) use `coords`.
struct Element {
  ModelKind kind = ModelKind::FiniteTable;
  std::uint32_t index = 0;
  std::vector<ExtNat> coords;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element& a, const Element& b) {
    if (auto c = a.index <=> b.index; c != 0) return c;
    return a.coords <=> b.coords;
  }

  bool has_infinite_coordinate() const;
  std::string to_string() const;
};

/// Exhaustive routines refuse finite tables larger than this unless forced.
inline constexpr std::size_t kExhaustiveLimit = 64;

/// A positive ordered abelian monoid with an explicit order.
///
/// * FINITE_TABLE: elements 0..n-1, addition and order given extensionally.
/// * NBAR_POWER(k): vectors in {0,1,...,INF}^k, coordinatewise sum and order.
/// * MONOTONE_NBAR_CHAIN(k): nondecreasing vectors in {0,...,INF}^k, i.e.
///   lower semicontinuous functions on a k-point chain.
///
/// Models are immutable after construction.
class CuModel {
 public:
  /// Validates every table invariant; throws Error(InvariantViolation) naming
  /// the first failure.
  static CuModel finite_table(std::vector<std::vector<std::uint32_t>> add, std::vector<std::vector<bool>> leq);
  static CuModel nbar_power(std::size_t k);
  static CuModel monotone_chain(std::size_t k);

  ModelKind kind() const { return kind_; }
  bool is_finite() const { return kind_ == ModelKind::FiniteTable; }
  /// Number of elements (finite tables only).
  std::size_t size() const { return n_; }
  /// Number of coordinates (effective models only).
  std::size_t dim() const { return k_; }
  const std::vector<std::vector<std::uint32_t>>& add_table() const { return add_; }
  const std::vector<std::vector<bool>>& leq_table() const { return leq_; }

  Element zero() const;
  Element element(std::uint32_t index) const;
  Element element(std::vector<ExtNat> coords) const;
  /// Throws ElementModelMismatch if `a` is not a valid member.
  void require_member(const Element& a) const;
  bool contains(const Element& a) const;

  Element add(const Element& a, const Element& b) const;
  bool leq(const Element& a, const Element& b) const;
  /// a << b. Finite tables: a << b iff a <= b, since every increasing
  /// sequence in a finite poset is eventually constant and hence reaches its
  /// supremum. Effective models: a << b iff a <= b and every coordinate of a is
  /// finite. (If a is finite, an increasing sequence whose coordinatewise sup
  /// dominates b eventually exceeds each finite a_i; if a_i = INF, the
  /// truncations min(b, n) have supremum b and never dominate a.)
  bool way_below(const Element& a, const Element& b) const;
  Element nat_multiple(std::uint64_t n, const Element& a) const;
  /// sup_n n*a.
  Element infinity_multiple(const Element& a) const;

  /// min(a, c*1) coordinatewise (effective models); identity on finite tables.
  Element truncate(const Element& a, std::uint64_t c) const;

  /// All elements (finite tables only).
  std::vector<Element> elements() const;
  /// Finite additive generators: e_i (NBAR_POWER), the step vectors
  /// chi_j = (0,..,0,1,..,1) starting at j (chain), every nonzero element
  /// (finite tables).
  std::vector<Element> generators() const;
  /// Elements with every finite coordinate <= bound, plus INF entries
  /// (effective); all elements (finite tables).
  std::vector<Element> grid(std::uint64_t bound, bool with_inf = true) const;
  /// Elements b with b <= a. Finite set; `a` must have finite coordinates
  /// when the model is effective.
  std::vector<Element> below(const Element& a) const;
  /// Largest element if one exists (finite tables: checked; effective: all INF).
  std::optional<Element> top() const;

  /// Generator multiplicities of an effective element: a = sum_j m_j g_j with
  /// m_j in {0,..,INF}; entries after an INF multiplicity on a chain are 0.
  std::vector<ExtNat> decompose(const Element& a) const;

  nlohmann::json to_json() const;
  static CuModel from_json(const nlohmann::json& j);
  /// Canonical text (sorted keys, no whitespace).
  std::string save() const;
  static CuModel load(std::string_view text);
  static CuModel load_file(const std::string& path);

  nlohmann::json element_to_json(const Element& a) const;
  Element element_from_json(const nlohmann::json& j) const;
  /// Accepts JSON text or bare tokens such as `3`, `inf`, `[1,inf]`.
  Element parse_element(std::string_view text) const;

  /// Throws ModelTooLarge when an exhaustive routine is asked to run on a
  /// table larger than kExhaustiveLimit without `force`.
  void require_exhaustive_ok(bool force) const;

  /// 64-bit FNV-1a of the canonical text, hex encoded.
  std::string digest() const;

  friend bool operator==(const CuModel&, const CuModel&) = default;

 private:
  CuModel() = default;

  ModelKind kind_ = ModelKind::FiniteTable;
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::vector<std::vector<std::uint32_t>> add_;
  std::vector<std::vector<bool>> leq_;
  // multiples_[m][a] = m*a for m <= n (finite tables); stable beyond n.
  std::vector<std::vector<std::uint32_t>> multiples_;
};

}  // namespace cu
