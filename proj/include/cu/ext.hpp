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

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cu {

using Rational = mpq_class;

/// An element of {0, 1, 2, ..., INF}. Finite addition that would overflow
/// 64 bits throws; only INF absorbs.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr ExtNat(std::uint64_t v) : value_(v) {}  // NOLINT: implicit by design of literals

  static constexpr ExtNat inf() {
    ExtNat e;
    e.inf_ = true;
    return e;
  }

  constexpr bool is_inf() const { return inf_; }
  constexpr bool is_zero() const { return !inf_ && value_ == 0; }
  /// Finite value; must not be called on INF.
  std::uint64_t value() const;

  friend ExtNat operator+(ExtNat a, ExtNat b);
  /// n * a with n * INF = INF for n > 0 and 0 * INF = 0.
  friend ExtNat operator*(std::uint64_t n, ExtNat a);
  /// Truncated difference a - b (0 when b >= a); INF - finite = INF. b must be finite.
  friend ExtNat monus(ExtNat a, ExtNat b);

  friend constexpr bool operator==(ExtNat a, ExtNat b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b) {
    if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const;

 private:
  std::uint64_t value_ = 0;
  bool inf_ = false;
};

inline ExtNat min(ExtNat a, ExtNat b) { return a <= b ? a : b; }
inline ExtNat max(ExtNat a, ExtNat b) { return a <= b ? b : a; }

/// A value in [0, INF] with exact rational finite part.
///
/// Multiplication follows the convention 0 * INF = 0, so that the zero
/// functional and infinite coefficients coexist: a coefficient vector with an
/// INF entry still evaluates to 0 on elements whose coordinate there is 0.
class ExtRational {
 public:
  ExtRational() = default;
  ExtRational(Rational q);  // NOLINT
  ExtRational(long v) : ExtRational(Rational(v)) {}  // NOLINT
  ExtRational(int v) : ExtRational(Rational(v)) {}  // NOLINT
  ExtRational(ExtNat n);  // NOLINT

  static ExtRational inf() {
    ExtRational e;
    e.inf_ = true;
    return e;
  }

  bool is_inf() const { return inf_; }
  bool is_finite() const { return !inf_; }
  bool is_zero() const { return !inf_ && q_ == 0; }
  /// Finite value; must not be called on INF.
  const Rational& value() const;

  friend ExtRational operator+(const ExtRational& a, const ExtRational& b);
  friend ExtRational operator*(const ExtRational& a, const ExtRational& b);
  ExtRational& operator+=(const ExtRational& b);

  /// a - b for finite b <= a (INF - finite = INF). Throws std::domain_error otherwise.
  friend ExtRational difference(const ExtRational& a, const ExtRational& b);

  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

  /// "inf", "3" or "3/4".
  std::string to_string() const;
  /// Inverse of to_string; also accepts "INF". Throws cu::Error(ParseError).
  static ExtRational parse(std::string_view text);

 private:
  Rational q_{0};
  bool inf_ = false;
};

inline const ExtRational& min(const ExtRational& a, const ExtRational& b) { return a <= b ? a : b; }
inline const ExtRational& max(const ExtRational& a, const ExtRational& b) { return a <= b ? b : a; }

std::ostream& operator<<(std::ostream& os, ExtNat n);
std::ostream& operator<<(std::ostream& os, const ExtRational& q);

/// Canonical text for a rational, "p" or "p/q".
std::string rational_to_string(const Rational& q);
Rational parse_rational(std::string_view text);

}  // namespace cu
