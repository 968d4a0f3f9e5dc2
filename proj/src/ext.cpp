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

#include "cu/ext.hpp"

#include <cctype>
#include <stdexcept>

#include "cu/error.hpp"

namespace cu {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ElementModelMismatch: return "ElementModelMismatch";
    case ErrorCode::UnrepresentableSupremum: return "UnrepresentableSupremum";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::ModelTooLarge: return "ModelTooLarge";
    case ErrorCode::NotAdditive: return "NotAdditive";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::NotDominated: return "NotDominated";
    case ErrorCode::SearchBoundExceeded: return "SearchBoundExceeded";
    case ErrorCode::NotDirected: return "NotDirected";
    case ErrorCode::NotIncreasing: return "NotIncreasing";
    case ErrorCode::NoIndexWithinChain: return "NoIndexWithinChain";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::GridExhausted: return "GridExhausted";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::ProportionalityUnverified: return "ProportionalityUnverified";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::string witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)) {}

// ---------------------------------------------------------------- ExtNat

std::uint64_t ExtNat::value() const {
  if (inf_) throw std::domain_error("ExtNat::value on INF");
  return value_;
}

ExtNat operator+(ExtNat a, ExtNat b) {
  if (a.inf_ || b.inf_) return ExtNat::inf();
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a.value_, b.value_, &r)) throw std::overflow_error("ExtNat addition overflow");
  return ExtNat(r);
}

ExtNat operator*(std::uint64_t n, ExtNat a) {
  if (n == 0 || a.is_zero()) return ExtNat(0);
  if (a.inf_) return ExtNat::inf();
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(n, a.value_, &r)) throw std::overflow_error("ExtNat multiple overflow");
  return ExtNat(r);
}

ExtNat monus(ExtNat a, ExtNat b) {
  if (b.inf_) throw std::domain_error("monus by INF");
  if (a.inf_) return a;
  return ExtNat(a.value_ > b.value_ ? a.value_ - b.value_ : 0);
}

std::string ExtNat::to_string() const { return inf_ ? "inf" : std::to_string(value_); }

std::ostream& operator<<(std::ostream& os, ExtNat n) { return os << n.to_string(); }

// ----------------------------------------------------------- ExtRational

std::string rational_to_string(const Rational& in) {
  Rational q = in;
  q.canonicalize();  // Rational(6, 4) arrives unreduced
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-'))
      throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
  if (q.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

ExtRational::ExtRational(Rational q) : q_(std::move(q)) {
  q_.canonicalize();
  if (q_ < 0) throw std::domain_error("ExtRational must be nonnegative");
}

ExtRational::ExtRational(ExtNat n) {
  if (n.is_inf()) {
    inf_ = true;
  } else {
    q_ = Rational(mpz_class(std::to_string(n.value())));
  }
}

const Rational& ExtRational::value() const {
  if (inf_) throw std::domain_error("ExtRational::value on INF");
  return q_;
}

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
  if (a.inf_ || b.inf_) return ExtRational::inf();
  ExtRational r;
  r.q_ = a.q_ + b.q_;
  return r;
}

ExtRational& ExtRational::operator+=(const ExtRational& b) {
  if (inf_) return *this;
  if (b.inf_) {
    inf_ = true;
    q_ = 0;
    return *this;
  }
  q_ += b.q_;
  return *this;
}

ExtRational operator*(const ExtRational& a, const ExtRational& b) {
  if (a.is_zero() || b.is_zero()) return ExtRational();
  if (a.inf_ || b.inf_) return ExtRational::inf();
  ExtRational r;
  r.q_ = a.q_ * b.q_;
  return r;
}

ExtRational difference(const ExtRational& a, const ExtRational& b) {
  if (b.inf_) throw std::domain_error("difference with INF subtrahend");
  if (a.inf_) return a;
  if (a.q_ < b.q_) throw std::domain_error("negative difference");
  ExtRational r;
  r.q_ = a.q_ - b.q_;
  return r;
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  return a.inf_ == b.inf_ && (a.inf_ || a.q_ == b.q_);
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
  const int c = cmp(a.q_, b.q_);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string ExtRational::to_string() const { return inf_ ? "inf" : rational_to_string(q_); }

ExtRational ExtRational::parse(std::string_view text) {
  if (text == "inf" || text == "INF") return inf();
  Rational q = parse_rational(text);
  if (q < 0) throw Error(ErrorCode::ParseError, "negative value '" + std::string(text) + "'");
  return ExtRational(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const ExtRational& q) { return os << q.to_string(); }

}  // namespace cu
