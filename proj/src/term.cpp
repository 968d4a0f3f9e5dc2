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

#include "cu/term.hpp"

#include <cctype>
#include <string>

namespace cu {

namespace {

class Parser {
 public:
  Parser(const Realification& r, std::string_view text, std::uint64_t d) : r_(r), s_(text), d_(d) {}

  RealElement run() {
    RealElement e = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
  }

  RealElement expr() {
    RealElement e = prod();
    while (eat("+")) e = Realification::add(e, prod());
    return e;
  }

  RealElement prod() {
    skip();
    const std::size_t start = pos_;
    if (eat("inf")) {
      expect("*");
      RealElement e = prod();
      for (auto& v : e.values) v = ExtRational::inf() * v;
      e.term = "inf*" + (e.term.find('+') == std::string::npos ? e.term : "(" + e.term + ")");
      return e;
    }
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
    if (pos_ == start) return atom();
    const Rational q = parse_rational(s_.substr(start, pos_ - start));
    if (!eat("*")) {
      if (q == 0) return r_.zero();
      fail("bare number");
    }
    RealElement e = prod();
    if (q == 0) return r_.zero();
    return Realification::scale(q, e);
  }

  std::vector<RealElement> list(std::size_t exact) {
    std::vector<RealElement> items{expr()};
    while (eat(",")) items.push_back(expr());
    expect("]");
    if (exact && items.size() != exact) fail("expected " + std::to_string(exact) + " arguments");
    return items;
  }

  RealElement atom() {
    if (eat("(")) {
      RealElement e = expr();
      expect(")");
      return e;
    }
    if (eat("hat(")) {
      const std::size_t start = pos_;
      int depth = 1;
      while (pos_ < s_.size() && depth) {
        if (s_[pos_] == '(') ++depth;
        if (s_[pos_] == ')') --depth;
        ++pos_;
      }
      if (depth) fail("unclosed hat(");
      return r_.embed(r_.model().parse_element(s_.substr(start, pos_ - 1 - start)));
    }
    if (eat("sup[")) return Realification::sup_increasing(list(0));
    if (eat("diff[")) {
      auto a = list(2);
      return r_.complement(a[1], a[0]);
    }
    if (eat("meet[")) {
      auto a = list(2);
      GridOptions o;
      o.denominator = d_;
      return r_.interpolation_meet(a[0], a[1], o);
    }
    fail("expected a term");
  }

  const Realification& r_;
  std::string_view s_;
  std::uint64_t d_;
  std::size_t pos_ = 0;
};

}  // namespace

RealElement parse_term(const Realification& r, std::string_view text, std::uint64_t denominator) {
  return Parser(r, text, denominator).run();
}

}  // namespace cu
