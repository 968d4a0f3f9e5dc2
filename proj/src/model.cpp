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

#include "cu/model.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace cu {

namespace {

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::string pair(std::size_t a, std::size_t b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

[[noreturn]] void violation(const std::string& what) { throw Error(ErrorCode::InvariantViolation, what, what); }

[[noreturn]] void mismatch(const Element& a) {
  throw Error(ErrorCode::ElementModelMismatch, "element " + a.to_string() + " does not belong to the model",
              a.to_string());
}

bool nondecreasing(const std::vector<ExtNat>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] < v[i - 1]) return false;
  return true;
}

}  // namespace

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::FiniteTable: return "finite_table";
    case ModelKind::NbarPower: return "nbar_power";
    case ModelKind::MonotoneChain: return "monotone_nbar_chain";
  }
  return "unknown";
}

bool Element::has_infinite_coordinate() const {
  for (const auto& c : coords)
    if (c.is_inf()) return true;
  return false;
}

std::string Element::to_string() const {
  if (kind == ModelKind::FiniteTable) return std::to_string(index);
  std::string s = "[";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ",";
    s += coords[i].to_string();
  }
  return s + "]";
}

// ----------------------------------------------------------- construction

CuModel CuModel::finite_table(std::vector<std::vector<std::uint32_t>> add, std::vector<std::vector<bool>> leq) {
  const std::size_t n = add.size();
  if (n == 0) violation("finite table must have at least one element");
  if (leq.size() != n) violation("leq must be n x n");
  for (std::size_t i = 0; i < n; ++i) {
    if (add[i].size() != n) violation("add row " + std::to_string(i) + " has wrong length");
    if (leq[i].size() != n) violation("leq row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j)
      if (add[i][j] >= n) violation("add entry out of range at " + pair(i, j));
  }
  for (std::size_t x = 0; x < n; ++x)
    if (add[0][x] != x) violation("0 is not an additive identity at " + std::to_string(x));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (add[i][j] != add[j][i]) violation("add not commutative at " + pair(i, j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (add[add[i][j]][k] != add[i][add[j][k]]) violation("add not associative at " + triple(i, j, k));
  for (std::size_t i = 0; i < n; ++i)
    if (!leq[i][i]) violation("leq not reflexive at " + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && leq[i][j] && leq[j][i]) violation("leq not antisymmetric at " + pair(i, j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq[i][j])
        for (std::size_t k = 0; k < n; ++k)
          if (leq[j][k] && !leq[i][k]) violation("leq not transitive at " + triple(i, j, k));
  for (std::size_t x = 0; x < n; ++x)
    if (!leq[0][x]) violation("0 is not the minimum at " + std::to_string(x));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (leq[a][b])
        for (std::size_t c = 0; c < n; ++c)
          if (!leq[add[a][c]][add[b][c]]) violation("add not monotone at " + triple(a, b, c));

  CuModel m;
  m.kind_ = ModelKind::FiniteTable;
  m.n_ = n;
  m.add_ = std::move(add);
  m.leq_ = std::move(leq);
  m.multiples_.assign(n + 1, std::vector<std::uint32_t>(n, 0));
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t a = 0; a < n; ++a) m.multiples_[k][a] = m.add_[m.multiples_[k - 1][a]][a];
  return m;
}

CuModel CuModel::nbar_power(std::size_t k) {
  if (k == 0 || k > 16) violation("nbar_power needs 1 <= k <= 16");
  CuModel m;
  m.kind_ = ModelKind::NbarPower;
  m.k_ = k;
  return m;
}

CuModel CuModel::monotone_chain(std::size_t k) {
  if (k == 0 || k > 16) violation("monotone_nbar_chain needs 1 <= k <= 16");
  CuModel m;
  m.kind_ = ModelKind::MonotoneChain;
  m.k_ = k;
  return m;
}

// --------------------------------------------------------------- elements

Element CuModel::zero() const {
  if (is_finite()) return Element{kind_, 0, {}};
  return Element{kind_, 0, std::vector<ExtNat>(k_, ExtNat(0))};
}

Element CuModel::element(std::uint32_t index) const {
  Element e{ModelKind::FiniteTable, index, {}};
  require_member(e);
  return e;
}

Element CuModel::element(std::vector<ExtNat> coords) const {
  Element e{kind_, 0, std::move(coords)};
  require_member(e);
  return e;
}

bool CuModel::contains(const Element& a) const {
  if (a.kind != kind_) return false;
  if (is_finite()) return a.index < n_ && a.coords.empty();
  if (a.index != 0 || a.coords.size() != k_) return false;
  return kind_ != ModelKind::MonotoneChain || nondecreasing(a.coords);
}

void CuModel::require_member(const Element& a) const {
  if (!contains(a)) mismatch(a);
}

Element CuModel::add(const Element& a, const Element& b) const {
  require_member(a);
  require_member(b);
  if (is_finite()) return Element{kind_, add_[a.index][b.index], {}};
  Element r{kind_, 0, std::vector<ExtNat>(k_)};
  for (std::size_t i = 0; i < k_; ++i) r.coords[i] = a.coords[i] + b.coords[i];
  return r;
}

bool CuModel::leq(const Element& a, const Element& b) const {
  require_member(a);
  require_member(b);
  if (is_finite()) return leq_[a.index][b.index];
  for (std::size_t i = 0; i < k_; ++i)
    if (a.coords[i] > b.coords[i]) return false;
  return true;
}

bool CuModel::way_below(const Element& a, const Element& b) const {
  if (!leq(a, b)) return false;
  return is_finite() || !a.has_infinite_coordinate();
}

Element CuModel::nat_multiple(std::uint64_t n, const Element& a) const {
  require_member(a);
  if (is_finite()) return Element{kind_, multiples_[std::min<std::uint64_t>(n, n_)][a.index], {}};
  Element r = a;
  for (auto& c : r.coords) c = n * c;
  return r;
}

Element CuModel::infinity_multiple(const Element& a) const {
  require_member(a);
  if (is_finite()) return Element{kind_, multiples_[n_][a.index], {}};
  Element r = a;
  for (auto& c : r.coords)
    if (!c.is_zero()) c = ExtNat::inf();
  return r;
}

Element CuModel::truncate(const Element& a, std::uint64_t c) const {
  require_member(a);
  if (is_finite()) return a;
  Element r = a;
  for (auto& x : r.coords) x = min(x, ExtNat(c));
  return r;
}

std::vector<Element> CuModel::elements() const {
  if (!is_finite()) throw Error(ErrorCode::ModelTooLarge, "effective models have infinitely many elements");
  std::vector<Element> out;
  out.reserve(n_);
  for (std::uint32_t i = 0; i < n_; ++i) out.push_back(Element{kind_, i, {}});
  return out;
}

std::vector<Element> CuModel::generators() const {
  std::vector<Element> out;
  if (is_finite()) {
    for (std::uint32_t i = 1; i < n_; ++i) out.push_back(Element{kind_, i, {}});
    return out;
  }
  for (std::size_t j = 0; j < k_; ++j) {
    Element g = zero();
    if (kind_ == ModelKind::NbarPower) {
      g.coords[j] = ExtNat(1);
    } else {
      for (std::size_t i = j; i < k_; ++i) g.coords[i] = ExtNat(1);
    }
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

void product_rec(std::size_t pos, const std::vector<std::vector<ExtNat>>& choices, std::vector<ExtNat>& cur,
                 bool monotone, ModelKind kind, std::vector<Element>& out) {
  if (pos == choices.size()) {
    out.push_back(Element{kind, 0, cur});
    return;
  }
  for (const auto& v : choices[pos]) {
    if (monotone && pos > 0 && v < cur[pos - 1]) continue;
    cur[pos] = v;
    product_rec(pos + 1, choices, cur, monotone, kind, out);
  }
}

}  // namespace

std::vector<Element> CuModel::grid(std::uint64_t bound, bool with_inf) const {
  if (is_finite()) return elements();
  std::vector<ExtNat> values;
  for (std::uint64_t v = 0; v <= bound; ++v) values.emplace_back(v);
  if (with_inf) values.push_back(ExtNat::inf());
  std::vector<std::vector<ExtNat>> choices(k_, values);
  std::vector<ExtNat> cur(k_);
  std::vector<Element> out;
  product_rec(0, choices, cur, kind_ == ModelKind::MonotoneChain, kind_, out);
  return out;
}

std::vector<Element> CuModel::below(const Element& a) const {
  require_member(a);
  std::vector<Element> out;
  if (is_finite()) {
    for (std::uint32_t i = 0; i < n_; ++i)
      if (leq_[i][a.index]) out.push_back(Element{kind_, i, {}});
    return out;
  }
  if (a.has_infinite_coordinate())
    throw Error(ErrorCode::ModelTooLarge, "infinitely many elements below " + a.to_string());
  std::vector<std::vector<ExtNat>> choices(k_);
  for (std::size_t i = 0; i < k_; ++i)
    for (std::uint64_t v = 0; v <= a.coords[i].value(); ++v) choices[i].emplace_back(v);
  std::vector<ExtNat> cur(k_);
  product_rec(0, choices, cur, kind_ == ModelKind::MonotoneChain, kind_, out);
  return out;
}

std::optional<Element> CuModel::top() const {
  if (!is_finite()) return Element{kind_, 0, std::vector<ExtNat>(k_, ExtNat::inf())};
  for (std::uint32_t t = 0; t < n_; ++t) {
    bool is_top = true;
    for (std::uint32_t x = 0; x < n_ && is_top; ++x) is_top = leq_[x][t];
    if (is_top) return Element{kind_, t, {}};
  }
  return std::nullopt;
}

std::vector<ExtNat> CuModel::decompose(const Element& a) const {
  require_member(a);
  if (is_finite()) throw Error(ErrorCode::ElementModelMismatch, "decompose applies to effective models");
  if (kind_ == ModelKind::NbarPower) return a.coords;
  std::vector<ExtNat> m(k_, ExtNat(0));
  ExtNat prev(0);
  for (std::size_t j = 0; j < k_; ++j) {
    if (a.coords[j].is_inf()) {
      m[j] = ExtNat::inf();
      break;
    }
    m[j] = ExtNat(a.coords[j].value() - prev.value());
    prev = a.coords[j];
  }
  return m;
}

void CuModel::require_exhaustive_ok(bool force) const {
  if (is_finite() && n_ > kExhaustiveLimit && !force)
    throw Error(ErrorCode::ModelTooLarge,
                "finite table with " + std::to_string(n_) + " elements exceeds the exhaustive limit; use --force");
}

// ------------------------------------------------------------ serialization

nlohmann::json CuModel::to_json() const {
  nlohmann::json j;
  j["kind"] = std::string(to_string(kind_));
  if (is_finite()) {
    j["n"] = n_;
    j["add"] = add_;
    j["leq"] = leq_;
  } else {
    j["k"] = k_;
  }
  return j;
}

CuModel CuModel::from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "model must be a JSON object");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "finite_table") {
      const auto n = j.at("n").get<std::size_t>();
      auto add = j.at("add").get<std::vector<std::vector<std::uint32_t>>>();
      auto leq = j.at("leq").get<std::vector<std::vector<bool>>>();
      if (add.size() != n || leq.size() != n)
        throw Error(ErrorCode::InvariantViolation, "declared n does not match table sizes");
      return finite_table(std::move(add), std::move(leq));
    }
    if (kind == "nbar_power") return nbar_power(j.at("k").get<std::size_t>());
    if (kind == "monotone_nbar_chain") return monotone_chain(j.at("k").get<std::size_t>());
    throw Error(ErrorCode::ParseError, "unknown model kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string CuModel::save() const { return to_json().dump(); }

CuModel CuModel::load(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return from_json(j);
}

CuModel CuModel::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load(ss.str());
}

nlohmann::json CuModel::element_to_json(const Element& a) const {
  require_member(a);
  if (is_finite()) return a.index;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : a.coords) {
    if (c.is_inf())
      arr.push_back("inf");
    else
      arr.push_back(c.value());
  }
  return arr;
}

namespace {

ExtNat extnat_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "INF") return ExtNat::inf();
    throw Error(ErrorCode::ParseError, "bad coordinate '" + s + "'");
  }
  if (j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0))
    return ExtNat(j.get<std::uint64_t>());
  throw Error(ErrorCode::ParseError, "bad coordinate " + j.dump());
}

}  // namespace

Element CuModel::element_from_json(const nlohmann::json& j) const {
  if (is_finite()) {
    if (!(j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0)))
      throw Error(ErrorCode::ParseError, "finite table elements are indices, got " + j.dump());
    Element e{kind_, j.get<std::uint32_t>(), {}};
    require_member(e);
    return e;
  }
  std::vector<ExtNat> coords;
  if (j.is_array()) {
    for (const auto& c : j) coords.push_back(extnat_from_json(c));
  } else if (k_ == 1) {
    coords.push_back(extnat_from_json(j));
  } else {
    throw Error(ErrorCode::ParseError, "expected a coordinate array, got " + j.dump());
  }
  Element e{kind_, 0, std::move(coords)};
  require_member(e);
  return e;
}

Element CuModel::parse_element(std::string_view text) const {
  static const std::regex bare_inf(R"(\b(inf|INF)\b)");
  std::string quoted = std::regex_replace(std::string(text), bare_inf, "\"inf\"");
  // Undo double quoting if the caller already quoted.
  quoted = std::regex_replace(quoted, std::regex(R"(""inf"")"), "\"inf\"");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(quoted);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, "bad element '" + std::string(text) + "'");
  }
  return element_from_json(j);
}

std::string CuModel::digest() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : save()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

}  // namespace cu
