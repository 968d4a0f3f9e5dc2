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

#include "cu/lattice.hpp"

namespace cu {

namespace {

std::vector<Element> pieces(const CuModel& m, const Element& f) { return m.below(f); }

}  // namespace

ExtRational kantorovich_sup(const CuModel& m, const Functional& a, const Functional& b, const Element& f) {
  const auto below = pieces(m, f);
  ExtRational best;
  for (const auto& f1 : below)
    for (const auto& f2 : below)
      if (m.leq(m.add(f1, f2), f)) best = max(best, evaluate(m, a, f1) + evaluate(m, b, f2));
  return best;
}

ExtRational kantorovich_inf(const CuModel& m, const Functional& a, const Functional& b, const Element& f) {
  const auto range = m.is_finite() ? m.elements() : pieces(m, f);
  std::optional<ExtRational> best;
  for (const auto& f1 : range)
    for (const auto& f2 : range)
      if (m.leq(f, m.add(f1, f2))) {
        const auto v = evaluate(m, a, f1) + evaluate(m, b, f2);
        if (!best || v < *best) best = v;
      }
  return best.value_or(ExtRational::inf());
}

namespace {

using Formula = ExtRational (*)(const CuModel&, const Functional&, const Functional&, const Element&);

Functional lattice_op(const CuModel& m, const Functional& a, const Functional& b, const LatticeOptions& opts,
                      Formula formula, const char* name) {
  if (m.is_finite()) {
    m.require_exhaustive_ok(opts.force);
    RawMap raw;
    for (const auto& f : m.elements()) raw.values.push_back(formula(m, a, b, f));
    try {
      return regularize(m, raw);
    } catch (const Error& e) {
      throw Error(ErrorCode::NotAdditive, std::string(name) + " is not a functional: " + e.what(), e.witness());
    }
  }
  std::vector<ExtRational> mu;
  for (const auto& g : m.generators()) mu.push_back(formula(m, a, b, g));
  Functional out;
  try {
    out = from_generator_values(m, mu);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotAdditive, std::string(name) + " generator values are not monotone", e.witness());
  }
  for (const auto& f : m.grid(opts.validation_bound, false)) {
    const auto brute = formula(m, a, b, f);
    if (brute != evaluate(m, out, f))
      throw Error(ErrorCode::NotAdditive,
                  std::string(name) + " formula disagrees with its generator form at " + f.to_string(), f.to_string());
  }
  return out;
}

}  // namespace

Functional join(const CuModel& m, const Functional& a, const Functional& b, const LatticeOptions& opts) {
  return lattice_op(m, a, b, opts, &kantorovich_sup, "join");
}

Functional meet(const CuModel& m, const Functional& a, const Functional& b, const LatticeOptions& opts) {
  return lattice_op(m, a, b, opts, &kantorovich_inf, "meet");
}

Functional directed_sup(const CuModel& m, const std::vector<Functional>& family) {
  if (family.empty()) return zero_functional(m);
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      bool bounded = false;
      for (const auto& c : family)
        if (functional_leq(m, family[i], c) && functional_leq(m, family[j], c)) {
          bounded = true;
          break;
        }
      if (!bounded)
        throw Error(ErrorCode::NotDirected, "no member bounds members " + std::to_string(i) + " and " + std::to_string(j),
                    "(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  Functional out;
  if (m.is_finite()) {
    std::vector<ExtRational> v = family.front().values;
    for (const auto& f : family)
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = max(v[i], f.values[i]);
    out = from_values(m, std::move(v));
  } else {
    auto mu = generator_values(m, family.front());
    for (const auto& f : family) {
      const auto g = generator_values(m, f);
      for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = max(mu[i], g[i]);
    }
    out = from_generator_values(m, mu);
  }
  if (auto bad = functional_violation(m, out)) throw Error(ErrorCode::NotAdditive, "directed supremum: " + *bad);
  return out;
}

LatticeOps kantorovich_ops(const CuModel& m, const LatticeOptions& opts) {
  return {[m, opts](const Functional& a, const Functional& b) { return join(m, a, b, opts); },
          [m, opts](const Functional& a, const Functional& b) { return meet(m, a, b, opts); }};
}

bool LatticeReport::all_pass() const {
  for (const auto& l : laws)
    if (!l.pass) return false;
  return true;
}

LatticeReport check_lattice_identities(const CuModel& m, const Functional& l1, const Functional& l2,
                                       const Functional& l3, const LatticeOps& ops) {
  const auto pts = check_points(m);
  LatticeReport rep;
  auto add = [&](const Functional& a, const Functional& b) { return functional_add(m, a, b); };
  auto equal = [&](const std::string& law, const Functional& lhs, const Functional& rhs) {
    LawResult r{law, true, {}};
    for (const auto& p : pts)
      if (evaluate(m, lhs, p) != evaluate(m, rhs, p)) {
        r.pass = false;
        r.witness = p.to_string();
        break;
      }
    rep.laws.push_back(r);
  };
  auto below = [&](const std::string& law, const Functional& lhs, const Functional& rhs) {
    LawResult r{law, true, {}};
    for (const auto& p : pts)
      if (evaluate(m, lhs, p) > evaluate(m, rhs, p)) {
        r.pass = false;
        r.witness = p.to_string();
        break;
      }
    rep.laws.push_back(r);
  };
  const auto& J = ops.join;
  const auto& M = ops.meet;
  const Functional j12 = J(l1, l2), m12 = M(l1, l2);
  equal("join_translation", add(j12, l3), J(add(l1, l3), add(l2, l3)));
  equal("meet_translation", add(m12, l3), M(add(l1, l3), add(l2, l3)));
  equal("join_commutative", j12, J(l2, l1));
  equal("meet_commutative", m12, M(l2, l1));
  equal("join_associative", J(j12, l3), J(l1, J(l2, l3)));
  equal("meet_associative", M(m12, l3), M(l1, M(l2, l3)));
  equal("join_idempotent", J(l1, l1), l1);
  equal("meet_idempotent", M(l1, l1), l1);
  equal("absorption_join", J(l1, m12), l1);
  equal("absorption_meet", M(l1, j12), l1);
  equal("meet_distributes", M(l1, J(l2, l3)), J(m12, M(l1, l3)));
  equal("join_distributes", J(l1, M(l2, l3)), M(j12, J(l1, l3)));
  below("join_upper_1", l1, j12);
  below("join_upper_2", l2, j12);
  below("meet_lower_1", m12, l1);
  below("meet_lower_2", m12, l2);
  return rep;
}

nlohmann::json lattice_report_to_json(const LatticeReport& r) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& l : r.laws) {
    nlohmann::json j = {{"law", l.law}, {"status", l.pass ? "PASS" : "FAIL"}};
    if (!l.pass) j["witness"] = l.witness;
    arr.push_back(j);
  }
  return arr;
}

}  // namespace cu
