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

#include "cu/axioms.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "cu/parallel.hpp"

namespace cu {

std::string_view to_string(AxiomStatus s) {
  switch (s) {
    case AxiomStatus::Pass: return "PASS";
    case AxiomStatus::Fail: return "FAIL";
    case AxiomStatus::Vacuous: return "VACUOUS";
  }
  return "?";
}

std::string_view to_string(CheckMethod m) {
  switch (m) {
    case CheckMethod::Exhaustive: return "EXHAUSTIVE";
    case CheckMethod::Analytic: return "ANALYTIC";
    case CheckMethod::Sampled: return "SAMPLED";
  }
  return "?";
}

namespace {

std::uint64_t max_finite(std::initializer_list<const Element*> xs) {
  std::uint64_t mx = 0;
  for (const auto* e : xs)
    for (const auto& c : e->coords)
      if (!c.is_inf()) mx = std::max(mx, c.value());
  return mx;
}

Element coord_min(const CuModel& m, const Element& a, const Element& b) {
  std::vector<ExtNat> c(a.coords.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = min(a.coords[i], b.coords[i]);
  return m.element(std::move(c));
}

// Coordinatewise candidate; nullopt if it is not a member (chain monotonicity).
std::optional<Element> candidate(const CuModel& m, std::vector<ExtNat> c) {
  Element e{m.kind(), 0, std::move(c)};
  if (!m.contains(e)) return std::nullopt;
  return e;
}

bool o5_ok(const CuModel& m, const Element& sp, const Element& s, const Element& t, const Element& r) {
  return m.leq(m.add(sp, r), t) && m.leq(t, m.add(s, r));
}

bool o6_ok(const CuModel& m, const Element& sp, const Element& s, const Element& r, const Element& t,
           const Element& rp, const Element& tp) {
  return m.leq(sp, m.add(rp, tp)) && m.leq(rp, r) && m.leq(rp, s) && m.leq(tp, t) && m.leq(tp, s);
}

}  // namespace

std::optional<Element> find_o5_witness(const CuModel& m, const Element& sp, const Element& s, const Element& t) {
  if (m.is_finite()) {
    for (const auto& r : m.elements())
      if (o5_ok(m, sp, s, t, r)) return r;
    return std::nullopt;
  }
  // constructive: t - s where t is finite, INF elsewhere; then t - s'
  for (const Element* base : {&s, &sp}) {
    std::vector<ExtNat> c(t.coords.size());
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = t.coords[i].is_inf() ? ExtNat::inf() : ExtNat(t.coords[i].value() - base->coords[i].value());
    if (auto r = candidate(m, std::move(c)); r && o5_ok(m, sp, s, t, *r)) return r;
  }
  // Any witness can be taken <= t with coordinates above max finite(t) set to
  // INF, so this grid is complete.
  for (const auto& r : m.grid(max_finite({&t})))
    if (o5_ok(m, sp, s, t, r)) return r;
  return std::nullopt;
}

std::optional<std::pair<Element, Element>> find_o6_witness(const CuModel& m, const Element& sp, const Element& s,
                                                          const Element& r, const Element& t) {
  if (m.is_finite()) {
    std::vector<Element> lr, lt;
    for (const auto& x : m.elements()) {
      if (m.leq(x, r) && m.leq(x, s)) lr.push_back(x);
      if (m.leq(x, t) && m.leq(x, s)) lt.push_back(x);
    }
    for (const auto& a : lr)
      for (const auto& b : lt)
        if (m.leq(sp, m.add(a, b))) return std::make_pair(a, b);
    return std::nullopt;
  }
  const Element rp = coord_min(m, r, sp);
  std::vector<ExtNat> diff(sp.coords.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = monus(sp.coords[i], rp.coords[i]);
  if (auto tp = candidate(m, diff); tp && o6_ok(m, sp, s, r, t, rp, *tp)) return std::make_pair(rp, *tp);
  if (const Element tp = coord_min(m, t, sp); o6_ok(m, sp, s, r, t, rp, tp)) return std::make_pair(rp, tp);
  // min(r', s'), min(t', s') is again a witness, so searching below s' is complete.
  const Element cap_r = coord_min(m, coord_min(m, r, s), sp);
  const Element cap_t = coord_min(m, coord_min(m, t, s), sp);
  const auto lr = m.below(cap_r);
  const auto lt = m.below(cap_t);
  for (const auto& a : lr)
    for (const auto& b : lt)
      if (o6_ok(m, sp, s, r, t, a, b)) return std::make_pair(a, b);
  return std::nullopt;
}

// ------------------------------------------------------------------ O1-O4

std::vector<AxiomReport> check_O1_to_O4(const CuModel& m, const AxiomOptions& opts) {
  std::vector<AxiomReport> out;
  if (!m.is_finite()) {
    const char* notes[] = {
        "coordinatewise suprema exist in N-bar and monotone vectors are closed under them",
        "every element is the supremum of its truncations min(s,n), each compactly contained in it",
        "a'<<a, b'<<b means finite and dominated, preserved by coordinatewise sums",
        "coordinatewise addition commutes with coordinatewise suprema of increasing sequences",
    };
    for (int i = 0; i < 4; ++i) {
      AxiomReport r;
      r.axiom = "O" + std::to_string(i + 1);
      r.method = CheckMethod::Analytic;
      r.note = notes[i];
      r.seed = opts.seed;
      out.push_back(r);
    }
    return out;
  }
  m.require_exhaustive_ok(opts.force);
  const auto els = m.elements();
  const std::size_t n = els.size();

  AxiomReport o1;
  o1.axiom = "O1";
  o1.note = "increasing sequences in a finite poset stabilize; every chain has a maximum";
  // a chain a <= b has maximum b; check leq is total on each comparable pair
  for (const auto& a : els)
    for (const auto& b : els)
      if (m.leq(a, b)) ++o1.cases;
  out.push_back(o1);

  AxiomReport o2;
  o2.axiom = "O2";
  o2.note = "s << s for every s, so the constant sequence works";
  for (const auto& a : els) {
    ++o2.cases;
    if (!m.way_below(a, a)) {
      o2.status = AxiomStatus::Fail;
      o2.counterexample = {a};
      break;
    }
  }
  out.push_back(o2);

  AxiomReport o3;
  o3.axiom = "O3";
  o3.note = "a'<<a and b'<<b imply a'+b'<<a+b";
  AxiomReport o4;
  o4.axiom = "O4";
  o4.note = "addition is monotone in both variables; stabilization gives sup(a_n+b_n) = sup a_n + sup b_n";
  for (std::size_t a = 0; a < n && o3.status == AxiomStatus::Pass; ++a)
    for (std::size_t ap = 0; ap < n; ++ap) {
      if (!m.way_below(els[ap], els[a])) continue;
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t bp = 0; bp < n; ++bp) {
          if (!m.way_below(els[bp], els[b])) continue;
          ++o3.cases;
          if (!m.way_below(m.add(els[ap], els[bp]), m.add(els[a], els[b])) && o3.status == AxiomStatus::Pass) {
            o3.status = AxiomStatus::Fail;
            o3.counterexample = {els[ap], els[a], els[bp], els[b]};
          }
        }
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t ap = 0; ap < n; ++ap) {
      if (!m.leq(els[a], els[ap])) continue;
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t bp = 0; bp < n; ++bp) {
          if (!m.leq(els[b], els[bp])) continue;
          ++o4.cases;
          if (!m.leq(m.add(els[a], els[b]), m.add(els[ap], els[bp])) && o4.status == AxiomStatus::Pass) {
            o4.status = AxiomStatus::Fail;
            o4.counterexample = {els[a], els[ap], els[b], els[bp]};
          }
        }
    }
  out.push_back(o3);
  out.push_back(o4);
  return out;
}

// ---------------------------------------------------------------- samplers

namespace {

struct Sampler {
  std::mt19937_64 rng;
  std::uint64_t bound;

  ExtNat value(bool allow_inf = true) {
    const std::uint64_t top = bound + (allow_inf ? 1 : 0);
    const std::uint64_t v = std::uniform_int_distribution<std::uint64_t>(0, top)(rng);
    return v > bound ? ExtNat::inf() : ExtNat(v);
  }
  // uniform in [0, cap]; INF allowed iff cap is INF
  ExtNat below(ExtNat cap) {
    if (cap.is_inf()) return value(true);
    return ExtNat(std::uniform_int_distribution<std::uint64_t>(0, cap.value())(rng));
  }
  ExtNat finite_below(ExtNat cap) {
    const std::uint64_t c = cap.is_inf() ? bound : std::min(bound, cap.value());
    return ExtNat(std::uniform_int_distribution<std::uint64_t>(0, c)(rng));
  }
};

// Sorting preserves coordinatewise order, which keeps chain samples valid.
Element make(const CuModel& m, std::vector<ExtNat> c) {
  if (m.kind() == ModelKind::MonotoneChain) std::sort(c.begin(), c.end());
  return m.element(std::move(c));
}

}  // namespace

AxiomReport check_O5(const CuModel& m, const AxiomOptions& opts) {
  AxiomReport rep;
  rep.axiom = "O5";
  rep.seed = opts.seed;
  if (m.is_finite()) {
    m.require_exhaustive_ok(opts.force);
    rep.method = CheckMethod::Exhaustive;
    const auto els = m.elements();
    const std::size_t n = els.size();
    // outer quantifier in parallel, merged in index order
    std::vector<std::optional<std::vector<Element>>> fail(n);
    std::vector<std::uint64_t> cases(n, 0);
    parallel_for(n, [&](std::size_t i) {
      const auto& sp = els[i];
      for (const auto& s : els) {
        if (!m.way_below(sp, s)) continue;
        for (const auto& t : els) {
          if (!m.leq(s, t)) continue;
          ++cases[i];
          if (!find_o5_witness(m, sp, s, t)) {
            fail[i] = std::vector<Element>{sp, s, t};
            return;
          }
        }
      }
    });
    for (std::size_t i = 0; i < n; ++i) {
      rep.cases += cases[i];
      if (fail[i] && rep.status == AxiomStatus::Pass) {
        rep.status = AxiomStatus::Fail;
        rep.counterexample = *fail[i];
      }
    }
    if (rep.cases == 0) rep.status = AxiomStatus::Vacuous;
    return rep;
  }
  rep.method = CheckMethod::Sampled;
  rep.trials = opts.trials;
  rep.note = "constructive r = t - s (INF where t is INF), falling back to t - s' and a complete grid search";
  Sampler smp{std::mt19937_64(opts.seed ^ 0x05), opts.bound};
  const std::size_t k = m.dim();
  for (std::uint64_t trial = 0; trial < opts.trials; ++trial) {
    std::vector<ExtNat> cs(k), cspr(k), ct(k);
    for (std::size_t i = 0; i < k; ++i) {
      ct[i] = smp.value();
      cs[i] = smp.below(ct[i]);
      cspr[i] = smp.finite_below(cs[i]);
    }
    const Element t = make(m, ct), s = make(m, cs), sp = make(m, cspr);
    ++rep.cases;
    if (!find_o5_witness(m, sp, s, t)) {
      rep.status = AxiomStatus::Fail;
      rep.counterexample = {sp, s, t};
      return rep;
    }
  }
  return rep;
}

AxiomReport check_O6(const CuModel& m, const AxiomOptions& opts) {
  AxiomReport rep;
  rep.axiom = "O6";
  rep.seed = opts.seed;
  if (m.is_finite()) {
    m.require_exhaustive_ok(opts.force);
    rep.method = CheckMethod::Exhaustive;
    const auto els = m.elements();
    const std::size_t n = els.size();
    std::vector<std::optional<std::vector<Element>>> fail(n);
    std::vector<std::uint64_t> cases(n, 0);
    parallel_for(n, [&](std::size_t i) {
      const auto& s = els[i];
      for (const auto& r : els)
        for (const auto& t : els) {
          if (!m.leq(s, m.add(r, t))) continue;
          for (const auto& sp : els) {
            if (!m.way_below(sp, s)) continue;
            ++cases[i];
            if (!find_o6_witness(m, sp, s, r, t)) {
              fail[i] = std::vector<Element>{sp, s, r, t};
              return;
            }
          }
        }
    });
    for (std::size_t i = 0; i < n; ++i) {
      rep.cases += cases[i];
      if (fail[i] && rep.status == AxiomStatus::Pass) {
        rep.status = AxiomStatus::Fail;
        rep.counterexample = *fail[i];
      }
    }
    if (rep.cases == 0) rep.status = AxiomStatus::Vacuous;
    return rep;
  }
  rep.method = CheckMethod::Sampled;
  rep.trials = opts.trials;
  rep.note = "constructive r' = min(r,s'), t' = s' - r' (or min(t,s')), falling back to a complete search below s'";
  Sampler smp{std::mt19937_64(opts.seed ^ 0x06), opts.bound};
  const std::size_t k = m.dim();
  for (std::uint64_t trial = 0; trial < opts.trials; ++trial) {
    std::vector<ExtNat> cr(k), ct(k);
    for (std::size_t i = 0; i < k; ++i) {
      cr[i] = smp.value();
      ct[i] = smp.value();
    }
    const Element r = make(m, cr), t = make(m, ct);
    const Element rt = m.add(r, t);
    std::vector<ExtNat> cs(k), csp(k);
    for (std::size_t i = 0; i < k; ++i) cs[i] = smp.below(rt.coords[i]);
    const Element s = make(m, cs);
    for (std::size_t i = 0; i < k; ++i) csp[i] = smp.finite_below(s.coords[i]);
    const Element sp = make(m, csp);
    ++rep.cases;
    if (!find_o6_witness(m, sp, s, r, t)) {
      rep.status = AxiomStatus::Fail;
      rep.counterexample = {sp, s, r, t};
      return rep;
    }
  }
  return rep;
}

std::vector<AxiomReport> check_axioms(const CuModel& m, const AxiomOptions& opts) {
  auto out = check_O1_to_O4(m, opts);
  out.push_back(check_O5(m, opts));
  out.push_back(check_O6(m, opts));
  return out;
}

bool replay_counterexample(const CuModel& m, const AxiomReport& report) {
  const auto& c = report.counterexample;
  if (report.status != AxiomStatus::Fail) return false;
  if (report.axiom == "O5" && c.size() == 3)
    return m.way_below(c[0], c[1]) && m.leq(c[1], c[2]) && !find_o5_witness(m, c[0], c[1], c[2]);
  if (report.axiom == "O6" && c.size() == 4)
    return m.way_below(c[0], c[1]) && m.leq(c[1], m.add(c[2], c[3])) && !find_o6_witness(m, c[0], c[1], c[2], c[3]);
  if (report.axiom == "O2" && c.size() == 1) return !m.way_below(c[0], c[0]);
  if (report.axiom == "O3" && c.size() == 4)
    return m.way_below(c[0], c[1]) && m.way_below(c[2], c[3]) && !m.way_below(m.add(c[0], c[2]), m.add(c[1], c[3]));
  if (report.axiom == "O4" && c.size() == 4)
    return m.leq(c[0], c[1]) && m.leq(c[2], c[3]) && !m.leq(m.add(c[0], c[2]), m.add(c[1], c[3]));
  return false;
}

nlohmann::json axiom_report_to_json(const CuModel& m, const AxiomReport& r) {
  nlohmann::json j = {{"axiom", r.axiom},
                      {"status", std::string(to_string(r.status))},
                      {"method", std::string(to_string(r.method))},
                      {"cases", r.cases},
                      {"note", r.note}};
  if (r.method == CheckMethod::Sampled) {
    j["seed"] = r.seed;
    j["trials"] = r.trials;
  }
  if (!r.counterexample.empty()) {
    nlohmann::json ce = nlohmann::json::array();
    for (const auto& e : r.counterexample) ce.push_back(m.element_to_json(e));
    j["counterexample"] = ce;
  }
  return j;
}

}  // namespace cu
