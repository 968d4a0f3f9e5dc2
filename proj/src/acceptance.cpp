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

#include "cu/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <random>

#include "cu/axioms.hpp"
#include "cu/fixtures.hpp"
#include "cu/functional.hpp"
#include "cu/lattice.hpp"
#include "cu/parallel.hpp"
#include "cu/realify.hpp"

namespace cu::acceptance {

namespace {

using Clock = std::chrono::steady_clock;
using fixtures::Named;

constexpr std::size_t kMaxWitnesses = 5;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

/// Collects failure witnesses, keeping the first few.
struct Failures {
  std::uint64_t count = 0;
  nlohmann::json first = nlohmann::json::array();
  void add(const std::string& what) {
    if (count++ < kMaxWitnesses) first.push_back(what);
  }
};

std::string statuses(const std::vector<AxiomReport>& reps) {
  std::string s;
  for (const auto& r : reps) s += (s.empty() ? "" : ",") + r.axiom + ":" + std::string(to_string(r.status));
  return s;
}

// ------------------------------------------------------------ 1. axioms

CriterionResult axioms(const Options& o) {
  CriterionResult res{1, "axiom conformance", false, {}, {}};
  const auto t0 = Clock::now();
  AxiomOptions ao;
  ao.seed = o.seed;
  ao.trials = std::max<std::uint64_t>(o.trials, 1000);
  ao.force = o.force;
  Failures fails;
  nlohmann::json per_model = nlohmann::json::object();
  for (const auto& [name, m] : fixtures::builtin_models()) {
    const auto reps = check_axioms(m, ao);
    per_model[name] = statuses(reps);
    for (const auto& r : reps)
      if (r.status == AxiomStatus::Fail) {
        std::string ce;
        for (const auto& e : r.counterexample) ce += (ce.empty() ? "" : " ") + e.to_string();
        fails.add(name + " " + r.axiom + " fails at (" + ce + ")");
      }
  }
  const CuModel broken = fixtures::broken_o6();
  const auto breps = check_axioms(broken, ao);
  const bool broken_caught = breps[5].status == AxiomStatus::Fail && replay_counterexample(broken, breps[5]);
  per_model["broken_o6"] = statuses(breps);
  res.elapsed_ms = ms_since(t0);
  const bool in_budget = res.elapsed_ms < 60000;
  res.pass = fails.count == 0 && broken_caught && in_budget;
  res.detail = std::to_string(fails.count) + " failing axiom checks on built-ins; broken fixture " +
               (broken_caught ? "caught with a replayable counterexample" : "NOT caught") +
               (in_budget ? "" : "; over the 60 s budget");
  res.evidence = {{"models", per_model}, {"failures", fails.first}, {"trials", ao.trials},
                  {"broken_replayed", broken_caught}};
  return res;
}

// ------------------------------------------------------ 2. oracle match

Element random_element(const CuModel& m, std::mt19937_64& rng, std::uint64_t max_coord, bool allow_inf) {
  if (m.is_finite()) return m.element(static_cast<std::uint32_t>(rng() % m.size()));
  std::vector<ExtNat> c(m.dim());
  for (auto& x : c) {
    const auto r = rng() % (max_coord + 1 + (allow_inf ? 1 : 0));
    x = r > max_coord ? ExtNat::inf() : ExtNat(r);
  }
  if (m.kind() == ModelKind::MonotoneChain) std::sort(c.begin(), c.end());
  return m.element(std::move(c));
}

CriterionResult oracles(const Options& o) {
  CriterionResult res{2, "comparison oracle equivalence", false, {}, {}};
  const auto t0 = Clock::now();
  Failures fails;
  std::uint64_t pairs = 0;
  nlohmann::json per_model = nlohmann::json::object();
  std::mt19937_64 rng(o.seed * 7919 + 2);
  for (const auto& [name, m] : fixtures::builtin_models()) {
    const auto cone = compute_cone(m, o.force);
    std::vector<std::pair<Element, Element>> todo;
    if (m.is_finite()) {
      for (const auto& s : m.elements())
        for (const auto& t : m.elements()) todo.emplace_back(s, t);
    } else {
      for (int i = 0; i < 500; ++i) {
        Element s = random_element(m, rng, 5, false);
        Element t = random_element(m, rng, 5, false);
        todo.emplace_back(std::move(s), std::move(t));
      }
    }
    std::vector<std::string> outcome(todo.size());
    parallel_for(todo.size(), [&](std::size_t i) {
      const auto& [s, t] = todo[i];
      try {
        const bool lp = compare_hat_lp(m, s, t, cone);
        const bool mn = compare_hat_mn(m, s, t).verdict;
        if (lp != mn)
          outcome[i] = name + " (" + s.to_string() + "," + t.to_string() + "): lp=" + (lp ? "true" : "false") +
                       " mn=" + (mn ? "true" : "false");
      } catch (const Error& e) {
        outcome[i] = name + " (" + s.to_string() + "," + t.to_string() + "): " + e.what();
      }
    });
    std::uint64_t bad = 0;
    for (const auto& x : outcome)
      if (!x.empty()) {
        ++bad;
        fails.add(x);
      }
    pairs += todo.size();
    per_model[name] = {{"pairs", todo.size()}, {"disagreements", bad}};
  }
  res.elapsed_ms = ms_since(t0);
  const bool in_budget = res.elapsed_ms < 120000;
  res.pass = fails.count == 0 && in_budget;
  res.detail = std::to_string(pairs) + " pairs, " + std::to_string(fails.count) + " disagreements" +
               (in_budget ? "" : "; over the 2 min budget");
  res.evidence = {{"models", per_model}, {"failures", fails.first}};
  return res;
}

// ------------------------------------------------ 3. algebraic order

CriterionResult algebraic_order(const Options& o) {
  CriterionResult res{3, "pointwise order is algebraic", false, {}, {}};
  const auto t0 = Clock::now();
  Failures fails;
  std::uint64_t ordered = 0;
  nlohmann::json per_model = nlohmann::json::object();
  for (const auto& [name, m] : fixtures::builtin_models()) {
    const auto cone = compute_cone(m, o.force);
    const auto& reps = cone.representatives;
    std::uint64_t here = 0, bad = 0;
    for (std::size_t p = 0; p < reps.size(); ++p)
      for (std::size_t q = 0; q < reps.size(); ++q) {
        if (!functional_leq(m, reps[p], reps[q])) continue;
        ++here;
        const std::string tag = name + " rep " + std::to_string(p) + " <= rep " + std::to_string(q);
        try {
          const Functional g = complement(m, reps[p], reps[q]);
          if (!(functional_add(m, reps[p], g) == reps[q])) {
            ++bad;
            fails.add(tag + ": alpha + gamma differs from beta");
          }
        } catch (const Error& e) {
          ++bad;
          fails.add(tag + ": " + e.what());
        }
      }
    ordered += here;
    per_model[name] = {{"ordered_pairs", here}, {"failures", bad}};
  }
  res.elapsed_ms = ms_since(t0);
  res.pass = fails.count == 0;
  res.detail = std::to_string(ordered) + " ordered pairs, " + std::to_string(fails.count) + " without a complement";
  res.evidence = {{"models", per_model}, {"failures", fails.first}};
  return res;
}

// ---------------------------------------------------------- 4. lattice

Functional random_nbar_functional(const CuModel& m, std::mt19937_64& rng) {
  std::vector<ExtRational> mu(m.dim());
  for (auto& v : mu) {
    if (rng() % 4 == 0) {
      v = ExtRational::inf();
    } else {
      v = ExtRational(Rational(static_cast<long>(rng() % 7), static_cast<long>(1 + rng() % 4)));
    }
  }
  return from_generator_values(m, mu);
}

Functional oracle_nbar(const CuModel& m, const Functional& a, const Functional& b, bool take_max) {
  const auto ga = generator_values(m, a), gb = generator_values(m, b);
  std::vector<ExtRational> mu(ga.size());
  for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = take_max ? max(ga[i], gb[i]) : min(ga[i], gb[i]);
  return from_generator_values(m, mu);
}

CriterionResult lattice(const Options& o) {
  CriterionResult res{4, "lattice operations", false, {}, {}};
  const auto t0 = Clock::now();
  Failures fails;
  std::uint64_t pairs = 0, triples = 0;
  std::mt19937_64 rng(o.seed * 7919 + 4);
  for (std::size_t k = 1; k <= 3; ++k) {
    const CuModel m = CuModel::nbar_power(k);
    const auto cone = compute_cone(m, o.force);
    std::vector<Functional> pool = cone.representatives;
    const std::size_t nrep = pool.size();
    for (int i = 0; i < 200; ++i) pool.push_back(random_nbar_functional(m, rng));
    auto check_pair = [&](const Functional& a, const Functional& b) {
      ++pairs;
      try {
        if (!(join(m, a, b) == oracle_nbar(m, a, b, true)))
          fails.add("nbar" + std::to_string(k) + " join " + functional_to_string(m, a) + " , " + functional_to_string(m, b));
        if (!(meet(m, a, b) == oracle_nbar(m, a, b, false)))
          fails.add("nbar" + std::to_string(k) + " meet " + functional_to_string(m, a) + " , " + functional_to_string(m, b));
      } catch (const Error& e) {
        fails.add("nbar" + std::to_string(k) + ": " + e.what());
      }
    };
    for (std::size_t p = 0; p < nrep; ++p)
      for (std::size_t q = 0; q < nrep; ++q) check_pair(pool[p], pool[q]);
    for (std::size_t i = nrep; i < pool.size(); ++i) check_pair(pool[i], pool[nrep + (i - nrep + 1) % 200]);
    const auto ops = kantorovich_ops(m);
    for (int t = 0; t < 200; ++t) {
      ++triples;
      const auto& a = pool[rng() % pool.size()];
      const auto& b = pool[rng() % pool.size()];
      const auto& c = pool[rng() % pool.size()];
      try {
        const auto rep = check_lattice_identities(m, a, b, c, ops);
        for (const auto& law : rep.laws)
          if (!law.pass) fails.add("nbar" + std::to_string(k) + " " + law.law + ": " + law.witness);
      } catch (const Error& e) {
        fails.add("nbar" + std::to_string(k) + " triple: " + e.what());
      }
    }
  }
  res.elapsed_ms = ms_since(t0);
  res.pass = fails.count == 0;
  res.detail = std::to_string(pairs) + " pairs against max/min, " + std::to_string(triples) + " law triples, " +
               std::to_string(fails.count) + " failures";
  res.evidence = {{"pairs", pairs}, {"triples", triples}, {"failures", fails.first}};
  return res;
}

// ------------------------------------------------------- 5. refinement

std::vector<std::vector<std::size_t>> tuples(std::size_t count, std::size_t len) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(len, 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = len;
    while (i > 0 && ++cur[i - 1] == count) cur[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

CriterionResult refinement(const Options& o) {
  CriterionResult res{5, "refinement", false, {}, {}};
  const auto t0 = Clock::now();
  Failures fails;
  GridOptions grid;
  grid.denominator = o.denominator;
  nlohmann::json per_model = nlohmann::json::object();
  std::uint64_t total_found = 0, total_applicable = 0;
  for (std::size_t k : {1u, 2u}) {
    const Realification R(CuModel::nbar_power(k), o.force);
    const auto els = R.model().grid(3, false);
    std::vector<RealElement> hats;
    for (const auto& e : els) hats.push_back(R.embed(e));
    struct Instance {
      std::vector<std::size_t> f, g;
    };
    std::vector<Instance> inst;
    for (std::size_t n = 1; n <= 2; ++n)
      for (std::size_t mm = 1; mm <= 2; ++mm)
        for (const auto& f : tuples(els.size(), n))
          for (const auto& g : tuples(els.size(), mm)) inst.push_back({f, g});
    // 0 = hypothesis fails, 1 = found and valid, 2 = failure
    std::vector<int> status(inst.size());
    std::vector<std::string> why(inst.size());
    parallel_for(inst.size(), [&](std::size_t x) {
      std::vector<RealElement> f, g, fp;
      for (auto i : inst[x].f) f.push_back(hats[i]);
      for (auto j : inst[x].g) g.push_back(hats[j]);
      RealElement sf = R.zero(), sg = R.zero();
      for (const auto& e : f) {
        fp.push_back(Realification::scale(Rational(3, 4), e));
        sf = Realification::add(sf, e);
      }
      for (const auto& e : g) sg = Realification::add(sg, e);
      if (!Realification::leq(sf, sg)) return;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (!R.way_below(fp[i], f[i])) return;
      std::string tag = "nbar" + std::to_string(k) + " f=(";
      for (auto i : inst[x].f) tag += els[i].to_string() + " ";
      tag += ") g=(";
      for (auto j : inst[x].g) tag += els[j].to_string() + " ";
      tag += ")";
      try {
        const auto r = R.refinement_witness(fp, f, g, grid);
        if (r.status == RefinementStatus::Found && R.refinement_valid(fp, f, g, r.h)) {
          status[x] = 1;
        } else {
          status[x] = 2;
          why[x] = tag + (r.status == RefinementStatus::Found ? ": invalid witness" : ": grid exhausted");
        }
      } catch (const Error& e) {
        status[x] = 2;
        why[x] = tag + ": " + e.what();
      }
    });
    std::uint64_t applicable = 0, found = 0;
    for (std::size_t x = 0; x < inst.size(); ++x) {
      if (status[x]) ++applicable;
      if (status[x] == 1) ++found;
      if (status[x] == 2) fails.add(why[x]);
    }
    total_found += found;
    total_applicable += applicable;
    per_model["nbar" + std::to_string(k)] = {{"instances", inst.size()}, {"applicable", applicable}, {"found", found}};
  }

  // canonical instance on N-bar
  const Realification R(CuModel::nbar_power(1), o.force);
  const RealElement one = R.embed(R.model().element({ExtNat(1)}));
  const RealElement fp = Realification::scale(Rational(3, 4), one);
  const RealElement half = Realification::scale(Rational(1, 2), one);
  GridOptions d4;
  d4.denominator = 4;
  const auto canon = R.refinement_witness({fp, fp}, {one, one}, {one, one}, d4);
  bool canonical_ok = canon.status == RefinementStatus::Found && R.refinement_valid({fp, fp}, {one, one}, {one, one}, canon.h);
  nlohmann::json canon_h = nlohmann::json::array();
  if (canonical_ok)
    for (const auto& row : canon.h)
      for (const auto& h : row) {
        canon_h.push_back(h.term);
        canonical_ok = canonical_ok && h == half;
      }
  GridOptions d1;
  d1.denominator = 1;
  const auto control = R.refinement_witness({fp, fp}, {one, one}, {one, one}, d1);
  const bool control_ok = control.status == RefinementStatus::GridExhausted;
  nlohmann::json control_h = nlohmann::json::array();
  for (const auto& row : control.h)
    for (const auto& h : row) control_h.push_back(h.term);

  res.elapsed_ms = ms_since(t0);
  res.pass = fails.count == 0 && canonical_ok && control_ok;
  res.detail = std::to_string(total_found) + "/" + std::to_string(total_applicable) +
               " applicable instances solved; canonical " + (canonical_ok ? "h=1/2*hat(1)" : "WRONG") +
               "; integer control " + (control_ok ? "exhausted" : "found a witness");
  res.evidence = {{"models", per_model},     {"failures", fails.first}, {"canonical_h", canon_h},
                  {"canonical_ok", canonical_ok}, {"control_exhausted", control_ok}, {"control_h", control_h}};
  return res;
}

// ------------------------------------------------------ 6. realification

struct Sample {
  RealElement f;
  std::vector<std::pair<Rational, Element>> parts;
};

Sample random_sample(const Realification& R, std::mt19937_64& rng) {
  const CuModel& m = R.model();
  Sample s;
  const int terms = 1 + static_cast<int>(rng() % 2);
  static const Rational qs[] = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};
  for (int t = 0; t < terms; ++t) {
    Element x = random_element(m, rng, 3, rng() % 4 == 0);
    const Rational q = qs[rng() % 4];
    const RealElement e = Realification::scale(q, R.embed(x));
    s.f = t == 0 ? e : Realification::add(s.f, e);
    s.parts.emplace_back(q, std::move(x));
  }
  return s;
}

/// A maximal lower bound of a and b among sums of (i/4) hat(g_j) and
/// INF hat(g_j), found by raising one generator coefficient at a time.
RealElement greedy_lower(const Realification& R, const RealElement& a, const RealElement& b) {
  const CuModel& m = R.model();
  std::vector<RealElement> gens;
  for (const auto& g : m.generators()) gens.push_back(R.embed(g));
  RealElement cur = R.zero();
  auto fits = [&](const RealElement& x) { return Realification::leq(x, a) && Realification::leq(x, b); };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (!m.is_finite()) {
        const RealElement inf_step = R.embed(m.infinity_multiple(m.generators()[j]));
        if (!(Realification::add(cur, inf_step) == cur) && fits(Realification::add(cur, inf_step))) {
          cur = Realification::add(cur, inf_step);
          changed = true;
          continue;
        }
      }
      const RealElement step = Realification::scale(Rational(1, 4), gens[j]);
      for (int i = 0; i < 64; ++i) {
        const RealElement next = Realification::add(cur, step);
        if (next == cur || !fits(next)) break;
        cur = next;
        changed = true;
      }
    }
  }
  return cur;
}

/// A random element below x.
Element element_below(const CuModel& m, const Element& x, std::mt19937_64& rng) {
  if (m.is_finite()) {
    std::vector<Element> below;
    for (const auto& e : m.elements())
      if (m.leq(e, x)) below.push_back(e);
    return below[rng() % below.size()];
  }
  const Element r = random_element(m, rng, 3, true);
  std::vector<ExtNat> c(m.dim());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = min(x.coords[i], r.coords[i]);
  return m.element(std::move(c));
}

/// sum q (1 - 2^-n) hat(truncate(x, n)): a way-below approximant of the sample.
RealElement approximant(const Realification& R, const Sample& s, unsigned n) {
  const Rational shrink = 1 - Rational(1, 1ul << n);
  RealElement out = R.zero();
  for (const auto& [q, x] : s.parts)
    out = Realification::add(out, Realification::scale(q * shrink, R.embed(R.model().truncate(x, n))));
  return out;
}

struct Models {
  std::vector<std::string> names;
  std::vector<std::unique_ptr<Realification>> R;
};

Models realified(bool force) {
  Models ms;
  for (auto& [name, m] : fixtures::builtin_models()) {
    ms.names.push_back(name);
    ms.R.push_back(std::make_unique<Realification>(m, force));
  }
  return ms;
}

/// Runs `body` on cases cycling through the models until `want` cases are
/// applicable. body returns false for vacuous cases and reports failures.
struct PropertyRun {
  std::uint64_t applicable = 0, attempts = 0;
  Failures fails;
};

template <class Body>
PropertyRun run_property(const Models& ms, std::uint64_t seed, std::uint64_t want, Body body) {
  PropertyRun pr;
  std::mt19937_64 rng(seed);
  const std::uint64_t cap = want * 20;
  while (pr.applicable < want && pr.attempts < cap) {
    const std::size_t mi = pr.attempts++ % ms.R.size();
    try {
      if (body(*ms.R[mi], ms.names[mi], rng, pr.fails)) ++pr.applicable;
    } catch (const Error& e) {
      ++pr.applicable;
      pr.fails.add(ms.names[mi] + ": " + e.what());
    }
  }
  return pr;
}

bool grid_o5_witness(const Realification& R, const RealElement& fp, const RealElement& f, const RealElement& g) {
  const auto& items = R.grid_pool(2, 4);
  for (const auto& r : items)
    if (Realification::leq(Realification::add(fp, r), g) && Realification::leq(g, Realification::add(f, r)))
      return true;
  return false;
}

CriterionResult realification(const Options& o) {
  CriterionResult res{6, "realification invariants", false, {}, {}};
  const auto t0 = Clock::now();
  const Models ms = realified(o.force);
  nlohmann::json ev = nlohmann::json::object();
  bool ok = true;
  auto record = [&](const std::string& key, const PropertyRun& pr, std::uint64_t want) {
    ev[key] = {{"applicable", pr.applicable}, {"attempts", pr.attempts}, {"failures", pr.fails.count},
               {"first_failures", pr.fails.first}};
    if (pr.fails.count || pr.applicable < want) ok = false;
  };

  // cone isomorphism on every built-in
  Failures iso;
  for (std::size_t i = 0; i < ms.R.size(); ++i) {
    const auto rep = ms.R[i]->cone_iso_check(o.seed, 64);
    if (!rep.pass()) iso.add(ms.names[i] + ": " + rep.witness);
  }
  ev["cone_iso"] = {{"models", ms.R.size()}, {"failures", iso.count}, {"first_failures", iso.first}};
  if (iso.count) ok = false;

  const std::uint64_t want = 500;
  const std::uint64_t base = o.seed * 7919 + 6;
  using R_t = const Realification&;
  using S_t = const std::string&;
  using Rng = std::mt19937_64&;

  // O1..O6 on S_R
  record("SR_O1", run_property(ms, base + 1, want, [](R_t R, S_t, Rng rng, Failures& fl) {
    const Sample s = random_sample(R, rng);
    std::vector<RealElement> chain;
    for (unsigned n = 1; n <= 6; ++n) chain.push_back(approximant(R, s, n));
    const RealElement sup = Realification::sup_increasing(chain);
    if (!Realification::leq(sup, s.f)) fl.add(s.f.term + ": supremum of approximants exceeds f");
    return true;
  }), want);
  record("SR_O2", run_property(ms, base + 2, want, [](R_t R, S_t, Rng rng, Failures& fl) {
    const Sample s = random_sample(R, rng);
    const RealElement a4 = approximant(R, s, 4), a8 = approximant(R, s, 8);
    if (!R.way_below(a4, s.f) || !R.way_below(a8, s.f)) fl.add(s.f.term + ": approximant not way below f");
    const RealElement eps = Realification::scale(Rational(1, 256), s.f);
    for (std::size_t p = 0; p < s.f.values.size(); ++p) {
      const auto& v = s.f.values[p];
      if (v.is_finite() && a8.values[p] + eps.values[p] != v) fl.add(s.f.term + ": residual not 2^-8 f");
      if (v.is_inf() && a8.values[p].is_finite() && !(a8.values[p] > a4.values[p]))
        fl.add(s.f.term + ": approximants do not grow where f is infinite");
    }
    return true;
  }), want);
  record("SR_O3", run_property(ms, base + 3, want, [](R_t R, S_t, Rng rng, Failures& fl) {
    const Sample a = random_sample(R, rng), b = random_sample(R, rng);
    const RealElement ap = approximant(R, a, 1 + rng() % 4), bp = approximant(R, b, 1 + rng() % 4);
    if (!R.way_below(Realification::add(ap, bp), Realification::add(a.f, b.f)))
      fl.add(a.f.term + " , " + b.f.term + ": sum of approximants not way below the sum");
    return true;
  }), want);
  record("SR_O4", run_property(ms, base + 4, want, [](R_t R, S_t, Rng rng, Failures& fl) {
    const Sample a = random_sample(R, rng), b = random_sample(R, rng);
    std::vector<RealElement> ca, cb, cs;
    for (unsigned n = 1; n <= 5; ++n) {
      ca.push_back(approximant(R, a, n));
      cb.push_back(approximant(R, b, n));
      cs.push_back(Realification::add(ca.back(), cb.back()));
    }
    if (!(Realification::sup_increasing(cs) ==
          Realification::add(Realification::sup_increasing(ca), Realification::sup_increasing(cb))))
      fl.add(a.f.term + " , " + b.f.term + ": supremum not additive");
    return true;
  }), want);
  record("SR_O5", run_property(ms, base + 5, want, [](R_t R, S_t name, Rng rng, Failures& fl) {
    const Sample s = random_sample(R, rng);
    const RealElement fp = approximant(R, s, 1 + rng() % 4);
    const RealElement g = rng() % 4 == 0 ? s.f : Realification::add(s.f, random_sample(R, rng).f);
    bool found = false;
    try {
      const auto [h, hp] = R.almost_algebraic_split(fp, s.f, g);
      found = Realification::leq(Realification::add(fp, hp), g) && Realification::leq(g, Realification::add(s.f, hp));
    } catch (const Error&) {
    }
    if (!found && !grid_o5_witness(R, fp, s.f, g))
      fl.add(name + " f'=" + fp.term + " f=" + s.f.term + " g=" + g.term + ": no r with f'+r <= g <= f+r");
    return true;
  }), want);
  record("SR_O6", run_property(ms, base + 6, want, [](R_t R, S_t name, Rng rng, Failures& fl) {
    const Sample g = random_sample(R, rng), k = random_sample(R, rng);
    Sample f;
    const auto mode = rng() % 3;
    if (mode == 2) {
      f = random_sample(R, rng);
      if (!Realification::leq(f.f, Realification::add(g.f, k.f))) return false;
    } else {
      const Rational q = mode == 0 ? Rational(1) : Rational(1, 2);
      for (const Sample* src : {&g, &k})
        for (const auto& [c, x] : src->parts) {
          if (mode == 0 && rng() % 4 == 0) continue;
          const Element below = mode == 0 ? element_below(R.model(), x, rng) : x;
          const Rational cq = mode == 0 && rng() % 2 ? Rational(c / 2) : Rational(c * q);
          const RealElement e = Realification::scale(cq, R.embed(below));
          f.f = f.parts.empty() ? e : Realification::add(f.f, e);
          f.parts.emplace_back(cq, below);
        }
      if (f.parts.empty()) return false;
    }
    const RealElement fp = approximant(R, f, 1 + rng() % 4);
    // candidate pieces: sub-sums of the parts of f, g and k, halved or whole
    std::vector<RealElement> pieces{R.zero()};
    for (const Sample* src : {static_cast<const Sample*>(&f), &g, &k}) {
      const std::size_t n = src->parts.size();
      for (std::size_t mask = 1; mask < (1u << n); ++mask) {
        RealElement sum = R.zero();
        for (std::size_t i = 0; i < n; ++i)
          if (mask >> i & 1)
            sum = Realification::add(sum, Realification::scale(src->parts[i].first, R.embed(src->parts[i].second)));
        pieces.push_back(sum);
        pieces.push_back(Realification::scale(Rational(1, 2), sum));
      }
    }
    pieces.push_back(greedy_lower(R, f.f, g.f));
    pieces.push_back(greedy_lower(R, f.f, k.f));
    std::vector<const RealElement*> under_g, under_k;
    for (const auto& p : pieces) {
      if (!Realification::leq(p, f.f)) continue;
      if (Realification::leq(p, g.f)) under_g.push_back(&p);
      if (Realification::leq(p, k.f)) under_k.push_back(&p);
    }
    for (const auto* a : under_g)
      for (const auto* b : under_k)
        if (Realification::leq(fp, Realification::add(*a, *b))) return true;
    fl.add(name + " f'=" + fp.term + " g=" + g.f.term + " k=" + k.f.term + ": no (g', k') found");
    return true;
  }), want);

  // complement_R
  record("complement", run_property(ms, base + 7, want, [](R_t R, S_t name, Rng rng, Failures& fl) {
    const Sample x = random_sample(R, rng);
    static const Rational qs[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
    const Rational q = qs[rng() % 3];
    const RealElement g = rng() % 2 ? x.f : Realification::add(x.f, random_sample(R, rng).f);
    const RealElement f = rng() % 3 == 0 ? Realification::scale(q, random_sample(R, rng).f) : Realification::scale(q, x.f);
    if (!R.triangle_lhd(f, g)) return false;
    const bool prop = rng() % 2;
    const RealElement h = R.complement(f, g, prop);
    for (std::size_t p = 0; p < g.values.size(); ++p)
      if (f.values[p] + h.values[p] != g.values[p]) {
        fl.add(name + ": f + h differs from g at representative " + std::to_string(p));
        break;
      }
    if (prop && !Realification::leq(f, Realification::scale(64, h))) fl.add(name + ": f not proportional below h");
    return true;
  }), want);

  // dini_index against the closed form
  record("dini", run_property(ms, base + 8, want, [](R_t R, S_t name, Rng rng, Failures& fl) {
    const Sample s = random_sample(R, rng);
    const RealElement g = Realification::scale(2, s.f);
    if (!R.triangle_lhd(s.f, g)) return false;
    const Rational eps(1, 1ul << (rng() % 5));
    const auto chain = R.rapid_chain(s.f, 12);
    bool positive = false;
    for (const auto& v : s.f.values) positive = positive || (v.is_finite() && !v.is_zero());
    std::size_t expect = 1;
    if (positive)
      while (Rational(1, 1ul << expect) > 2 * eps) ++expect;
    const std::size_t got = R.dini_index(s.f, chain, g, eps);
    if (got != expect)
      fl.add(name + " f=" + s.f.term + " eps=" + rational_to_string(eps) + ": got " + std::to_string(got) +
             " expected " + std::to_string(expect));
    return true;
  }), want);

  record("split", run_property(ms, base + 9, want, [](R_t R, S_t name, Rng rng, Failures& fl) {
    const Sample s = random_sample(R, rng);
    const RealElement fp = rng() % 5 == 0 ? R.zero() : approximant(R, s, 1 + rng() % 4);
    const RealElement g = rng() % 3 == 0 ? s.f : Realification::add(s.f, random_sample(R, rng).f);
    if (!R.way_below(fp, s.f)) return false;
    std::pair<RealElement, RealElement> hh;
    try {
      hh = R.almost_algebraic_split(fp, s.f, g);
    } catch (const Error& e) {
      fl.add(name + " f'=" + fp.term + " f=" + s.f.term + " g=" + g.term + ": " + e.what());
      return true;
    }
    const auto& [h, hp] = hh;
    if (!R.way_below(fp, h) || !R.way_below(h, s.f) || !(Realification::add(h, hp) == g))
      fl.add(name + " f'=" + fp.term + " f=" + s.f.term + ": split conditions fail");
    return true;
  }), want);

  record("cancellation", run_property(ms, base + 10, want, [](R_t R, S_t name, Rng rng, Failures& fl) {
    const Sample f = random_sample(R, rng), g = random_sample(R, rng);
    const RealElement h =
        rng() % 4 == 0 ? random_sample(R, rng).f : Realification::scale(1 + rng() % 3, g.f);
    CancellationResult c;
    try {
      c = R.cancellation_check(f.f, g.f, h);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ProportionalityUnverified) return false;
      throw;
    }
    if (!c.holds()) fl.add(name + " f=" + f.f.term + " g=" + g.f.term + ": f+h <= g+h but not f <= g");
    return true;
  }), want);

  record("unperforation", run_property(ms, base + 11, want, [](R_t R, S_t name, Rng rng, Failures& fl) {
    const Sample g = random_sample(R, rng);
    static const Rational qs[] = {Rational(1, 2), Rational(1), Rational(3, 2)};
    const RealElement f = rng() % 2 ? random_sample(R, rng).f : Realification::scale(qs[rng() % 3], g.f);
    const unsigned long n = 1 + rng() % 4;
    const bool premise = Realification::leq(Realification::scale(n, f), Realification::scale(n, g.f));
    if (premise && !Realification::leq(f, g.f)) fl.add(name + ": n*f <= n*g but not f <= g");
    return true;
  }), want);

  res.elapsed_ms = ms_since(t0);
  res.pass = ok;
  std::uint64_t total_fail = iso.count;
  for (const auto& [k, v] : ev.items()) total_fail += k == "cone_iso" ? 0 : v["failures"].get<std::uint64_t>();
  res.detail = std::to_string(total_fail) + " failures across cone isomorphism, S_R axioms and property tests";
  res.evidence = ev;
  return res;
}

// ----------------------------------------------------------- 7. halving

CriterionResult glimm(const Options&) {
  CriterionResult res{7, "Glimm halving", false, {}, {}};
  const auto t0 = Clock::now();
  Failures fails;
  const CuModel nbar = CuModel::nbar_power(1);
  const auto h1 = halving(nbar, nbar.element({ExtNat(1)}));
  const auto h2 = halving(nbar, nbar.element({ExtNat(2)}));
  const bool nbar_ok = h1.chain_case && !h2.chain_case && h2.z && *h2.z == nbar.element({ExtNat(1)});
  if (!nbar_ok) fails.add("N-bar: expected CHAIN_CASE at 1 and z=1 at 2");
  std::uint64_t cases = 0;
  nlohmann::json per_model = nlohmann::json::object();
  for (const auto& [name, m] : fixtures::builtin_finite()) {
    if (simplicity_witness(m)) {
      per_model[name] = "not simple";
      continue;
    }
    if (chain_generator(m)) {
      per_model[name] = "chain";
      continue;
    }
    std::uint64_t here = 0;
    for (const auto& x : m.elements()) {
      if (x == m.zero()) continue;
      ++here;
      try {
        const auto h = halving(m, x);
        if (h.chain_case || !h.z || *h.z == m.zero() || !m.leq(m.add(*h.z, *h.z), x))
          fails.add(name + " x=" + x.to_string() + ": no valid witness");
      } catch (const Error& e) {
        fails.add(name + " x=" + x.to_string() + ": " + e.what());
      }
    }
    cases += here;
    per_model[name] = {{"cases", here}};
  }
  res.elapsed_ms = ms_since(t0);
  res.pass = fails.count == 0 && cases > 0;
  res.detail = std::string("N-bar ") + (nbar_ok ? "ok" : "WRONG") + "; " + std::to_string(cases) +
               " nonzero elements of simple non-chain fixtures, " + std::to_string(fails.count) + " failures";
  res.evidence = {{"models", per_model}, {"failures", fails.first}, {"cases", cases}};
  return res;
}

CriterionResult run_one(int id, const Options& o) {
  switch (id) {
    case 1: return axioms(o);
    case 2: return oracles(o);
    case 3: return algebraic_order(o);
    case 4: return lattice(o);
    case 5: return refinement(o);
    case 6: return realification(o);
    case 7: return glimm(o);
    default: throw Error(ErrorCode::ParseError, "no criterion " + std::to_string(id));
  }
}

std::vector<CriterionResult> first_seven(const Options& o) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 7; ++id) out.push_back(run_one(id, o));
  return out;
}

CriterionResult determinism(const std::vector<CriterionResult>& a, const Options& o) {
  CriterionResult res{8, "determinism", false, {}, {}};
  const auto t0 = Clock::now();
  const auto b = first_seven(o);
  const std::string ja = results_json(a).dump(), jb = results_json(b).dump();
  res.elapsed_ms = ms_since(t0);
  res.pass = ja == jb;
  std::size_t at = 0;
  while (at < ja.size() && at < jb.size() && ja[at] == jb[at]) ++at;
  res.detail = res.pass ? "two runs produced byte-identical reports (" + std::to_string(ja.size()) + " bytes)"
                        : "reports differ at byte " + std::to_string(at);
  res.evidence = {{"bytes", ja.size()}, {"identical", res.pass}};
  return res;
}

}  // namespace

CriterionResult run_criterion(int id, const Options& opts) {
  if (id == 8) return determinism(first_seven(opts), opts);
  return run_one(id, opts);
}

std::vector<CriterionResult> run_all(const Options& opts) {
  auto out = first_seven(opts);
  out.push_back(determinism(out, opts));
  return out;
}

nlohmann::json results_json(const std::vector<CriterionResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results)
    arr.push_back({{"id", r.id}, {"name", r.name}, {"status", r.pass ? "PASS" : "FAIL"}, {"detail", r.detail},
                   {"evidence", r.evidence}});
  return arr;
}

nlohmann::json selftest_report(const std::vector<CriterionResult>& results, const Options& opts, double elapsed_ms) {
  std::string digest;
  for (const auto& [name, m] : fixtures::builtin_models()) digest += m.digest();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : digest) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  nlohmann::json witnesses = nlohmann::json::object();
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : results) {
    checks.push_back({{"id", r.id}, {"name", r.name}, {"status", r.pass ? "PASS" : "FAIL"}, {"detail", r.detail}});
    witnesses[std::to_string(r.id)] = r.evidence;
  }
  return {{"schema", "cu-lattice/1"},
          {"command", "selftest"},
          {"model_digest", buf},
          {"seed", opts.seed},
          {"options", {{"trials", opts.trials}, {"denominator_bound", opts.denominator}, {"force", opts.force}}},
          {"checks", checks},
          {"witnesses", witnesses},
          {"elapsed_ms", static_cast<std::uint64_t>(elapsed_ms)}};
}

}  // namespace cu::acceptance
