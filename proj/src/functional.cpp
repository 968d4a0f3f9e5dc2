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

#include "cu/functional.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace cu {

namespace {

constexpr std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

void require_mask_capacity(const CuModel& m) {
  if (m.is_finite() && m.size() > 64)
    throw Error(ErrorCode::ModelTooLarge, "functionals on tables are limited to 64 elements");
}

// mu_j = sum_{i >= j} c_i on a chain.
std::vector<ExtRational> chain_mu(const std::vector<ExtRational>& c) {
  std::vector<ExtRational> mu(c.size());
  ExtRational acc;
  for (std::size_t j = c.size(); j-- > 0;) {
    acc += c[j];
    mu[j] = acc;
  }
  return mu;
}

std::string pair_witness(const CuModel&, const Element& a, const Element& b) {
  return "(" + a.to_string() + "," + b.to_string() + ")";
}

}  // namespace

bool ideal_contains(const CuModel& m, Ideal ideal, const Element& a) {
  m.require_member(a);
  if (m.is_finite()) return a.index < 64 && (ideal & bit(a.index)) != 0;
  for (std::size_t i = 0; i < a.coords.size(); ++i)
    if (!a.coords[i].is_zero() && (ideal & bit(i)) == 0) return false;
  return true;
}

ExtRational evaluate(const CuModel& m, const Functional& f, const Element& a) {
  m.require_member(a);
  if (m.is_finite()) return f.values.at(a.index);
  ExtRational s;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (a.coords[i].is_zero()) continue;
    s += f.values[i] * ExtRational(a.coords[i]);
  }
  return s;
}

std::vector<ExtRational> generator_values(const CuModel& m, const Functional& f) {
  if (m.kind() == ModelKind::NbarPower) return f.values;
  if (m.kind() == ModelKind::MonotoneChain) return chain_mu(f.values);
  std::vector<ExtRational> out;
  for (const auto& g : m.generators()) out.push_back(evaluate(m, f, g));
  return out;
}

Functional from_generator_values(const CuModel& m, const std::vector<ExtRational>& mu) {
  if (m.is_finite()) throw Error(ErrorCode::ElementModelMismatch, "generator form applies to effective models");
  const std::size_t k = m.dim();
  if (mu.size() != k) throw Error(ErrorCode::ElementModelMismatch, "wrong number of generator values");
  Functional f;
  f.values.resize(k);
  if (m.kind() == ModelKind::NbarPower) {
    f.values = mu;
  } else {
    for (std::size_t j = 0; j + 1 < k; ++j)
      if (mu[j + 1] > mu[j])
        throw Error(ErrorCode::NotMonotone, "generator values increase along the chain at " + std::to_string(j),
                    "g" + std::to_string(j + 1) + "<=g" + std::to_string(j));
    for (std::size_t j = 0; j < k; ++j) {
      if (mu[j].is_inf()) {
        f.values[j] = ExtRational::inf();
      } else {
        f.values[j] = difference(mu[j], j + 1 < k ? mu[j + 1] : ExtRational());
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    if (f.values[i].is_finite()) f.ideal |= bit(i);
  return f;
}

Functional from_values(const CuModel& m, std::vector<ExtRational> values) {
  require_mask_capacity(m);
  if (!m.is_finite()) throw Error(ErrorCode::ElementModelMismatch, "value vectors apply to finite tables");
  Functional f;
  f.values = std::move(values);
  for (std::size_t i = 0; i < f.values.size(); ++i)
    if (f.values[i].is_finite()) f.ideal |= bit(i);
  return f;
}

Functional zero_functional(const CuModel& m) { return lambda_ideal(m, ~Ideal{0}); }

Functional lambda_ideal(const CuModel& m, Ideal ideal) {
  require_mask_capacity(m);
  const std::size_t len = m.is_finite() ? m.size() : m.dim();
  Functional f;
  f.values.resize(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (ideal & bit(i))
      f.ideal |= bit(i);
    else
      f.values[i] = ExtRational::inf();
  }
  return f;
}

std::optional<Element> functional_leq_witness(const CuModel& m, const Functional& a, const Functional& b) {
  if (m.is_finite()) {
    for (std::uint32_t i = 0; i < a.values.size(); ++i)
      if (a.values[i] > b.values[i]) return m.element(i);
    return std::nullopt;
  }
  const auto ga = generator_values(m, a);
  const auto gb = generator_values(m, b);
  const auto gens = m.generators();
  for (std::size_t j = 0; j < ga.size(); ++j)
    if (ga[j] > gb[j]) return gens[j];
  return std::nullopt;
}

bool functional_leq(const CuModel& m, const Functional& a, const Functional& b) {
  return !functional_leq_witness(m, a, b).has_value();
}

Functional functional_add(const CuModel& m, const Functional& a, const Functional& b) {
  (void)m;
  Functional f;
  f.ideal = a.ideal & b.ideal;
  f.values.resize(a.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i) f.values[i] = a.values[i] + b.values[i];
  return f;
}

Functional functional_scale(const CuModel& m, const Rational& q, const Functional& a) {
  if (q < 0) throw std::domain_error("negative scale");
  if (q == 0) return zero_functional(m);
  Functional f = a;
  for (auto& v : f.values) v = ExtRational(q) * v;
  return f;
}

std::string functional_to_string(const CuModel& m, const Functional& f) {
  (void)m;
  std::string s = "[";
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (i) s += ",";
    s += f.values[i].to_string();
  }
  return s + "]";
}

namespace {

nlohmann::json ideal_to_json(const CuModel& m, Ideal ideal) {
  nlohmann::json arr = nlohmann::json::array();
  const std::size_t len = m.is_finite() ? m.size() : m.dim();
  for (std::size_t i = 0; i < len && i < 64; ++i)
    if (ideal & bit(i)) arr.push_back(i);
  return arr;
}

}  // namespace

nlohmann::json functional_to_json(const CuModel& m, const Functional& f) {
  nlohmann::json vals = nlohmann::json::array();
  for (const auto& v : f.values) vals.push_back(v.to_string());
  return {{"ideal", ideal_to_json(m, f.ideal)},
          {m.is_finite() ? "values" : "coefficients", vals}};
}

std::vector<Element> check_points(const CuModel& m) {
  if (m.is_finite()) return m.elements();
  std::vector<Element> out;
  for (const auto& g : m.generators()) {
    out.push_back(g);
    out.push_back(m.infinity_multiple(g));
  }
  return out;
}

std::optional<std::string> functional_violation(const CuModel& m, const Functional& f, std::uint64_t bound) {
  const auto pts = m.grid(bound);
  if (!evaluate(m, f, m.zero()).is_zero()) return "value at 0 is not 0";
  for (const auto& a : pts)
    for (const auto& b : pts) {
      if (evaluate(m, f, m.add(a, b)) != evaluate(m, f, a) + evaluate(m, f, b))
        return "not additive at " + pair_witness(m, a, b);
      if (m.leq(a, b) && evaluate(m, f, a) > evaluate(m, f, b)) return "not monotone at " + pair_witness(m, a, b);
    }
  for (const auto& a : pts) {
    const auto v = evaluate(m, f, a);
    const bool inside = ideal_contains(m, f.ideal, a);
    if (!inside && v.is_finite()) return "finite outside its ideal at " + a.to_string();
    if (inside && !a.has_infinite_coordinate() && v.is_inf()) return "infinite inside its ideal at " + a.to_string();
  }
  if (m.kind() == ModelKind::MonotoneChain) {
    // supports are suffixes, so the ideal must be one
    const Ideal full = bit(m.dim()) - 1;
    const Ideal rest = full & ~f.ideal;
    if (rest != 0 && (f.ideal & (bit(std::bit_width(rest)) - 1)) != 0) return "ideal is not a suffix";
  }
  if (!m.is_finite()) {
    for (const auto& a : pts) {
      if (!a.has_infinite_coordinate()) continue;
      std::uint64_t c = 1;
      for (const auto& x : a.coords)
        if (!x.is_inf()) c = std::max<std::uint64_t>(c, x.value() + 1);
      const auto v = evaluate(m, f, a);
      const auto lo = evaluate(m, f, m.truncate(a, c));
      const auto hi = evaluate(m, f, m.truncate(a, c + 1));
      const bool ok = v.is_finite() ? (lo == v && hi == v) : (lo.is_inf() || hi > lo);
      if (!ok) return "supremum not preserved along truncations of " + a.to_string();
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------- raw maps

ExtRational evaluate_raw(const CuModel& m, const RawMap& a, const Element& x) {
  m.require_member(x);
  if (m.is_finite()) return a.values.at(x.index);
  const auto mult = m.decompose(x);
  ExtRational s;
  for (std::size_t j = 0; j < mult.size(); ++j) {
    if (mult[j].is_zero()) continue;
    s += mult[j].is_inf() ? a.inf_gen[j] : ExtRational(mult[j]) * a.finite_gen[j];
  }
  return s;
}

RawMap raw_from_functional(const CuModel& m, const Functional& f) {
  RawMap r;
  if (m.is_finite()) {
    r.values = f.values;
    return r;
  }
  for (const auto& g : m.generators()) {
    r.finite_gen.push_back(evaluate(m, f, g));
    r.inf_gen.push_back(evaluate(m, f, m.infinity_multiple(g)));
  }
  return r;
}

void validate_raw(const CuModel& m, const RawMap& a, std::uint64_t bound) {
  if (m.is_finite()) require_mask_capacity(m);
  const auto pts = m.grid(bound);
  if (!evaluate_raw(m, a, m.zero()).is_zero()) throw Error(ErrorCode::NotAdditive, "value at 0 is not 0", "0");
  for (const auto& x : pts)
    for (const auto& y : pts) {
      if (evaluate_raw(m, a, m.add(x, y)) != evaluate_raw(m, a, x) + evaluate_raw(m, a, y))
        throw Error(ErrorCode::NotAdditive, "map not additive at " + pair_witness(m, x, y), pair_witness(m, x, y));
      if (m.leq(x, y) && evaluate_raw(m, a, x) > evaluate_raw(m, a, y))
        throw Error(ErrorCode::NotMonotone, "map not monotone at " + pair_witness(m, x, y), pair_witness(m, x, y));
    }
}

Functional regularize(const CuModel& m, const RawMap& a, std::uint64_t bound) {
  validate_raw(m, a, bound);
  if (m.is_finite()) return from_values(m, a.values);
  return from_generator_values(m, a.finite_gen);
}

// --------------------------------------------------------------- cone

namespace {

Ideal finite_closure(const CuModel& m, Ideal s) {
  const std::size_t n = m.size();
  const auto& add = m.add_table();
  const auto& leq = m.leq_table();
  for (;;) {
    Ideal next = s;
    for (std::size_t a = 0; a < n; ++a) {
      if (!(s & bit(a))) continue;
      for (std::size_t b = 0; b < n; ++b)
        if (s & bit(b)) next |= bit(add[a][b]);
      for (std::size_t x = 0; x < n; ++x)
        if (leq[x][a]) next |= bit(x);
    }
    if (next == s) return s;
    s = next;
  }
}

bool ideal_order(Ideal a, Ideal b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

}  // namespace

std::vector<Ideal> enumerate_ideals(const CuModel& m, bool force) {
  std::vector<Ideal> out;
  if (m.is_finite()) {
    m.require_exhaustive_ok(force);
    require_mask_capacity(m);
    std::set<Ideal> seen;
    std::vector<Ideal> queue{finite_closure(m, bit(0))};
    seen.insert(queue.front());
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const Ideal cur = queue[q];
      for (std::size_t a = 0; a < m.size(); ++a) {
        if (cur & bit(a)) continue;
        const Ideal next = finite_closure(m, cur | bit(a));
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
    out.assign(seen.begin(), seen.end());
  } else if (m.kind() == ModelKind::NbarPower) {
    for (Ideal a = 0; a < bit(m.dim()); ++a) out.push_back(a);
  } else {
    const Ideal full = bit(m.dim()) - 1;
    for (std::size_t j = 0; j <= m.dim(); ++j) out.push_back(full & ~(bit(j) - 1));
  }
  std::sort(out.begin(), out.end(), ideal_order);
  return out;
}

HCone finite_part_system(const CuModel& m, Ideal ideal, std::vector<std::size_t>* variables) {
  std::vector<std::size_t> vars;
  HCone h;
  if (m.is_finite()) {
    const std::size_t n = m.size();
    std::vector<long> pos(n, -1);
    for (std::size_t a = 0; a < n; ++a)
      if (ideal & bit(a)) {
        pos[a] = static_cast<long>(vars.size());
        vars.push_back(a);
      }
    h.dim = vars.size();
    Vec zero_row(h.dim, Rational(0));
    zero_row[pos[0]] = 1;
    h.equalities.push_back(zero_row);
    std::set<Vec> rows;
    for (std::size_t a : vars)
      for (std::size_t b : vars) {
        if (b < a) continue;
        const std::size_t c = m.add_table()[a][b];
        Vec row(h.dim, Rational(0));
        row[pos[c]] += 1;
        row[pos[a]] -= 1;
        row[pos[b]] -= 1;
        if (std::any_of(row.begin(), row.end(), [](const Rational& q) { return sgn(q) != 0; })) rows.insert(row);
      }
    h.equalities.insert(h.equalities.end(), rows.begin(), rows.end());
    for (std::size_t a : vars)
      for (std::size_t b : vars)
        if (a != b && m.leq_table()[a][b]) {
          Vec row(h.dim, Rational(0));
          row[pos[b]] = 1;
          row[pos[a]] = -1;
          h.inequalities.push_back(row);
        }
  } else {
    const auto gens = m.generators();
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (ideal_contains(m, ideal, gens[j])) vars.push_back(j);
    h.dim = vars.size();
    for (std::size_t a = 0; a < vars.size(); ++a)
      for (std::size_t b = 0; b < vars.size(); ++b)
        if (a != b && m.leq(gens[vars[a]], gens[vars[b]])) {
          Vec row(h.dim, Rational(0));
          row[b] = 1;
          row[a] = -1;
          h.inequalities.push_back(row);
        }
  }
  if (variables) *variables = vars;
  return h;
}

std::vector<Functional> cone_rays(const CuModel& m, Ideal ideal) {
  std::vector<std::size_t> vars;
  const HCone h = finite_part_system(m, ideal, &vars);
  std::vector<Functional> out;
  for (const auto& r : extreme_rays(h)) {
    if (m.is_finite()) {
      std::vector<ExtRational> values(m.size(), ExtRational::inf());
      for (std::size_t i = 0; i < vars.size(); ++i) values[vars[i]] = ExtRational(r[i]);
      out.push_back(from_values(m, std::move(values)));
    } else {
      std::vector<ExtRational> mu(m.dim(), ExtRational::inf());
      for (std::size_t i = 0; i < vars.size(); ++i) mu[vars[i]] = ExtRational(r[i]);
      Functional f = from_generator_values(m, mu);
      for (const auto& c : f.values)
        if (c.is_finite() && !c.is_zero()) {
          const Rational lead = c.value();
          f = functional_scale(m, 1 / lead, f);
          break;
        }
      out.push_back(std::move(f));
    }
  }
  std::sort(out.begin(), out.end(), [](const Functional& a, const Functional& b) { return a.values > b.values; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FunctionalCone compute_cone(const CuModel& m, bool force) {
  FunctionalCone cone;
  cone.ideals = enumerate_ideals(m, force);
  for (std::size_t i = 0; i < cone.ideals.size(); ++i) {
    cone.rays.push_back(cone_rays(m, cone.ideals[i]));
    cone.representatives.push_back(lambda_ideal(m, cone.ideals[i]));
    cone.rep_ideal.push_back(i);
    cone.rep_is_ray.push_back(false);
    for (const auto& r : cone.rays.back()) {
      cone.representatives.push_back(r);
      cone.rep_ideal.push_back(i);
      cone.rep_is_ray.push_back(true);
    }
  }
  return cone;
}

nlohmann::json cone_to_json(const CuModel& m, const FunctionalCone& cone) {
  nlohmann::json ideals = nlohmann::json::array();
  for (std::size_t i = 0; i < cone.ideals.size(); ++i) {
    nlohmann::json rays = nlohmann::json::array();
    for (const auto& r : cone.rays[i]) rays.push_back(functional_to_json(m, r));
    ideals.push_back({{"members", ideal_to_json(m, cone.ideals[i])}, {"rays", rays}});
  }
  return {{"ideals", ideals}, {"representative_count", cone.representatives.size()}};
}

std::vector<ExtRational> hat_evaluate(const CuModel& m, const Element& s, const FunctionalCone& cone) {
  std::vector<ExtRational> out;
  out.reserve(cone.representatives.size());
  for (const auto& r : cone.representatives) out.push_back(evaluate(m, r, s));
  return out;
}

bool compare_hat_lp(const CuModel& m, const Element& s, const Element& t, const FunctionalCone& cone) {
  for (const auto& r : cone.representatives)
    if (evaluate(m, r, s) > evaluate(m, r, t)) return false;
  return true;
}

namespace {

std::vector<Rational> eps_schedule(unsigned depth) {
  std::vector<Rational> out;
  Rational e = 1;
  for (unsigned d = 1; d <= depth; ++d) {
    e /= 2;
    out.push_back(e);
  }
  return out;
}

// Largest integer N with N < M / (1 - eps).
std::uint64_t largest_n(std::uint64_t M, const Rational& eps) {
  const Rational lim = Rational(static_cast<unsigned long>(M)) / (1 - eps);
  mpz_class fl = lim.get_num() / lim.get_den();
  if (Rational(fl) == lim) fl -= 1;
  return fl.get_ui();
}

}  // namespace

MnResult compare_hat_mn(const CuModel& m, const Element& s, const Element& t, const MnOptions& opts) {
  m.require_member(s);
  m.require_member(t);
  const auto schedule = eps_schedule(opts.eps_depth);
  MnResult res;
  res.verdict = true;
  if (schedule.empty()) return res;

  std::vector<Element> primes;
  if (m.is_finite()) {
    primes = m.below(s);
  } else {
    std::uint64_t mx = 0;
    for (const auto* e : {&s, &t})
      for (const auto& c : e->coords)
        if (!c.is_inf()) mx = std::max(mx, c.value());
    const std::uint64_t cmax = 2 * mx + 2;
    for (std::uint64_t c = 0; c <= cmax; ++c) {
      Element p = m.truncate(s, c);
      if (primes.empty() || primes.back() != p) primes.push_back(std::move(p));
    }
  }

  // Witness for one (s', eps); nullopt when none exists within the bound.
  auto search = [&](const Element& sp, const Rational& eps) -> std::optional<std::pair<std::uint64_t, std::uint64_t>> {
    if (m.is_finite()) {
      const std::uint64_t B = static_cast<std::uint64_t>(m.size()) * m.size();
      for (std::uint64_t M = 1; M <= B; ++M) {
        const std::uint64_t N = std::min(B, largest_n(M, eps));
        if (N == 0) continue;
        if (m.leq(m.nat_multiple(M, sp), m.nat_multiple(N, t))) return std::make_pair(M, N);
      }
      return std::nullopt;
    }
    // rho = min_i t_i / s'_i over the support of s'
    ExtRational rho = ExtRational::inf();
    for (std::size_t i = 0; i < sp.coords.size(); ++i) {
      if (sp.coords[i].is_zero()) continue;
      if (t.coords[i].is_inf()) continue;
      const Rational q = Rational(mpz_class(t.coords[i].to_string()), mpz_class(sp.coords[i].to_string()));
      rho = min(rho, ExtRational(q));
    }
    std::pair<std::uint64_t, std::uint64_t> w{1, 1};
    if (rho.is_finite() && rho.value() < 1) {
      if (rho.value() <= 1 - eps) return std::nullopt;
      const auto& num = rho.value().get_num();
      const auto& den = rho.value().get_den();
      if (num > opts.search_bound || den > opts.search_bound)
        throw Error(ErrorCode::SearchBoundExceeded, "witness " + rational_to_string(rho.value()) + " exceeds search bound",
                    "(" + sp.to_string() + "," + t.to_string() + ")");
      w = {num.get_ui(), den.get_ui()};
    }
    if (!m.leq(m.nat_multiple(w.first, sp), m.nat_multiple(w.second, t)))
      throw Error(ErrorCode::InvariantViolation, "closed-form witness failed to replay");
    return w;
  };

  for (const auto& sp : primes) {
    const auto w = search(sp, schedule.back());
    if (w) {
      res.witnesses.push_back({sp, schedule.back(), w->first, w->second});
      continue;
    }
    res.verdict = false;
    res.failing_s_prime = sp;
    for (const auto& eps : schedule)
      if (!search(sp, eps)) {
        res.failing_eps = eps;
        break;
      }
    return res;
  }
  return res;
}

Functional complement(const CuModel& m, const Functional& alpha, const Functional& beta, std::uint64_t bound) {
  if (auto w = functional_leq_witness(m, alpha, beta))
    throw Error(ErrorCode::NotDominated, "alpha exceeds beta at " + w->to_string(), w->to_string());
  auto diff = [](const ExtRational& b, const ExtRational& a) { return b.is_inf() ? ExtRational::inf() : difference(b, a); };
  RawMap gamma;
  if (m.is_finite()) {
    for (std::size_t i = 0; i < alpha.values.size(); ++i) gamma.values.push_back(diff(beta.values[i], alpha.values[i]));
  } else {
    for (const auto& g : m.generators()) {
      gamma.finite_gen.push_back(diff(evaluate(m, beta, g), evaluate(m, alpha, g)));
      const auto ig = m.infinity_multiple(g);
      gamma.inf_gen.push_back(diff(evaluate(m, beta, ig), evaluate(m, alpha, ig)));
    }
  }
  Functional g = regularize(m, gamma, bound);
  if (functional_add(m, alpha, g) != beta)
    throw Error(ErrorCode::HypothesisFailed, "alpha + gamma differs from beta after regularization");
  return g;
}

}  // namespace cu
