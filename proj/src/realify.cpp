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

#include "cu/realify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace cu {

namespace {

bool has_top_level_plus(const std::string& t) {
  int depth = 0;
  for (char c : t) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == '+' && depth == 0) return true;
  }
  return false;
}

std::string wrap(const std::string& t) { return has_top_level_plus(t) ? "(" + t + ")" : t; }

bool all_zero(const RealElement& f) {
  return std::all_of(f.values.begin(), f.values.end(), [](const ExtRational& v) { return v.is_zero(); });
}

ExtRational abs_diff(const ExtRational& a, const ExtRational& b) {
  return a >= b ? difference(a, b) : difference(b, a);
}

}  // namespace

Realification::Realification(CuModel m, bool force) : model_(std::move(m)), cone_(compute_cone(model_, force)) {
  generators_ = model_.generators();
}

RealElement Realification::zero() const {
  return RealElement{std::vector<ExtRational>(dimension()), "0*hat(" + model_.zero().to_string() + ")"};
}

RealElement Realification::embed(const Element& s) const {
  return RealElement{hat_evaluate(model_, s, cone_), "hat(" + s.to_string() + ")"};
}

RealElement Realification::scale(const Rational& q_in, const RealElement& f) {
  Rational q = q_in;
  q.canonicalize();
  if (q <= 0) throw Error(ErrorCode::HypothesisFailed, "scale factor must be positive");
  RealElement r;
  r.values.reserve(f.values.size());
  for (const auto& v : f.values) r.values.push_back(ExtRational(q) * v);
  r.term = q == 1 ? f.term : rational_to_string(q) + "*" + wrap(f.term);
  return r;
}

RealElement Realification::add(const RealElement& f, const RealElement& g) {
  RealElement r;
  r.values.resize(f.values.size());
  for (std::size_t i = 0; i < f.values.size(); ++i) r.values[i] = f.values[i] + g.values[i];
  r.term = f.term + "+" + g.term;
  return r;
}

bool Realification::leq(const RealElement& f, const RealElement& g) {
  for (std::size_t i = 0; i < f.values.size(); ++i)
    if (f.values[i] > g.values[i]) return false;
  return true;
}

RealElement Realification::sup_increasing(const std::vector<RealElement>& chain) {
  if (chain.empty()) throw Error(ErrorCode::NotIncreasing, "empty chain");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!leq(chain[i], chain[i + 1]))
      throw Error(ErrorCode::NotIncreasing, "chain drops after position " + std::to_string(i), std::to_string(i));
  RealElement r = chain.back();
  r.term = "sup[";
  for (std::size_t i = 0; i < chain.size(); ++i) r.term += (i ? "," : "") + chain[i].term;
  r.term += "]";
  return r;
}

std::optional<Rational> Realification::lhd_ratio(const RealElement& f, const RealElement& g) const {
  Rational rho = 0;
  for (std::size_t p = 0; p < f.values.size(); ++p) {
    const auto& gv = g.values[p];
    const auto& fv = f.values[p];
    if (gv.is_inf()) continue;
    if (gv.is_zero()) {
      if (!fv.is_zero()) return std::nullopt;
      continue;
    }
    if (fv.is_inf()) return std::nullopt;
    rho = std::max(rho, Rational(fv.value() / gv.value()));
  }
  if (rho >= 1) return std::nullopt;
  return rho;
}

bool Realification::triangle_lhd(const RealElement& f, const RealElement& g) const {
  if (!lhd_ratio(f, g)) return false;
  const auto& reps = cone_.representatives;
  for (std::size_t p = 0; p < reps.size(); ++p) {
    if (g.values[p].is_inf()) continue;
    const Ideal ip = cone_.ideals[cone_.rep_ideal[p]];
    for (std::size_t q = 0; q < reps.size(); ++q) {
      if (!cone_.rep_is_ray[q]) continue;
      const Ideal iq = cone_.ideals[cone_.rep_ideal[q]];
      if ((iq & ip) == ip && f.values[q].is_inf()) return false;
    }
  }
  return true;
}

void Realification::build_order() const {
  const auto& reps = cone_.representatives;
  std::vector<std::vector<std::size_t>> combos;
  std::vector<Functional> fs;
  for (std::size_t p = 0; p < reps.size(); ++p)
    for (std::size_t q = p; q <= reps.size(); ++q) {
      if (q == reps.size()) {
        combos.push_back({p});
        fs.push_back(reps[p]);
      } else {
        combos.push_back({p, q});
        fs.push_back(functional_add(model_, reps[p], reps[q]));
      }
    }
  for (std::size_t a = 0; a < fs.size(); ++a)
    for (std::size_t b = 0; b < fs.size(); ++b)
      if (a != b && functional_leq(model_, fs[a], fs[b])) order_pairs_.emplace_back(combos[a], combos[b]);
}

bool Realification::is_member(const RealElement& f) const {
  std::call_once(order_once_, [this] { build_order(); });
  auto sum = [&](const std::vector<std::size_t>& idx) {
    ExtRational s;
    for (std::size_t i : idx) s += f.values[i];
    return s;
  };
  for (const auto& [lhs, rhs] : order_pairs_)
    if (sum(lhs) > sum(rhs)) return false;
  return true;
}

bool Realification::way_below(const RealElement& f, const RealElement& g) const {
  return all_zero(f) || triangle_lhd(f, g);
}

std::vector<RealElement> Realification::rapid_chain(const RealElement& f, unsigned N) const {
  std::vector<RealElement> out;
  Rational p = 1;
  for (unsigned n = 1; n <= N; ++n) {
    p /= 2;
    out.push_back(scale(1 - p, f));
  }
  return out;
}

std::size_t Realification::dini_index(const RealElement& f, const std::vector<RealElement>& chain,
                                      const RealElement& g, const Rational& eps) const {
  if (eps <= 0) throw Error(ErrorCode::HypothesisFailed, "eps must be positive");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!leq(chain[i], chain[i + 1]))
      throw Error(ErrorCode::NotIncreasing, "chain drops after position " + std::to_string(i), std::to_string(i));
  const RealElement eg = scale(eps, g);
  for (std::size_t n = 0; n < chain.size(); ++n)
    if (leq(f, add(chain[n], eg))) return n + 1;
  throw Error(ErrorCode::NoIndexWithinChain, "no chain term within eps*g of f (chain length " +
                                                 std::to_string(chain.size()) + ")");
}

RealElement Realification::complement(const RealElement& f, const RealElement& g, bool proportional) const {
  const auto rho = lhd_ratio(f, g);
  if (!rho || !triangle_lhd(f, g))
    throw Error(ErrorCode::HypothesisFailed, "complement needs f triangle g", f.term + " / " + g.term);
  RealElement h;
  if (proportional) {
    const Rational eps = (1 - *rho) / 2;
    const RealElement inner = complement(f, scale(1 - eps, g), false);
    h = add(inner, scale(eps, g));
  } else {
    h.values.resize(g.values.size());
    for (std::size_t p = 0; p < g.values.size(); ++p)
      h.values[p] = g.values[p].is_inf() ? ExtRational::inf() : difference(g.values[p], f.values[p]);
  }
  h.term = "diff[" + g.term + "," + f.term + "]";
  if (!(add(f, h) == g)) throw Error(ErrorCode::HypothesisFailed, "f + h differs from g");
  if (!is_member(h))
    throw Error(ErrorCode::NotMonotone, "g - f is not monotone on the cone", f.term + " / " + g.term);
  return h;
}

std::pair<RealElement, RealElement> Realification::almost_algebraic_split(const RealElement& fp, const RealElement& f,
                                                                          const RealElement& g) const {
  if (!way_below(fp, f)) throw Error(ErrorCode::HypothesisFailed, "split needs f' << f", fp.term + " / " + f.term);
  if (!leq(f, g)) throw Error(ErrorCode::HypothesisFailed, "split needs f <= g", f.term + " / " + g.term);
  std::vector<RealElement> candidates;
  const auto rho = lhd_ratio(fp, f);
  const Rational theta = rho && !all_zero(fp) ? Rational((1 + *rho) / 2) : Rational(1, 2);
  candidates.push_back(scale(theta, f));
  if (!all_zero(fp)) {
    // c f' sits strictly between f' and f once c rho < 1
    const auto r = lhd_ratio(fp, f);
    candidates.push_back(scale(r && *r > 0 ? Rational((1 + 1 / *r) / 2) : Rational(2), fp));
  }
  candidates.push_back(zero());
  std::optional<Error> last;
  for (const auto& h : candidates) {
    if (!way_below(fp, h) || !way_below(h, f)) continue;
    try {
      RealElement hp = complement(h, g);
      return {h, hp};
    } catch (const Error& e) {
      last = e;
    }
  }
  // fall back to the span grid just above f'
  const std::vector<RealElement> lo{fp};
  for (const auto& h : grid_pool(2, derived_bound({&lo}) + 1)) {
    if (!way_below(fp, h) || !way_below(h, f)) continue;
    try {
      RealElement hp = complement(h, g);
      return {h, hp};
    } catch (const Error& e) {
      last = e;
    }
  }
  if (last) throw *last;
  throw Error(ErrorCode::HypothesisFailed, "no h with f' << h << f among the candidates");
}

// ------------------------------------------------------------- grid pool

Realification::Pool& Realification::pool(std::uint64_t denominator, std::uint64_t value_bound) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(denominator, value_bound);
  if (auto it = pools_.find(key); it != pools_.end()) return *it->second;
  constexpr std::size_t kCap = 200000;
  auto p = std::make_unique<Pool>();
  std::map<std::vector<ExtRational>, std::size_t> seen;
  std::vector<RealElement> cur{zero()};
  seen[cur[0].values] = 0;
  for (const auto& g : generators_) {
    std::vector<RealElement> options;
    const RealElement gh = embed(g);
    for (std::uint64_t a = 1; a <= denominator * value_bound; ++a)
      options.push_back(scale(Rational(static_cast<unsigned long>(a), static_cast<unsigned long>(denominator)), gh));
    if (!model_.is_finite()) options.push_back(embed(model_.infinity_multiple(g)));
    std::vector<RealElement> next = cur;
    for (const auto& c : cur)
      for (const auto& o : options) {
        RealElement s = all_zero(c) ? o : add(c, o);
        if (seen.emplace(s.values, seen.size()).second) next.push_back(std::move(s));
        if (next.size() > kCap) throw Error(ErrorCode::ModelTooLarge, "candidate grid exceeds " + std::to_string(kCap));
      }
    cur = std::move(next);
  }
  p->items = std::move(cur);
  auto& ref = *p;
  pools_[key] = std::move(p);
  return ref;
}

const std::vector<RealElement>& Realification::grid_pool(std::uint64_t denominator, std::uint64_t value_bound) const {
  return pool(denominator, value_bound).items;
}

const boost::dynamic_bitset<>& Realification::below_bits(Pool& p, const RealElement& bound) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = p.below_cache.find(bound.values);
  if (it != p.below_cache.end()) return it->second;
  boost::dynamic_bitset<> bits(p.items.size());
  for (std::size_t i = 0; i < p.items.size(); ++i)
    if (leq(p.items[i], bound)) bits.set(i);
  return p.below_cache.emplace(bound.values, std::move(bits)).first->second;
}

std::uint64_t Realification::derived_bound(std::initializer_list<const std::vector<RealElement>*> groups) const {
  Rational mx = 1;
  for (const auto* grp : groups)
    for (const auto& e : *grp)
      for (const auto& v : e.values)
        if (v.is_finite()) mx = std::max(mx, v.value());
  mpz_class c = mx.get_num() / mx.get_den();
  if (Rational(c) < mx) c += 1;
  return c.get_ui();
}

// ------------------------------------------------------------ refinement

bool Realification::refinement_valid(const std::vector<RealElement>& fp, const std::vector<RealElement>& f,
                                     const std::vector<RealElement>& g,
                                     const std::vector<std::vector<RealElement>>& h) const {
  const std::size_t n = f.size(), m = g.size();
  if (h.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (h[i].size() != m) return false;
    RealElement row = zero();
    for (std::size_t j = 0; j < m; ++j) row = add(row, h[i][j]);
    if (!way_below(fp[i], row) || !leq(row, f[i])) return false;
  }
  for (std::size_t j = 0; j < m; ++j) {
    RealElement col = zero();
    for (std::size_t i = 0; i < n; ++i) col = add(col, h[i][j]);
    if (!leq(col, g[j])) return false;
  }
  return true;
}

RefinementResult Realification::refinement_witness(const std::vector<RealElement>& fp,
                                                   const std::vector<RealElement>& f,
                                                   const std::vector<RealElement>& g, const GridOptions& opts) const {
  const std::size_t n = f.size(), m = g.size();
  if (n == 0 || m == 0 || n > 3 || m > 3 || fp.size() != n)
    throw Error(ErrorCode::HypothesisFailed, "refinement needs 1 <= n, m <= 3 and one f' per f");
  RealElement sf = zero(), sg = zero();
  for (const auto& x : f) sf = add(sf, x);
  for (const auto& x : g) sg = add(sg, x);
  if (!leq(sf, sg)) throw Error(ErrorCode::HypothesisFailed, "sum f exceeds sum g");
  for (std::size_t i = 0; i < n; ++i)
    if (!way_below(fp[i], f[i]))
      throw Error(ErrorCode::HypothesisFailed, "f'_" + std::to_string(i) + " is not << f_" + std::to_string(i));

  const std::uint64_t D = std::max<std::uint64_t>(1, opts.denominator);
  const std::uint64_t B = opts.value_bound ? opts.value_bound : derived_bound({&f, &g, &fp});
  Pool& p = pool(D, B);
  const std::size_t R = dimension();

  // candidates per entry, nearest to the proportional split f_i g_j / sum g first
  std::vector<std::vector<std::size_t>> cands(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto bits = below_bits(p, f[i]) & below_bits(p, g[j]);
      std::vector<std::optional<ExtRational>> target(R);
      for (std::size_t r = 0; r < R; ++r) {
        const auto &a = f[i].values[r], &b = g[j].values[r], &G = sg.values[r];
        if (a.is_inf() || b.is_inf() || G.is_inf()) continue;
        target[r] = G.is_zero() ? ExtRational() : ExtRational(a.value() * b.value() / G.value());
      }
      struct Keyed {
        std::size_t penalty;
        ExtRational dist;
        std::size_t idx;
      };
      std::vector<Keyed> keyed;
      for (auto idx = bits.find_first(); idx != boost::dynamic_bitset<>::npos; idx = bits.find_next(idx)) {
        Keyed k{0, ExtRational(), idx};
        for (std::size_t r = 0; r < R; ++r) {
          if (!target[r]) continue;
          const auto& v = p.items[idx].values[r];
          if (v.is_inf())
            ++k.penalty;
          else
            k.dist += abs_diff(v, *target[r]);
        }
        keyed.push_back(std::move(k));
      }
      std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
        if (a.penalty != b.penalty) return a.penalty < b.penalty;
        if (a.dist != b.dist) return a.dist < b.dist;
        return a.idx < b.idx;
      });
      for (const auto& k : keyed) cands[i * m + j].push_back(k.idx);
    }

  RefinementResult res;
  std::vector<RealElement> rows(n, zero()), cols(m, zero());
  std::vector<std::size_t> choice(n * m);
  std::function<bool(std::size_t)> dfs = [&](std::size_t e) -> bool {
    if (e == n * m) return true;
    const std::size_t i = e / m, j = e % m;
    for (std::size_t idx : cands[e]) {
      if (++res.nodes > opts.node_cap)
        throw Error(ErrorCode::SearchBoundExceeded, "refinement search exceeded " + std::to_string(opts.node_cap) + " nodes");
      const RealElement& c = p.items[idx];
      RealElement row = add(rows[i], c);
      if (!leq(row, f[i])) continue;
      if (j + 1 == m && !way_below(fp[i], row)) continue;
      RealElement col = add(cols[j], c);
      if (!leq(col, g[j])) continue;
      std::swap(rows[i], row);
      std::swap(cols[j], col);
      choice[e] = idx;
      if (dfs(e + 1)) return true;
      std::swap(rows[i], row);
      std::swap(cols[j], col);
    }
    return false;
  };
  if (dfs(0)) {
    res.status = RefinementStatus::Found;
    res.h.assign(n, std::vector<RealElement>(m));
    for (std::size_t e = 0; e < n * m; ++e) res.h[e / m][e % m] = p.items[choice[e]];
  }
  return res;
}

// ---------------------------------------------------------- interpolation

RealElement Realification::interpolation_meet(const RealElement& f, const RealElement& g,
                                              const GridOptions& opts) const {
  const std::vector<RealElement> in{f, g};
  const std::uint64_t D = std::max<std::uint64_t>(1, opts.denominator);
  const std::uint64_t B = opts.value_bound ? opts.value_bound : derived_bound({&in});
  Pool& p = pool(D, B);
  const auto bits = below_bits(p, f) & below_bits(p, g);
  std::vector<ExtRational> mx(dimension());
  for (auto i = bits.find_first(); i != boost::dynamic_bitset<>::npos; i = bits.find_next(i))
    for (std::size_t r = 0; r < mx.size(); ++r) mx[r] = max(mx[r], p.items[i].values[r]);
  for (auto i = bits.find_first(); i != boost::dynamic_bitset<>::npos; i = bits.find_next(i))
    if (p.items[i].values == mx) {
      RealElement out = p.items[i];
      out.term = "meet[" + f.term + "," + g.term + "]";
      return out;
    }
  throw Error(ErrorCode::GridExhausted, "grid has no greatest common lower bound", f.term + " / " + g.term);
}

InterpolationReport Realification::check_interpolation(const RealElement& f, const std::vector<RealElement>& g_chain,
                                                       const RealElement& h, const GridOptions& opts) const {
  InterpolationReport rep;
  if (g_chain.empty()) throw Error(ErrorCode::HypothesisFailed, "empty chain");
  std::vector<RealElement> meets;
  for (const auto& gn : g_chain) meets.push_back(interpolation_meet(f, gn, opts));
  rep.sup_compatible = sup_increasing(meets) == interpolation_meet(f, sup_increasing(g_chain), opts);
  const RealElement& g = g_chain.front();
  rep.translation = add(interpolation_meet(f, g, opts), h) == interpolation_meet(add(f, h), add(g, h), opts);
  rep.subadditive =
      leq(interpolation_meet(add(f, g), h, opts), add(interpolation_meet(f, h, opts), interpolation_meet(g, h, opts)));
  return rep;
}

// ------------------------------------------------------------ cone check

ConeIsoReport Realification::cone_iso_check(std::uint64_t seed, std::size_t samples) const {
  ConeIsoReport rep;
  const auto pts = check_points(model_);
  std::vector<RealElement> hats;
  for (const auto& g : pts) hats.push_back(embed(g));
  rep.generators = hats.size();
  const auto& reps = cone_.representatives;

  auto profile = [&](std::size_t p) {
    std::vector<ExtRational> v;
    for (const auto& h : hats) v.push_back(h.values[p]);
    return v;
  };
  for (std::size_t p = 0; p < reps.size() && rep.representatives_distinct; ++p)
    for (std::size_t q = p + 1; q < reps.size(); ++q)
      if (profile(p) == profile(q)) {
        rep.representatives_distinct = false;
        rep.witness = "representatives " + std::to_string(p) + " and " + std::to_string(q) + " agree on generators";
        break;
      }

  const auto grid = model_.is_finite() ? model_.elements() : model_.grid(1);
  for (const auto& a : grid) {
    for (const auto& b : grid)
      if (!(embed(model_.add(a, b)) == add(embed(a), embed(b)))) {
        rep.embedding_additive = false;
        rep.witness = "embedding not additive at (" + a.to_string() + "," + b.to_string() + ")";
        break;
      }
    if (!rep.embedding_additive) break;
  }

  std::mt19937_64 rng(seed ^ 0x150);
  std::uniform_int_distribution<int> w(0, 2);
  for (std::size_t s = 0; s < samples; ++s) {
    ++rep.samples;
    Functional phi = zero_functional(model_);
    std::vector<int> weights(reps.size());
    for (std::size_t r = 0; r < reps.size(); ++r) {
      weights[r] = w(rng);
      if (weights[r]) phi = functional_add(model_, phi, functional_scale(model_, weights[r], reps[r]));
    }
    // values on the generating RealElements are the weighted sums
    for (std::size_t k = 0; k < hats.size(); ++k) {
      ExtRational sum;
      for (std::size_t r = 0; r < reps.size(); ++r)
        if (weights[r]) sum += ExtRational(weights[r]) * hats[k].values[r];
      if (sum != evaluate(model_, phi, pts[k])) {
        rep.extensions_unique = false;
        rep.witness = "sample " + std::to_string(s) + " is not linear on generator " + pts[k].to_string();
      }
    }
    // determined by its generator values
    Functional rebuilt;
    if (model_.is_finite()) {
      std::vector<ExtRational> v;
      for (const auto& e : model_.elements()) v.push_back(evaluate(model_, phi, e));
      rebuilt = from_values(model_, std::move(v));
    } else {
      std::vector<ExtRational> v;
      for (const auto& g : generators_) v.push_back(evaluate(model_, phi, g));
      rebuilt = from_generator_values(model_, v);
    }
    if (!(rebuilt == phi)) {
      rep.extensions_unique = false;
      rep.witness = "sample " + std::to_string(s) + " not determined by generator values";
    }
    // lies in the cone of its ideal
    const auto it = std::find(cone_.ideals.begin(), cone_.ideals.end(), phi.ideal);
    if (it == cone_.ideals.end()) {
      rep.combinations_in_cone = false;
      rep.witness = "sample " + std::to_string(s) + " has a support that is not an ideal";
      continue;
    }
    const std::size_t ii = static_cast<std::size_t>(it - cone_.ideals.begin());
    std::vector<std::size_t> vars;
    finite_part_system(model_, phi.ideal, &vars);
    auto finite_part = [&](const Functional& x) {
      Vec v;
      for (std::size_t var : vars) {
        const ExtRational e = model_.is_finite() ? x.values[var] : evaluate(model_, x, generators_[var]);
        v.push_back(e.value());
      }
      return v;
    };
    std::vector<Vec> gens;
    for (const auto& r : cone_.rays[ii]) gens.push_back(finite_part(r));
    const Vec target = finite_part(phi);
    const bool inside = gens.empty() ? std::all_of(target.begin(), target.end(), [](const Rational& q) { return sgn(q) == 0; })
                                     : conic_combination(gens, target).has_value();
    if (!inside) {
      rep.combinations_in_cone = false;
      rep.witness = "sample " + std::to_string(s) + " lies outside the cone of its ideal";
    }
  }

  for (const auto& h : hats)
    for (Rational q : {Rational(1, 2), Rational(1), Rational(2)}) {
      const RealElement s = scale(q, h);
      for (std::size_t r = 0; r < s.values.size(); ++r)
        if (s.values[r] != ExtRational(q) * h.values[r]) rep.idempotent = false;
      if (!(scale(1 / q, s) == h)) rep.idempotent = false;
    }
  return rep;
}

CancellationResult Realification::cancellation_check(const RealElement& f, const RealElement& g,
                                                     const RealElement& h, std::uint64_t bound) const {
  CancellationResult res;
  bool found = false;
  for (std::uint64_t n = 0; n <= bound && !found; ++n) {
    const RealElement ng = n == 0 ? zero() : scale(Rational(static_cast<unsigned long>(n)), g);
    if (leq(h, ng)) {
      res.n = n;
      found = true;
    }
  }
  if (!found)
    throw Error(ErrorCode::ProportionalityUnverified, "no n <= " + std::to_string(bound) + " with h <= n*g",
                h.term + " / " + g.term);
  res.premise = leq(add(f, h), add(g, h));
  res.conclusion = leq(f, g);
  return res;
}

nlohmann::json Realification::to_json(const RealElement& f) const {
  nlohmann::json vals = nlohmann::json::array();
  for (const auto& v : f.values) vals.push_back(v.to_string());
  return {{"term", f.term}, {"values", vals}};
}

// ---------------------------------------------------------------- halving

std::optional<Element> simplicity_witness(const CuModel& m) {
  const auto top = m.top();
  if (!m.is_finite()) {
    if (m.dim() == 1) return std::nullopt;
    return m.generators().front();
  }
  if (!top) return m.elements().size() > 1 ? std::optional<Element>(m.element(1)) : std::nullopt;
  for (const auto& s : m.elements())
    if (s != m.zero() && m.infinity_multiple(s) != *top) return s;
  return std::nullopt;
}

HalvingResult halving(const CuModel& m, const Element& x) {
  m.require_member(x);
  if (auto w = simplicity_witness(m))
    throw Error(ErrorCode::NotSimple, "INF*" + w->to_string() + " is not the largest element", w->to_string());
  if (x == m.zero()) throw Error(ErrorCode::HypothesisFailed, "x must be nonzero");
  HalvingResult res;
  if (!m.is_finite()) {
    // N-bar: z = 1 whenever x >= 2; x = 1 is the chain case with e = 1
    if (x.coords[0] >= ExtNat(2)) {
      res.z = m.element({ExtNat(1)});
    } else {
      res.chain_case = true;
      res.e = m.element({ExtNat(1)});
    }
    return res;
  }
  const auto els = m.elements();
  for (const auto& z : els)
    if (z != m.zero() && m.leq(m.add(z, z), x)) {
      res.z = z;
      return res;
    }
  res.e = chain_generator(m);
  if (!res.e)
    throw Error(ErrorCode::HypothesisFailed,
                "no halving witness for " + x.to_string() + " and the model is not a chain", x.to_string());
  res.chain_case = true;
  return res;
}

std::optional<Element> chain_generator(const CuModel& m) {
  if (!m.is_finite()) {
    if (m.dim() != 1) return std::nullopt;
    return m.element({ExtNat(1)});
  }
  const auto top = m.top();
  if (!top) return std::nullopt;
  const auto els = m.elements();
  std::optional<Element> e;
  for (const auto& c : els) {
    if (c == m.zero()) continue;
    bool minimum = true;
    for (const auto& d : els)
      if (d != m.zero() && !m.leq(c, d)) minimum = false;
    if (minimum) e = c;
  }
  if (!e) return std::nullopt;
  for (const auto& a : els)
    for (const auto& b : els) {
      if (!m.leq(a, b) && !m.leq(b, a)) return std::nullopt;
      if (a != m.zero() && b != m.zero() && m.leq(m.add(a, b), *e)) return std::nullopt;
    }
  for (const auto& a : els) {
    bool multiple = a == *top;
    for (std::uint64_t k = 0; k <= els.size() && !multiple; ++k) multiple = m.nat_multiple(k, *e) == a;
    if (!multiple) return std::nullopt;
  }
  return e;
}

}  // namespace cu
