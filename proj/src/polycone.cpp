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

#include "cu/polycone.hpp"

#include <algorithm>

#include <boost/dynamic_bitset.hpp>

namespace cu {

Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

void normalize_ray(Vec& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) {
      const Rational lead = x;
      for (auto& y : v) y /= lead;
      return;
    }
  }
}

namespace {

using Bits = boost::dynamic_bitset<>;

struct Ray {
  Vec v;
  Bits zeros;  // indices of tight constraints
};

bool lex_greater(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c > 0;
  }
  return false;
}

void apply(std::vector<Ray>& rays, const Vec& a, bool equality, std::size_t index, std::size_t dim) {
  std::vector<int> sign(rays.size());
  std::vector<Rational> val(rays.size());
  for (std::size_t r = 0; r < rays.size(); ++r) {
    val[r] = dot(a, rays[r].v);
    sign[r] = sgn(val[r]);
  }
  std::vector<Ray> next;
  for (std::size_t r = 0; r < rays.size(); ++r) {
    if (sign[r] == 0) {
      Ray z = rays[r];
      z.zeros.set(index);
      next.push_back(std::move(z));
    } else if (sign[r] > 0 && !equality) {
      next.push_back(rays[r]);
    }
  }
  const std::size_t need = dim >= 2 ? dim - 2 : 0;
  for (std::size_t p = 0; p < rays.size(); ++p) {
    if (sign[p] <= 0) continue;
    for (std::size_t n = 0; n < rays.size(); ++n) {
      if (sign[n] >= 0) continue;
      Bits common = rays[p].zeros & rays[n].zeros;
      if (common.count() < need) continue;
      bool adjacent = true;
      for (std::size_t o = 0; o < rays.size() && adjacent; ++o)
        if (o != p && o != n && common.is_subset_of(rays[o].zeros)) adjacent = false;
      if (!adjacent) continue;
      Ray c;
      c.v.resize(dim);
      for (std::size_t i = 0; i < dim; ++i) c.v[i] = val[p] * rays[n].v[i] - val[n] * rays[p].v[i];
      normalize_ray(c.v);
      c.zeros = common;
      c.zeros.set(index);
      next.push_back(std::move(c));
    }
  }
  rays = std::move(next);
}

}  // namespace

std::vector<Vec> extreme_rays(const HCone& cone) {
  const std::size_t d = cone.dim;
  if (d == 0) return {};
  const std::size_t total = d + cone.equalities.size() + cone.inequalities.size();
  std::vector<Ray> rays;
  for (std::size_t i = 0; i < d; ++i) {
    Ray r;
    r.v.assign(d, Rational(0));
    r.v[i] = 1;
    r.zeros.resize(total);
    for (std::size_t j = 0; j < d; ++j)
      if (j != i) r.zeros.set(j);
    rays.push_back(std::move(r));
  }
  std::size_t index = d;
  for (const auto& e : cone.equalities) apply(rays, e, true, index++, d);
  for (const auto& g : cone.inequalities) apply(rays, g, false, index++, d);

  std::vector<Vec> out;
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end(), lex_greater);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Vec> conic_combination(const std::vector<Vec>& gens, const Vec& x) {
  const std::size_t m = x.size();
  const std::size_t n = gens.size();
  const std::size_t cols = n + m + 1;  // gens, artificials, rhs
  std::vector<Vec> t(m + 1, Vec(cols, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = sgn(x[r]) < 0;
    for (std::size_t j = 0; j < n; ++j) t[r][j] = flip ? Rational(-gens[j][r]) : gens[j][r];
    t[r][n + r] = 1;
    t[r][cols - 1] = flip ? Rational(-x[r]) : x[r];
    basis[r] = n + r;
  }
  // objective row: reduced costs of sum of artificials
  for (std::size_t j = 0; j < cols; ++j) {
    if (j >= n && j < n + m) continue;
    Rational s = 0;
    for (std::size_t r = 0; r < m; ++r) s += t[r][j];
    t[m][j] = j == cols - 1 ? s : Rational(-s);
  }
  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j)
      if (sgn(t[m][j]) < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (sgn(t[r][enter]) <= 0) continue;
      Rational ratio = t[r][cols - 1] / t[r][enter];
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen for phase one
    const Rational piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave || sgn(t[r][enter]) == 0) continue;
      const Rational f = t[r][enter];
      for (std::size_t j = 0; j < cols; ++j)
        if (sgn(t[leave][j]) != 0) t[r][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  // remaining infeasibility = sum of artificial basics
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] >= n && sgn(t[r][cols - 1]) != 0) return std::nullopt;
  Vec c(n, Rational(0));
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] < n) c[basis[r]] = t[r][cols - 1];
  return c;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Vec>& a, std::size_t dim) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < dim && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && sgn(a[p][col]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const Rational lead = a[row][col];
    for (auto& v : a[row]) v /= lead;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || sgn(a[r][col]) == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < dim; ++j) a[r][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<Vec> nullspace(const std::vector<Vec>& rows, std::size_t dim) {
  std::vector<Vec> a = rows;
  const auto pivots = rref(a, dim);
  std::vector<bool> is_pivot(dim, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < dim; ++f) {
    if (is_pivot[f]) continue;
    Vec v(dim, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(std::vector<Vec> rows, std::size_t dim) { return rref(rows, dim).size(); }

}  // namespace cu
