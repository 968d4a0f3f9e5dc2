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

#include "cu/fixtures.hpp"

namespace cu::fixtures {

namespace {

using Table = std::vector<std::vector<std::uint32_t>>;
using Order = std::vector<std::vector<bool>>;

Order total_order(std::size_t n) {
  Order leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) leq[i][j] = true;
  return leq;
}

}  // namespace

CuModel trivial() { return CuModel::finite_table({{0}}, {{true}}); }

CuModel two_point() { return truncated_chain(0); }

CuModel truncated_chain(std::uint32_t m) {
  const std::uint32_t n = m + 2;
  const std::uint32_t inf = m + 1;
  Table add(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) add[a][b] = (a == inf || b == inf || a + b > m) ? inf : a + b;
  return CuModel::finite_table(std::move(add), total_order(n));
}

CuModel idempotent_chain(std::uint32_t m) {
  const std::uint32_t n = m + 1;
  Table add(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) add[a][b] = std::max(a, b);
  return CuModel::finite_table(std::move(add), total_order(n));
}

CuModel product(const CuModel& a, const CuModel& b) {
  const auto na = static_cast<std::uint32_t>(a.size());
  const auto nb = static_cast<std::uint32_t>(b.size());
  const std::uint32_t n = na * nb;
  Table add(n, std::vector<std::uint32_t>(n));
  Order leq(n, std::vector<bool>(n));
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      const std::uint32_t xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
      add[x][y] = a.add_table()[xa][ya] * nb + b.add_table()[xb][yb];
      leq[x][y] = a.leq_table()[xa][ya] && b.leq_table()[xb][yb];
    }
  return CuModel::finite_table(std::move(add), std::move(leq));
}

CuModel broken_o6() {
  // 0, a=1, b=2, t=3
  Table add = {{0, 1, 2, 3}, {1, 3, 3, 3}, {2, 3, 3, 3}, {3, 3, 3, 3}};
  Order leq = {{true, true, true, true}, {false, true, false, true}, {false, false, true, true},
               {false, false, false, true}};
  return CuModel::finite_table(std::move(add), std::move(leq));
}

std::vector<Named> builtin_finite() {
  std::vector<Named> out;
  out.push_back({"trivial", trivial()});
  out.push_back({"two_point", two_point()});
  out.push_back({"trunc1", truncated_chain(1)});
  out.push_back({"trunc2", truncated_chain(2)});
  out.push_back({"trunc3", truncated_chain(3)});
  out.push_back({"trunc8", truncated_chain(8)});
  out.push_back({"maxchain2", idempotent_chain(2)});
  out.push_back({"maxchain3", idempotent_chain(3)});
  out.push_back({"two_point^2", product(two_point(), two_point())});
  out.push_back({"two_point*trunc1", product(two_point(), truncated_chain(1))});
  out.push_back({"maxchain2*two_point", product(idempotent_chain(2), two_point())});
  out.push_back({"trunc1^2", product(truncated_chain(1), truncated_chain(1))});
  return out;
}

std::vector<Named> builtin_models() {
  auto out = builtin_finite();
  for (std::size_t k = 1; k <= 3; ++k) out.push_back({"nbar" + std::to_string(k), CuModel::nbar_power(k)});
  for (std::size_t k = 1; k <= 4; ++k) out.push_back({"chain" + std::to_string(k), CuModel::monotone_chain(k)});
  return out;
}

}  // namespace cu::fixtures
