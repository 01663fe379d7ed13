// Copyright 2026 The bisol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bisol/qp_solver.hpp"

namespace bisol::qp {

namespace {

using Form11 = std::array<std::array<long, 2>, 2>;

BiForm22<mpz_class> product(const Form11& u, const Form11& v) {
  BiForm22<mpz_class> out;
  for (auto& row : out.a) row.fill(0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out.a[i + k][j + l] += u[i][j] * v[k][l];
  return out;
}

BiForm22<mpz_class> reduction(RankCase c, const std::array<unsigned long, 3>& f) {
  if (c == RankCase::Case4) {
    const Form11 w{{{0, 1}, {-1, 0}}};  // X0 Y1 - X1 Y0
    return product(w, w);
  }
  const Form11 z0{{{1, 0}, {0, 0}}};  // X0 Y0
  const Form11 z1{{{0, 1}, {1, 0}}};  // X0 Y1 + X1 Y0
  const auto a = product(z0, z0), b = product(z0, z1), d = product(z1, z1);
  BiForm22<mpz_class> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out.a[i][j] = a.a[i][j] * f[0] + b.a[i][j] * f[1] + d.a[i][j] * f[2];
  return out;
}

int rank_mod(std::vector<std::vector<mpz_class>> m, const mpz_class& p) {
  const size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  for (auto& row : m)
    for (auto& x : row) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), m[rank][c].get_mpz_t(), p.get_mpz_t());
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const mpz_class k = m[r][c] * inv;
      for (size_t j = c; j < cols; ++j) {
        m[r][j] -= k * m[rank][j];
        mpz_fdiv_r(m[r][j].get_mpz_t(), m[r][j].get_mpz_t(), p.get_mpz_t());
      }
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace

std::vector<std::array<unsigned long, 3>> irreducible_quadratics(unsigned long p) {
  std::vector<std::array<unsigned long, 3>> out;
  for (unsigned long b = 0; b < p; ++b)
    for (unsigned long c = 1; c < p; ++c) {
      bool root = false;
      for (unsigned long x = 0; x < p && !root; ++x) root = (x * x + b * x + c) % p == 0;
      if (!root) out.push_back({1, b, c});
    }
  return out;
}

int phi_derivative_rank(RankCase c, unsigned long p, std::array<unsigned long, 3> f) {
  if (c == RankCase::Case1iii && f == std::array<unsigned long, 3>{}) {
    const auto all = irreducible_quadratics(p);
    f = all.front();
  }
  const BiForm22<mpz_class> base = reduction(c, f);
  const auto g0 = phi(base);

  // Phi(F + E) = Phi(F) + D(E) + (0, -E0 E2), so each column of the
  // derivative is read off from Phi at F + E minus the two known terms.
  std::vector<std::vector<mpz_class>> m(8, std::vector<mpz_class>(9));
  for (int k = 0; k < 9; ++k) {
    BiForm22<mpz_class> E;
    for (auto& row : E.a) row.fill(0);
    E.a[k / 3][k % 3] = 1;
    BiForm22<mpz_class> sum = base;
    sum.a[k / 3][k % 3] += 1;
    const auto g = phi(sum);
    const auto q = phi(E);
    for (int i = 0; i < 3; ++i) m[i][k] = g.g2[i] - g0.g2[i] - q.g2[i] + E.a[i][1];
    for (int i = 0; i < 5; ++i) m[3 + i][k] = g.g4[i] - g0.g4[i] - q.g4[i];
  }
  return rank_mod(std::move(m), mpz_class(p));
}

}  // namespace bisol::qp
