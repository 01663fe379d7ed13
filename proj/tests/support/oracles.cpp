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

#include "oracles.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <vector>

namespace oracle {

namespace {

mpz_class pw(const mpz_class& b, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

mpz_class mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// v_p(x) for x mod p^n; n when x == 0 mod p^n.
int val(const mpz_class& x, unsigned long p, int n) {
  mpz_class y = x;
  for (int v = 0; v < n; ++v) {
    if (mpz_divisible_ui_p(y.get_mpz_t(), p) == 0) return v;
    y /= p;
  }
  return n;
}

// Horner evaluation; c[k] multiplies x^k.
mpz_class horner(const std::vector<long>& c, unsigned long x) {
  mpz_class acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

struct Point {
  mpz_class x, y;
  bool x_affine, y_affine;  // (x : 1) when affine, else (1 : x) with p | x
};

// Monomials X0^(2-i) X1^i at the point and their derivatives along the
// free coordinate.
void monomials(const mpz_class& t, bool affine, std::array<mpz_class, 3>& m,
               std::array<mpz_class, 3>& d) {
  if (affine) {  // (t, 1)
    m = {t * t, t, 1};
    d = {2 * t, 1, 0};
  } else {  // (1, t)
    m = {1, t, t * t};
    d = {0, 1, 2 * t};
  }
}

}  // namespace

Verdict brute_force_qp(const IntForm& F0, unsigned long p, int n, std::size_t cap) {
  const mpz_class pn = pw(p, n);
  IntForm F;
  int content = n;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      F.a[i][j] = mod(F0.a[i][j], pn);
      content = std::min(content, val(F.a[i][j], p, n));
    }
  if (content == n) return Verdict::Undetermined;
  const mpz_class pc = pw(p, content);
  for (auto& row : F.a)
    for (auto& c : row) c /= pc;
  const int m = n - content;
  const mpz_class pm = pw(p, m);

  auto eval = [&](const Point& pt, mpz_class& f, mpz_class& fx, mpz_class& fy) {
    std::array<mpz_class, 3> mx, dx, my, dy;
    monomials(pt.x, pt.x_affine, mx, dx);
    monomials(pt.y, pt.y_affine, my, dy);
    f = fx = fy = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        f += F.a[i][j] * mx[i] * my[j];
        fx += F.a[i][j] * dx[i] * my[j];
        fy += F.a[i][j] * mx[i] * dy[j];
      }
    f = mod(f, pm);
    fx = mod(fx, pm);
    fy = mod(fy, pm);
  };

  std::vector<Point> level;
  for (unsigned long s = 0; s <= p; ++s)
    for (unsigned long t = 0; t <= p; ++t) {
      Point pt{s < p ? mpz_class(s) : mpz_class(0), t < p ? mpz_class(t) : mpz_class(0), s < p,
               t < p};
      mpz_class f, fx, fy;
      eval(pt, f, fx, fy);
      if (mpz_divisible_ui_p(f.get_mpz_t(), p)) level.push_back(pt);
    }

  mpz_class pk = p;
  for (int k = 1;; ++k) {
    if (level.empty()) return Verdict::Insoluble;
    for (const Point& pt : level) {
      mpz_class f, fx, fy;
      eval(pt, f, fx, fy);
      const int e = std::min(val(fx, p, m), val(fy, p, m));
      if (2 * e < m && val(f, p, m) > 2 * e) return Verdict::Soluble;
    }
    if (k + 1 > m) return Verdict::Undetermined;
    const mpz_class pk1 = pk * p;
    std::vector<Point> next;
    for (const Point& pt : level)
      for (unsigned long s = 0; s < p; ++s)
        for (unsigned long t = 0; t < p; ++t) {
          Point q{pt.x + pk * s, pt.y + pk * t, pt.x_affine, pt.y_affine};
          mpz_class f, fx, fy;
          eval(q, f, fx, fy);
          if (mpz_divisible_p(f.get_mpz_t(), pk1.get_mpz_t())) {
            next.push_back(std::move(q));
            if (next.size() > cap) return Verdict::Undetermined;
          }
        }
    level = std::move(next);
    pk = pk1;
  }
}

IntForm random_padic_form(std::uint64_t seed, std::uint64_t index, unsigned long p, int n) {
  std::seed_seq sq{seed, index, std::uint64_t{p}};
  std::mt19937_64 g(sq);
  const mpz_class pn = pw(p, n);
  gmp_randclass r(gmp_randinit_default);
  r.seed(static_cast<unsigned long>(g()));
  IntForm F;
  for (auto& row : F.a)
    for (auto& c : row) {
      int v = 0;
      while (v < n && (g() & 1)) ++v;
      c = mod(r.get_z_range(pn) * pw(p, v), pn);
    }
  return F;
}

IntForm random_singular_reduction_form(std::uint64_t seed, std::uint64_t index, unsigned long p,
                                       int n) {
  std::seed_seq sq{seed, index, std::uint64_t{p}, std::uint64_t{7}};
  std::mt19937_64 g(sq);
  const long P = static_cast<long>(p);
  // Irreducible quadratic X0^2 + b X0 X1 + c X1^2 mod p.
  long b = 0, c = 0;
  for (bool found = false; !found;) {
    b = static_cast<long>(g() % p);
    c = static_cast<long>(g() % p);
    found = c != 0;
    for (long t = 0; t < P && found; ++t) found = (t * t + b * t + c) % P != 0;
  }
  const std::array<long, 3> f{1, b, c};
  IntForm R;
  switch (g() % 6) {
    case 0:  // (2,0)(0,2)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) R.a[i][j] = f[i] * f[j];
      break;
    case 1:  // (2,0)(0,1)^2
      for (int i = 0; i < 3; ++i) R.a[i][0] = f[i];
      break;
    case 2:  // (1,1)^2 = X0^2 Y1^2 - 2 X0 X1 Y0 Y1 + X1^2 Y0^2
      R.a[0][2] = 1;
      R.a[1][1] = -2;
      R.a[2][0] = 1;
      break;
    case 3:  // (1,0)^2 (0,1)^2
      R.a[0][0] = 1;
      break;
    case 4:  // f(X0 Y0, X0 Y1 + X1 Y0)
      R.a[0][0] = f[0];
      R.a[0][1] = f[1];
      R.a[1][0] = f[1];
      R.a[0][2] = f[2];
      R.a[1][1] = 2 * f[2];
      R.a[2][0] = f[2];
      break;
    default:  // (1,0)^2 (0,2)
      for (int j = 0; j < 3; ++j) R.a[0][j] = f[j];
      break;
  }
  auto random_matrix = [&] {
    for (;;) {
      bisol::Mat2<mpz_class> M;
      for (auto& row : M)
        for (auto& e : row) e = static_cast<long>(g() % p);
      const mpz_class det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
      if (mpz_divisible_ui_p(det.get_mpz_t(), p) == 0) return M;
    }
  };
  R = bisol::act(R, random_matrix(), random_matrix());
  const IntForm G = random_padic_form(seed ^ 0x5bd1e995u, index, p, n);
  const mpz_class pn = pw(p, n);
  const mpz_class unit = static_cast<long>(1 + g() % (p - 1 ? p - 1 : 1));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) R.a[i][j] = mod(unit * R.a[i][j] + mpz_class(P) * G.a[i][j], pn);
  return R;
}

IntForm random_test_form(std::uint64_t seed, std::uint64_t index, unsigned long p, int n) {
  return index % 2 ? random_singular_reduction_form(seed, index, p, n)
                   : random_padic_form(seed, index, p, n);
}

IntForm random_small_form(std::uint64_t seed, std::uint64_t index, long h) {
  std::seed_seq sq{seed, index};
  std::mt19937_64 g(sq);
  std::uniform_int_distribution<long> d(-h, h);
  IntForm F;
  for (auto& row : F.a)
    for (auto& c : row) c = d(g);
  return F;
}

namespace {

// Rank mod p of a list of rows.
int rank_mod(std::vector<std::vector<long>> rows, long p) {
  int rank = 0;
  const size_t cols = rows.empty() ? 0 : rows[0].size();
  for (auto& r : rows)
    for (auto& v : r) v = ((v % p) + p) % p;
  for (size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    long inv = 1;
    for (long k = 1; k < p; ++k)
      if (rows[rank][c] * k % p == 1) inv = k;
    for (auto& v : rows[rank]) v = v * inv % p;
    for (size_t r = 0; r < rows.size(); ++r)
      if (r != static_cast<size_t>(rank) && rows[r][c] != 0) {
        const long m = rows[r][c];
        for (size_t k = 0; k < cols; ++k) rows[r][k] = ((rows[r][k] - m * rows[rank][k]) % p + p) % p;
      }
    ++rank;
  }
  return rank;
}

// Image of the basis direction with F_j = X0^(2-i) X1^i under
// (F0, F1, F2) -> (F1, -A F0 - B F2), A and B binary quadratics.
std::vector<std::vector<long>> explicit_rows(const std::array<long, 3>& A, const std::array<long, 3>& B) {
  std::vector<std::vector<long>> rows;
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) {
      std::vector<long> row(8, 0);  // 3 coefficients of G2, 5 of G4
      if (j == 1) row[i] = 1;
      if (j == 0)
        for (int k = 0; k < 3; ++k) row[3 + i + k] -= A[k];
      if (j == 2)
        for (int k = 0; k < 3; ++k) row[3 + i + k] -= B[k];
      rows.push_back(row);
    }
  return rows;
}

}  // namespace

int explicit_phi_rank_case1iii(unsigned long p, const std::array<unsigned long, 3>& f) {
  const long c = static_cast<long>(f[2]);
  return rank_mod(explicit_rows({c, 0, 0}, {static_cast<long>(f[0]), static_cast<long>(f[1]), c}),
                  static_cast<long>(p));
}

int explicit_phi_rank_case4(unsigned long p) {
  return rank_mod(explicit_rows({1, 0, 0}, {0, 0, 1}), static_cast<long>(p));
}

mpq_class rho_printed(unsigned long p) {
  const mpz_class f = horner({-2, 6, -2, 2, -1, 5, -2, 5, -1, 4, -4, 4}, p);
  const mpz_class P = p;
  mpq_class r(P * (P - 1) * (P * P - 1) * f, 8 * (pw(P, 8) - 1) * (pw(P, 9) - 1));
  r.canonicalize();
  return 1 - r;
}

namespace {

mpq_class ratio(const mpz_class& a, const mpz_class& b) {
  mpq_class r(a, b);
  r.canonicalize();
  return r;
}

}  // namespace

mpq_class xi3_printed(unsigned long p) {
  const mpz_class P = p;
  return ratio(horner({-2, -3, 1, 2, 0, -2, 1, 0, 0, 2, 1}, p), 2 * (P + 1) * (pw(P, 9) - 1));
}

mpq_class xi3p_printed(unsigned long p) {
  const mpz_class P = p;
  return ratio(horner({-1, -2, -2, 1, 2, 0, -2, 1, 0, 1, 2}, p), 2 * (P + 1) * (pw(P, 9) - 1));
}

mpq_class xi4_printed(unsigned long p) {
  const mpz_class P = p;
  return ratio(horner({-6, -10, 0, 4, 0, -3, 2, -1, 1, 8, 5}, p), 8 * (P + 1) * (pw(P, 9) - 1));
}

mpq_class xi4p_printed(unsigned long p) {
  const mpz_class P = p;
  return ratio(horner({-2, -5, -1, 2, 0, -2, 2, -1, 0, 3, 4}, p), 4 * (P + 1) * (pw(P, 9) - 1));
}

mpq_class xi5_printed(unsigned long p) {
  const mpz_class P = p;
  const mpz_class f =
      horner({8, 10, -4, -6, 8, -1, 3, -11, 8, -35, 9, 3, -4, -12, 16, -8, 2, 8, 6}, p);
  return ratio(f, 8 * (P + 1) * (pw(P, 9) - 1) * (pw(P, 8) - 1));
}

mpq_class sigma_printed(unsigned long p) {
  const mpz_class P = p;
  return ratio(horner({-1, -3, -2, 0, 2, -1, 0, 0, 0, 3, 2}, p),
               2 * (P + 1) * (P + 1) * (pw(P, 9) - 1));
}

mpq_class tau_star_printed(unsigned long p) {
  const mpz_class P = p;
  return ratio(horner({-4, -8, 0, 4, 0, -4, 3, -1, 0, 5, 5}, p), 8 * (P + 1) * (pw(P, 9) - 1));
}

std::array<std::uint64_t, 4> irreducible_counts(std::uint64_t q) {
  return {q + 1, (q * q - q) / 2, q * q * q - q, q * q * q * q * q - q * q * q};
}

std::map<bisol::ff::Tag, TypeCount> reducible_type_counts(std::uint64_t q) {
  using bisol::ff::Tag;
  const auto [m10, m20, m11, m21] = irreducible_counts(q);
  auto choose2 = [](std::uint64_t m) { return m * (m - 1) / 2; };
  return {
      {Tag::P11_11, {choose2(m11), true}},
      {Tag::P21_01, {2 * m21 * m10, true}},
      {Tag::P11_10_01, {m11 * m10 * m10, true}},
      {Tag::P10_10_01_01, {choose2(m10) * choose2(m10), true}},
      {Tag::P20_01_01, {2 * m20 * choose2(m10), true}},
      {Tag::P20_02, {m20 * m20, false}},
      {Tag::P10sq_01_01, {2 * m10 * choose2(m10), true}},
      {Tag::P20_01sq, {2 * m20 * m10, false}},
      {Tag::P11sq, {m11, false}},
      {Tag::P10sq_01sq, {m10 * m10, false}},
  };
}

std::uint64_t smooth_count(std::uint64_t q) { return q * q * q * q * (q + 1) * (q + 1) * (q - 1) * (q - 1); }

std::uint64_t abs_irred_singular_count(std::uint64_t q) {
  return q * q * q * (q + 1) * (q + 1) * (q - 1) * (q - 1);
}

std::uint64_t conj11_count(std::uint64_t q) { return (q * q * q - q) * (q * q * q + q - 1) / 2; }

std::array<std::uint64_t, 3> conj11_sub_counts(std::uint64_t q) {
  return {q * q * q * (q + 1) * (q + 1) * (q - 1) / 4, q * q * (q + 1) * (q - 1) * (q - 1) * (q - 2) / 4,
          q * (q + 1) * (q + 1) * (q - 1) * (q - 1) / 2};
}

LineCounts line_counts(std::uint64_t p) {
  const std::uint64_t p2 = p * p, p3 = p2 * p, p7 = p3 * p3 * p;
  return {p3 * (p + 1) * (p - 1) * (p - 1) / 4, p2 * (p + 1) * (p - 1) * (p - 1) * (p - 2) / 4,
          p2 * (p + 1) * (p - 1) * (p - 1) / 2, p2 * (p - 1) * (p - 1) / 4,
          p2 * (p - 1) / 2,                     p7 * (p - 1) / 2};
}

DeltaCounts delta_counts(std::uint64_t p) {
  const std::uint64_t p3 = p * p * p;
  return {p3 * (p - 1) / 2, 0, p * (p - 1) * (p - 1) / 2, 0, p * (p - 1) / 2, p * (p - 1), p,
          p3 * p * p, p3 * p * (p - 1)};
}

GridSigns real_grid(const bisol::BiForm22<mpq_class>& F) {
  std::vector<std::array<double, 2>> pts;
  for (int k = -48; k <= 48; ++k) pts.push_back({k / 8.0, 1});
  for (int k = -16; k <= 16; ++k)
    if (k != 0) pts.push_back({1, 1.0 / k});
  pts.push_back({1, 0});
  double a[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[i][j] = F.a[i][j].get_d();
  GridSigns g;
  for (const auto& x : pts)
    for (const auto& y : pts) {
      const double mx[3]{x[0] * x[0], x[0] * x[1], x[1] * x[1]};
      const double my[3]{y[0] * y[0], y[0] * y[1], y[1] * y[1]};
      double v = 0, mag = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          const double t = a[i][j] * mx[i] * my[j];
          v += t;
          mag += std::abs(t);
        }
      // Signs inside the rounding error are not recorded.
      const double err = 32 * std::numeric_limits<double>::epsilon() * mag;
      g.positive |= v > err;
      g.negative |= v < -err;
      g.zero |= mag == 0;
    }
  return g;
}

}  // namespace oracle
