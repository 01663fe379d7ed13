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

#include "bisol/densities.hpp"

#include <stdexcept>
#include <vector>

namespace bisol {

namespace {

mpz_class pw(unsigned long p, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

Rational q(const mpz_class& num, const mpz_class& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Solves A x = b exactly; A square and nonsingular.
std::vector<Rational> solve(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
  const size_t n = A.size();
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && A[piv][c] == 0) ++piv;
    if (piv == n) throw std::runtime_error("solve: singular system");
    std::swap(A[piv], A[c]);
    std::swap(b[piv], b[c]);
    for (size_t r = 0; r < n; ++r) {
      if (r == c || A[r][c] == 0) continue;
      const Rational k = A[r][c] / A[c][c];
      for (size_t j = c; j < n; ++j) A[r][j] -= k * A[c][j];
      b[r] -= k * b[c];
    }
  }
  std::vector<Rational> x(n);
  for (size_t i = 0; i < n; ++i) {
    x[i] = b[i] / A[i][i];
    x[i].canonicalize();
  }
  return x;
}

}  // namespace

Rational rho_closed(unsigned long p) {
  const mpz_class P = p;
  const mpz_class f = 4 * pw(p, 11) - 4 * pw(p, 10) + 4 * pw(p, 9) - pw(p, 8) + 5 * pw(p, 7) -
                      2 * pw(p, 6) + 5 * pw(p, 5) - pw(p, 4) + 2 * pw(p, 3) - 2 * pw(p, 2) +
                      6 * P - 2;
  const mpz_class num = P * (P - 1) * (P * P - 1) * f;
  const mpz_class den = 8 * (pw(p, 8) - 1) * (pw(p, 9) - 1);
  return 1 - q(num, den);
}

BqConstants bq_constants(unsigned long p) {
  const mpz_class P = p;
  const mpz_class p9 = pw(p, 9) - 1;
  BqConstants c;
  c.sigma = q(2 * pw(p, 10) + 3 * pw(p, 9) - pw(p, 5) + 2 * pw(p, 4) - 2 * pw(p, 2) - 3 * P - 1,
              2 * (P + 1) * (P + 1) * p9);
  c.tau = q(5 * pw(p, 10) + 8 * pw(p, 9) + pw(p, 8) - pw(p, 7) + 2 * pw(p, 6) - 3 * pw(p, 5) +
                4 * pw(p, 3) - 10 * P - 6,
            8 * (P + 1) * p9);
  c.tau_star = q(5 * pw(p, 10) + 5 * pw(p, 9) - pw(p, 7) + 3 * pw(p, 6) - 4 * pw(p, 5) +
                     4 * pw(p, 3) - 8 * P - 4,
                 8 * (P + 1) * p9);
  return c;
}

CaseDensityTable build_case_table(unsigned long p) {
  if (p < 2) throw std::invalid_argument("build_case_table: p must be prime");
  CaseDensityTable t;
  t.p = p;
  const mpz_class P = p;
  const Rational R = P;
  const Rational ip = Rational(1, p);

  // Counts over F_p up to scaling.
  t.n11 = pw(p, 3) * (P + 1) * (P + 1) * (P - 1) / 4;
  t.n12 = P * P * (P + 1) * (P - 1) * (P - 1) * (P - 2) / 4;
  t.n13 = P * (P + 1) * (P + 1) * (P - 1) * (P - 1) / 2;
  t.n1 = t.n11 + t.n12 + t.n13;
  t.n2 = P * P * (P - 1) * (P - 1) / 4;
  t.n3 = P * (P + 1) * (P - 1);
  t.n4 = P * (P + 1) * (P - 1);
  t.n5 = (P + 1) * (P + 1);
  const mpz_class classes = (pw(p, 9) - 1) / (P - 1);
  t.n0 = classes - (t.n1 + t.n2 + t.n3 + t.n4 + t.n5);

  const mpz_class lines = pw(p, 7) * (P - 1) / 2;
  t.r11 = pw(p, 3) * (P + 1) * (P - 1) * (P - 1) / 4;
  t.r12 = P * P * (P + 1) * (P - 1) * (P - 1) * (P - 2) / 4;
  t.r13 = P * P * (P + 1) * (P - 1) * (P - 1) / 2;
  t.r2 = P * P * (P - 1) * (P - 1) / 4;
  t.r3 = P * P * (P - 1) / 2;
  t.r0 = lines - (t.r11 + t.r12 + t.r13 + t.r2 + t.r3);

  t.s11 = pw(p, 3) * (P - 1) / 2;
  t.s12 = 0;
  t.s13 = P * (P - 1) * (P - 1) / 2;
  t.s2 = 0;
  t.s3 = P * (P - 1) / 2;
  t.s4 = P * (P - 1);
  t.s5 = P;
  t.s0 = pw(p, 5) - (t.s11 + t.s13 + t.s3 + t.s4 + t.s5);
  t.t0 = pw(p, 4) * (P - 1) - (t.s11 + t.s13 + t.s4);

  // Case 1: alpha = (1/p)((1 - 1/p) + alpha / p).
  t.alpha = (ip * (1 - ip)) / (1 - ip * ip);
  t.alpha.canonicalize();
  t.xi11 = 1 - (1 - t.alpha) * (1 - t.alpha);
  t.xi11p = 1 - (1 - t.alpha) * (1 - R * t.alpha);
  t.xi12 = 0;

  const BqConstants bq = bq_constants(p);
  t.sigma = bq.sigma;
  t.tau = bq.tau;
  t.tau_star = bq.tau_star;
  t.xi13 = bq.sigma;
  t.xi13p = R * t.xi13;
  t.xi2 = 0;
  t.xi4 = bq.tau;
  t.xi4p = R * bq.tau - (R - 1) * bq.tau_star;

  // Case 3: unknowns (xi3, delta_line).
  {
    const Rational p3 = R * R * R;
    const Rational L = Rational(lines);
    std::vector<std::vector<Rational>> A{{p3, -1}, {-Rational(t.r3), L}};
    std::vector<Rational> b{(p3 - R) / 2 + (R * R - 1) / 2,
                            Rational(t.r0) + Rational(t.r11) * t.xi11 +
                                Rational(t.r12) * t.xi12 + Rational(t.r13) * t.xi13 +
                                Rational(t.r2) * t.xi2};
    const auto x = solve(std::move(A), std::move(b));
    t.xi3 = x[0];
    t.delta_line = x[1];
    t.xi3p = (R * (R - 1) + (R - 1) / 2 + t.delta_line) / (R * R);
    t.xi3p.canonicalize();
  }

  // Case 5: unknowns xi5, xi52, delta1, delta2, delta1*, delta2*, eps1,
  // eps2, xi5'.
  t.xi51 = Rational(3, 4);
  {
    enum { X5, X52, D1, D2, D1S, D2S, E1, E2, X5P, N };
    std::vector<std::vector<Rational>> A(N, std::vector<Rational>(N, 0));
    std::vector<Rational> b(N, 0);
    const Rational p5 = Rational(pw(p, 5));
    const Rational p4m = Rational(pw(p, 4) * (P - 1));
    const Rational om = 1 - ip;

    A[0][X5] = 1;
    A[0][X52] = -ip;
    b[0] = om * t.xi51;

    A[1][X52] = 1;
    A[1][D2S] = -ip * ip * ip * om * om;
    A[1][D1S] = -ip * ip * 2 * ip * om;
    A[1][E1] = -ip * ip * ip * ip;
    b[1] = 1 - ip * ip;

    A[2][X5P] = 1;
    A[2][D1] = -ip * ip * ip;
    b[2] = om + ip * om * Rational(3, 4) + ip * ip * om;

    A[3][D1] = 1;
    A[3][D1S] = -om;
    A[3][E1] = -ip;

    A[4][D2] = 1;
    A[4][D2S] = -om;
    A[4][E2] = -ip;

    const Rational s0 = Rational(t.s0), s11 = Rational(t.s11), s13 = Rational(t.s13),
                   s3 = Rational(t.s3), s4 = Rational(t.s4), s5 = Rational(t.s5),
                   t0 = Rational(t.t0);

    A[5][D1] = p5;
    A[5][X5] = -s5;
    b[5] = s0 + s11 * t.xi11 + s13 * t.xi13 + s3 * t.xi3 + s4 * t.xi4;

    A[6][D2] = p4m;
    b[6] = t0 + s11 * t.xi11 + s13 * t.xi13 + s4 * t.xi4;

    A[7][E1] = p5;
    A[7][X5P] = -s5;
    b[7] = s0 + s11 * t.xi11p + s13 * t.xi13p + s3 * t.xi3p + s4 * t.xi4p;

    A[8][E2] = p4m;
    b[8] = t0 + s11 * t.xi11p + s13 * t.xi13p + s4 * t.xi4p;

    const auto x = solve(std::move(A), std::move(b));
    t.xi5 = x[X5];
    t.xi52 = x[X52];
    t.delta1 = x[D1];
    t.delta2 = x[D2];
    t.delta1s = x[D1S];
    t.delta2s = x[D2S];
    t.eps1 = x[E1];
    t.eps2 = x[E2];
    t.xi5p = x[X5P];
  }

  t.xi1 = (Rational(t.n11) * t.xi11 + Rational(t.n12) * t.xi12 + Rational(t.n13) * t.xi13) /
          Rational(t.n1);
  t.xi1.canonicalize();
  t.rho = (Rational(t.n0) + Rational(t.n1) * t.xi1 + Rational(t.n2) * t.xi2 +
           Rational(t.n3) * t.xi3 + Rational(t.n4) * t.xi4 + Rational(t.n5) * t.xi5) /
          Rational(classes);
  t.rho.canonicalize();
  return t;
}

Rational rho_assembled(unsigned long p) { return build_case_table(p).rho; }

}  // namespace bisol
