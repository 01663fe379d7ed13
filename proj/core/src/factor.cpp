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

#include <algorithm>

#include "bisol/qp_solver.hpp"

namespace bisol::qp {

namespace {

bool probably_prime(const mpz_class& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Pollard rho with Brent's cycle detection; n composite and odd.
mpz_class pollard_brent(const mpz_class& n) {
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, x, g = 1, q = 1, ys;
    auto f = [&](const mpz_class& v) {
      mpz_class r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    const unsigned long m = 128;
    unsigned long r = 1;
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          mpz_class d = x - y;
          q = q * abs(d);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        mpz_class d = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const mpz_class& n, std::vector<mpz_class>& out) {
  if (n == 1) return;
  if (probably_prime(n)) {
    out.push_back(n);
    return;
  }
  const mpz_class d = pollard_brent(n);
  split(d, out);
  split(n / d, out);
}

}  // namespace

std::vector<mpz_class> prime_factors(const mpz_class& n0) {
  if (n0 == 0) throw SolverError(SolverError::Kind::InvalidInput, "prime_factors of zero");
  mpz_class n = abs(n0);
  std::vector<mpz_class> out;
  for (unsigned long d = 2; d <= 1000000 && n > 1; ++d) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      out.emplace_back(d);
      do {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
      } while (mpz_divisible_ui_p(n.get_mpz_t(), d));
    }
    if (d * d > n) {
      if (n > 1) out.push_back(n);
      n = 1;
    } else if (d % 1024 == 0 && probably_prime(n)) {
      out.push_back(n);
      n = 1;
    }
  }
  std::vector<mpz_class> big;
  split(n, big);
  out.insert(out.end(), big.begin(), big.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace bisol::qp
