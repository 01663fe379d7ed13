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
#include <cmath>
#include <limits>
#include <vector>

#include "bisol/densities.hpp"

namespace bisol {

namespace {

using Poly = std::vector<mpz_class>;  // coefficient k multiplies x^k

Poly mul(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return a;
}

// p(x + s).
Poly shift(Poly a, const mpz_class& s) {
  const int d = static_cast<int>(a.size()) - 1;
  for (int i = 0; i < d; ++i)
    for (int j = d - 1; j >= i; --j) a[j] += s * a[j + 1];
  return a;
}

std::vector<unsigned long> primes_up_to(unsigned long n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<unsigned long> out;
  for (unsigned long i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (unsigned long j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

}  // namespace

bool tail_bound_holds(unsigned long c, unsigned long p0) {
  // 1 - rho(x) <= c / x^2 for x > 1 is equivalent to
  // 8 c (x^8 - 1)(x^9 - 1) - x^3 (x - 1)(x^2 - 1) f(x) >= 0.
  const Poly f{-2, 6, -2, 2, -1, 5, -2, 5, -1, 4, -4, 4};
  Poly x8(9, 0), x9(10, 0);
  x8[8] = 1;
  x8[0] = -1;
  x9[9] = 1;
  x9[0] = -1;
  Poly lhs = mul(x8, x9);
  for (auto& v : lhs) v *= 8 * c;
  const Poly rhs = mul(mul(Poly{0, 0, 0, -1, 1}, Poly{-1, 0, 1}), f);
  // Sufficient: every coefficient of P(p0 + y) is nonnegative, the constant
  // term positive.
  const Poly shifted = shift(sub(lhs, rhs), mpz_class(p0));
  if (shifted[0] <= 0) return false;
  for (const auto& v : shifted)
    if (v < 0) return false;
  return true;
}

PrimeProduct prime_product(unsigned long pmax) {
  PrimeProduct out;
  double lo = 1, hi = 1;
  for (unsigned long p : primes_up_to(pmax)) {
    const Rational x = 1 - rho_closed(p);  // in (0, 1)
    // mpq_get_d truncates, so x lies in [d, up(d)].
    const double d = x.get_d();
    const double f_lo = down(1 - up(d));
    const double f_hi = up(1 - d);
    lo = down(lo * f_lo);
    hi = up(hi * f_hi);
    ++out.primes;
  }
  out.value = {lo, hi};

  unsigned long p0 = pmax + 1;
  while (!is_prime(p0)) ++p0;
  unsigned long c = 1;
  while (!tail_bound_holds(c, p0)) c *= 2;
  out.tail_constant = static_cast<double>(c);
  // Sum over p > pmax of 1 / p^2 is below 1 / pmax, and, with
  // pi(x) < 1.25506 x / ln x (Rosser-Schoenfeld) and partial summation,
  // below 2.51012 / (pmax ln pmax).
  const double cd = static_cast<double>(c);
  const double pd = static_cast<double>(pmax);
  const double log_pmax = down(std::log(pd));
  out.tail = std::min(up(cd / pd), up(up(2.51012 * cd) / down(pd * log_pmax)));
  out.tail = std::min(out.tail, 1.0);
  out.with_tail = {down(lo * down(1 - out.tail)), hi};
  return out;
}

GlobalConstant global_constant(unsigned long pmax, const MCOptions& real_opts) {
  GlobalConstant g;
  g.finite = prime_product(pmax);
  g.real = mc_real_density(real_opts);
  const double r_lo = std::max(0.0, g.real.estimate - g.z * g.real.stderr_);
  const double r_hi = std::min(1.0, g.real.estimate + g.z * g.real.stderr_);
  g.value = {down(g.finite.with_tail.lo * r_lo), up(g.finite.with_tail.hi * r_hi)};
  return g;
}

}  // namespace bisol
