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

#include "fp_poly.hpp"

#include <stdexcept>

namespace bisol::qp::fp {

namespace {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

mpz_class inverse(const mpz_class& a, const mpz_class& p) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::domain_error("fp: non-invertible element");
  return r;
}

Poly monic(Poly a, const mpz_class& p) {
  if (a.empty()) return a;
  const mpz_class inv = inverse(a.back(), p);
  for (auto& c : a) {
    c *= inv;
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
  }
  return a;
}

// Exact quotient a / b for monic b.
Poly divide(Poly a, const Poly& b, const mpz_class& p) {
  const int db = degree(b);
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  for (int k = degree(a); k >= db; --k) {
    const mpz_class c = a[k];
    q[k - db] = c;
    for (int i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
    for (auto& x : a) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  }
  return reduce(std::move(q), p);
}

void split(const Poly& g, const mpz_class& p, std::vector<mpz_class>& out) {
  const int d = degree(g);
  if (d <= 0) return;
  if (d == 1) {
    mpz_class r = -g[0];
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
    out.push_back(r);
    return;
  }
  const mpz_class half = (p - 1) / 2;
  for (unsigned long a = 0;; ++a) {
    // (x + a)^((p-1)/2) - 1 mod g
    Poly base{mpz_class(a), 1};
    base = mod(reduce(base, p), g, p);
    Poly acc{1};
    mpz_class e = half;
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) acc = mul_mod(acc, base, g, p);
      base = mul_mod(base, base, g, p);
      e >>= 1;
    }
    if (acc.empty()) acc.push_back(0);
    acc[0] -= 1;
    acc = reduce(acc, p);
    Poly h = gcd(g, acc, p);
    const int dh = degree(h);
    if (dh > 0 && dh < d) {
      split(h, p, out);
      split(divide(g, h, p), p, out);
      return;
    }
  }
}

}  // namespace

Poly reduce(Poly a, const mpz_class& p) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
  trim(a);
  return a;
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly mod(Poly a, const Poly& f, const mpz_class& p) {
  const int df = degree(f);
  if (df < 0) throw std::domain_error("fp: division by zero polynomial");
  const mpz_class inv = inverse(f.back(), p);
  a = reduce(std::move(a), p);
  while (degree(a) >= df) {
    const int k = degree(a);
    mpz_class c = a[k] * inv;
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    for (int i = 0; i <= df; ++i) {
      a[k - df + i] -= c * f[i];
      mpz_fdiv_r(a[k - df + i].get_mpz_t(), a[k - df + i].get_mpz_t(), p.get_mpz_t());
    }
    trim(a);
  }
  return a;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& f, const mpz_class& p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return mod(std::move(c), f, p);
}

Poly gcd(Poly a, Poly b, const mpz_class& p) {
  a = reduce(std::move(a), p);
  b = reduce(std::move(b), p);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a), p);
}

mpz_class eval(const Poly& a, const mpz_class& x, const mpz_class& p) {
  mpz_class acc = 0;
  for (int k = degree(a); k >= 0; --k) {
    acc = acc * x + a[k];
    mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), p.get_mpz_t());
  }
  return acc;
}

std::vector<mpz_class> roots(const Poly& f0, const mpz_class& p) {
  Poly f = monic(reduce(f0, p), p);
  std::vector<mpz_class> out;
  if (degree(f) <= 0) return out;
  // x^p - x mod f
  Poly base = mod(Poly{0, 1}, f, p);
  Poly acc{1};
  mpz_class e = p;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = mul_mod(acc, base, f, p);
    base = mul_mod(base, base, f, p);
    e >>= 1;
  }
  if (acc.size() < 2) acc.resize(2, 0);
  acc[1] -= 1;
  const Poly g = gcd(f, reduce(acc, p), p);
  split(g, p, out);
  return out;
}

bool is_constant_times_square(const Poly& f0, const mpz_class& p, mpz_class* c) {
  const Poly f = reduce(f0, p);
  const int d = degree(f);
  if (d < 0) return false;
  if (c) *c = f.back();
  if (d % 2 != 0) return false;
  if (d == 0) return true;
  const Poly m = monic(f, p);
  const mpz_class inv2 = inverse(2, p);
  if (d == 2) {
    // x^2 + a x + b is a square iff a^2 = 4b.
    mpz_class disc = m[1] * m[1] - 4 * m[0];
    return mpz_divisible_p(disc.get_mpz_t(), p.get_mpz_t()) != 0;
  }
  if (d == 4) {
    // x^4 + a x^3 + b x^2 + c x + e = (x^2 + (a/2) x + k)^2
    const mpz_class& a = m[3];
    const mpz_class& b = m[2];
    const mpz_class& cc = m[1];
    const mpz_class& e = m[0];
    mpz_class h = a * inv2;
    mpz_class k = (b - h * h) * inv2;
    mpz_class r1 = 2 * h * k - cc;
    mpz_class r2 = k * k - e;
    return mpz_divisible_p(r1.get_mpz_t(), p.get_mpz_t()) != 0 &&
           mpz_divisible_p(r2.get_mpz_t(), p.get_mpz_t()) != 0;
  }
  throw std::domain_error("fp: degree above 4 unsupported");
}

}  // namespace bisol::qp::fp
