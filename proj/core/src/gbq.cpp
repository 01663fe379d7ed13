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

// Solubility of Z^2 + G2 Z = G4 over Q_p, read off from whether the quartic
// D = G2^2 + 4 G4 takes a square value on P^1(Q_p).

#include <algorithm>
#include <climits>

#include "bisol/qp_solver.hpp"
#include "fp_poly.hpp"

namespace bisol::qp {

int QpGbq::precision() const {
  int n = INT_MAX;
  for (const auto& c : g2) n = std::min(n, c.precision);
  for (const auto& c : g4) n = std::min(n, c.precision);
  return n;
}

QpGbq phi(const QpForm& F) {
  const int n = F.precision();
  const auto G = phi(F.at_precision(n).residues());
  QpGbq out;
  out.p = F.p;
  for (int i = 0; i < 3; ++i) out.g2[i] = PadicApprox::fixed(G.g2[i], F.p, n);
  for (int i = 0; i < 5; ++i) out.g4[i] = PadicApprox::fixed(G.g4[i], F.p, n);
  return out;
}

namespace {

// Polynomial in one variable; coefficient k multiplies t^k.
using Poly = std::vector<mpz_class>;

struct Search {
  mpz_class p;
  PowerTable pw;
  int n;  // precision of the quartic coefficients
  DecideOptions opts;

  Search(const mpz_class& prime, int prec, const DecideOptions& o)
      : p(prime), pw(prime), n(prec), opts(o) {}

  void reduce(mpz_class& v, int k) { mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), pw[k].get_mpz_t()); }

  // Square class of a nonzero value u p^v, with u known mod p^(n - v).
  bool is_square(const mpz_class& value, int v) {
    if (v % 2 != 0) return false;
    mpz_class u;
    mpz_divexact(u.get_mpz_t(), value.get_mpz_t(), pw[v].get_mpz_t());
    if (p == 2) return mpz_fdiv_ui(u.get_mpz_t(), 8) == 1;
    return mpz_legendre(u.get_mpz_t(), p.get_mpz_t()) == 1;
  }

  // --- disc subdivision -------------------------------------------------
  //
  // Does some x in x0 + p^k Z_p give g(x) a square? With lambda = v(g(x0))
  // and mu = v(g'(x0)), g is congruent to g(x0) modulo p^min(mu + k, 2k)
  // on the disc, which fixes the square class once that exceeds lambda by
  // 1 (odd p) or 3 (p = 2). A point with v(g) > 2 v(g') carries a root.
  Verdict disc(const Poly& g, const mpz_class& x0, int k, int depth) {
    if (depth > opts.max_depth) return Undetermined{UndeterminedReason::Depth};
    mpz_class gx = 0, dgx = 0;
    for (int i = static_cast<int>(g.size()) - 1; i >= 0; --i) {
      dgx = dgx * x0 + gx;
      gx = gx * x0 + g[i];
    }
    reduce(gx, n);
    reduce(dgx, n);
    const Val lam = valuation_mod(gx, p, n);
    const Val mu = valuation_mod(dgx, p, n);
    const int need = p == 2 ? 3 : 1;

    if (mu.exact && lam.v > 2 * mu.v) return found(x0, mu.v);
    if (lam.exact) {
      const int A = std::min(mu.v + k, 2 * k);
      if (lam.v + need <= A) {
        if (lam.v + need > n) return Undetermined{UndeterminedReason::Precision};
        if (is_square(gx, lam.v)) return found(x0, 0);
        return Insoluble{};
      }
    }
    // Once g(x) = 0 mod p^n on the whole disc nothing more can be learnt.
    if (k >= n || (!lam.exact && std::min(mu.v + k, 2 * k) >= n))
      return Undetermined{UndeterminedReason::Precision};

    bool undetermined = false;
    Undetermined first;
    const mpz_class step = pw[k];
    for (unsigned long r = 0; mpz_cmp_ui(p.get_mpz_t(), r) > 0; ++r) {
      Verdict v = disc(g, x0 + step * r, k + 1, depth + 1);
      if (std::holds_alternative<Soluble>(v)) return v;
      if (auto* u = std::get_if<Undetermined>(&v); u && !undetermined) {
        undetermined = true;
        first = *u;
      }
    }
    if (undetermined) return first;
    return Insoluble{};
  }

  Verdict found(const mpz_class& x, int e) {
    Witness w;
    w.x = x;
    w.e = e;
    w.precision = n;
    return Soluble{w};
  }

  // --- root recursion (odd p) -------------------------------------------
  //
  // Does some s in Z_p make p^eps h(s) a square, where h has precision
  // prec? Dividing out the content adjusts eps. With eps even, any residue
  // where h is a nonzero square lifts; otherwise only roots of h mod p can
  // contribute, and each is followed into its residue disc.
  Verdict roots(Poly h, int prec, int eps, const mpz_class& offset, int level, int depth) {
    if (depth > opts.max_depth) return Undetermined{UndeterminedReason::Depth};
    int c = INT_MAX;
    for (auto& x : h) {
      reduce(x, prec);
      const Val v = valuation_mod(x, p, prec);
      if (v.exact) c = std::min(c, v.v);
    }
    if (c == INT_MAX) return Undetermined{UndeterminedReason::Precision};
    if (c > 0) {
      for (auto& x : h) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), pw[c].get_mpz_t());
      prec -= c;
      eps = (eps + c) % 2;
    }
    fp::Poly hbar = fp::reduce(h, p);

    if (eps == 0) {
      mpz_class lead;
      const bool square_shape = fp::is_constant_times_square(hbar, p, &lead);
      if (!square_shape || mpz_legendre(lead.get_mpz_t(), p.get_mpz_t()) == 1) {
        // Guaranteed for p > 64; smaller p may fall through to the roots.
        for (mpz_class s = 0; s < p; ++s) {
          const mpz_class hv = fp::eval(hbar, s, p);
          if (hv != 0 && mpz_legendre(hv.get_mpz_t(), p.get_mpz_t()) == 1)
            return found(offset + pw[level] * s, 0);
        }
      }
    }

    bool undetermined = false;
    Undetermined first;
    for (const mpz_class& r : fp::roots(hbar, p)) {
      // h(r + p s), coefficientwise.
      Poly shifted = h;
      const int d = static_cast<int>(shifted.size()) - 1;
      for (int i = 0; i < d; ++i)
        for (int j = d - 1; j >= i; --j) shifted[j] += r * shifted[j + 1];
      for (int j = 0; j <= d; ++j) shifted[j] *= pw[j];
      Verdict v = roots(std::move(shifted), prec, eps, offset + pw[level] * r, level + 1,
                        depth + 1);
      if (std::holds_alternative<Soluble>(v)) return v;
      if (auto* u = std::get_if<Undetermined>(&v); u && !undetermined) {
        undetermined = true;
        first = *u;
      }
    }
    if (undetermined) return first;
    return Insoluble{};
  }
};

Verdict combine(Verdict a, Verdict b) {
  if (std::holds_alternative<Soluble>(a)) return a;
  if (std::holds_alternative<Soluble>(b)) return b;
  if (std::holds_alternative<Undetermined>(a)) return a;
  if (std::holds_alternative<Undetermined>(b)) return b;
  return Insoluble{};
}

void set_patch(Verdict& v, Patch patch) {
  if (auto* s = std::get_if<Soluble>(&v)) s->witness.patch = patch;
}

}  // namespace

Verdict decide_gbq(const QpGbq& G, const DecideOptions& opts, GbqMethod method) {
  const int n = G.precision();
  std::array<mpz_class, 5> d;
  std::array<mpz_class, 3> g2;
  std::array<mpz_class, 5> g4;
  for (int i = 0; i < 3; ++i) g2[i] = G.g2[i].value;
  for (int i = 0; i < 5; ++i) g4[i] = G.g4[i].value;
  for (int i = 0; i < 5; ++i) d[i] = 4 * g4[i];
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) d[i + k] += g2[i] * g2[k];

  Search S(G.p, n, opts);
  bool any = false;
  for (auto& c : d) {
    S.reduce(c, n);
    any |= c != 0;
  }
  if (!any) {
    bool g_any = false;
    for (const auto& c : g2) g_any |= c != 0;
    for (const auto& c : g4) g_any |= c != 0;
    if (!g_any) throw SolverError(SolverError::Kind::AllZero, "quartic vanishes");
    return Undetermined{UndeterminedReason::Precision};
  }

  // Patch x = (t:1), t in Z_p:  D(t,1) = sum d_i t^(4-i).
  // Patch x = (1:u), u in pZ_p: D(1,u) = sum d_i u^i.
  Poly affine(5), infinity(5);
  for (int i = 0; i < 5; ++i) {
    affine[4 - i] = d[i];
    infinity[i] = d[i];
  }

  const bool small = G.p <= 64;
  if (method == GbqMethod::Auto)
    method = small ? GbqMethod::DiscSubdivision : GbqMethod::RootRecursion;
  if (method == GbqMethod::RootRecursion && G.p == 2)
    throw SolverError(SolverError::Kind::InvalidInput, "root recursion needs odd p");

  Verdict a, b;
  if (method == GbqMethod::DiscSubdivision) {
    a = S.disc(affine, 0, 0, 0);
    if (std::holds_alternative<Soluble>(a)) {
      set_patch(a, Patch::X1Y1);
      return a;
    }
    b = S.disc(infinity, 0, 1, 0);
  } else {
    a = S.roots(affine, n, 0, 0, 0, 0);
    if (std::holds_alternative<Soluble>(a)) {
      set_patch(a, Patch::X1Y1);
      return a;
    }
    Poly scaled = infinity;
    for (int i = 0; i < 5; ++i) scaled[i] *= S.pw[i];
    b = S.roots(scaled, n, 0, 0, 0, 0);
    if (auto* s = std::get_if<Soluble>(&b)) s->witness.x *= G.p;
  }
  set_patch(b, Patch::X0Y1);
  return combine(std::move(a), std::move(b));
}

Verdict decide_gbq_exact(const GenBinaryQuartic<mpz_class>& G, const mpz_class& p,
                         const DecideOptions& opts, GbqMethod method) {
  for (int n = 16;; n *= 2) {
    QpGbq Q;
    Q.p = p;
    for (int i = 0; i < 3; ++i) Q.g2[i] = PadicApprox::fixed(G.g2[i], p, n);
    for (int i = 0; i < 5; ++i) Q.g4[i] = PadicApprox::fixed(G.g4[i], p, n);
    Verdict v = decide_gbq(Q, opts, method);
    const auto* u = std::get_if<Undetermined>(&v);
    if (!u || u->reason != UndeterminedReason::Precision || 2 * n > opts.max_precision) return v;
  }
}

mpz_class quartic_discriminant(const std::array<mpz_class, 5>& q) {
  const mpz_class &a = q[0], &b = q[1], &c = q[2], &d = q[3], &e = q[4];
  const mpz_class I = 12 * a * e - 3 * b * d + c * c;
  const mpz_class J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c * c * c;
  mpz_class num = 4 * I * I * I - J * J;
  mpz_class out;
  mpz_divexact_ui(out.get_mpz_t(), num.get_mpz_t(), 27);
  return out;
}

mpq_class quartic_discriminant(const std::array<mpq_class, 5>& q) {
  const mpq_class &a = q[0], &b = q[1], &c = q[2], &d = q[3], &e = q[4];
  const mpq_class I = 12 * a * e - 3 * b * d + c * c;
  const mpq_class J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c * c * c;
  mpq_class out = (4 * I * I * I - J * J) / 27;
  out.canonicalize();
  return out;
}

mpz_class discriminant(const BiForm22<mpz_class>& F) {
  return quartic_discriminant(projection_quartic(F));
}

mpq_class discriminant(const BiForm22<mpq_class>& F) {
  return quartic_discriminant(projection_quartic(F));
}

}  // namespace bisol::qp
