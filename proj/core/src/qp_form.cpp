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
#include <climits>

#include "bisol/qp_solver.hpp"

namespace bisol::qp {

QpForm QpForm::fixed(const BiForm22<mpz_class>& F, const mpz_class& p, int n) {
  QpForm out;
  out.p = p;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.a[i][j] = PadicApprox::fixed(F.a[i][j], p, n);
  return out;
}

QpForm QpForm::exact(const BiForm22<mpz_class>& F, const mpz_class& p, int n) {
  QpForm out;
  out.p = p;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.a[i][j] = PadicApprox::exact(F.a[i][j], p, n);
  return out;
}

int QpForm::precision() const {
  int n = INT_MAX;
  for (const auto& row : a)
    for (const auto& c : row) n = std::min(n, c.precision);
  return n;
}

bool QpForm::extendable() const {
  for (const auto& row : a)
    for (const auto& c : row)
      if (!c.extendable()) return false;
  return true;
}

QpForm QpForm::at_precision(int n) const {
  QpForm out;
  out.p = p;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.a[i][j] = a[i][j].at_precision(n);
  return out;
}

BiForm22<mpz_class> QpForm::residues() const {
  BiForm22<mpz_class> F;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) F.a[i][j] = a[i][j].value;
  return F;
}

ValuationGrid valuation_grid(const QpForm& F) {
  ValuationGrid g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g[i][j] = valuation(F.a[i][j]);
  return g;
}

std::pair<QpForm, int> normalize(const QpForm& F) {
  const int n = F.precision();
  const QpForm G = F.at_precision(n);
  int scale = INT_MAX;
  for (const auto& row : G.a)
    for (const auto& c : row) {
      const Val v = valuation(c);
      if (v.exact) scale = std::min(scale, v.v);
    }
  if (scale == INT_MAX) throw SolverError(SolverError::Kind::AllZero, "all coefficients vanish");
  QpForm out;
  out.p = G.p;
  mpz_class pk;
  mpz_pow_ui(pk.get_mpz_t(), G.p.get_mpz_t(), static_cast<unsigned long>(scale));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      mpz_class v;
      mpz_divexact(v.get_mpz_t(), G.a[i][j].value.get_mpz_t(), pk.get_mpz_t());
      out.a[i][j] = PadicApprox::fixed(v, G.p, n - scale);
    }
  return {out, scale};
}

QpForm act(const QpForm& F, const Mat2<mpz_class>& M, const Mat2<mpz_class>& N) {
  const int n = F.precision();
  const BiForm22<mpz_class> G = act(F.at_precision(n).residues(), M, N);
  return QpForm::fixed(G, F.p, n);
}

std::string_view patch_name(Patch patch) {
  switch (patch) {
    case Patch::X1Y1: return "x1y1";
    case Patch::X1Y0: return "x1y0";
    case Patch::X0Y1: return "x0y1";
    case Patch::X0Y0: return "x0y0";
  }
  return "?";
}

Outcome outcome(const Verdict& v) {
  if (std::holds_alternative<Soluble>(v)) return Outcome::Soluble;
  if (std::holds_alternative<Insoluble>(v)) return Outcome::Insoluble;
  return Outcome::Undetermined;
}

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Soluble: return "soluble";
    case Outcome::Insoluble: return "insoluble";
    case Outcome::Undetermined: return "undetermined";
  }
  return "?";
}

namespace {

// Homogeneous coordinates of a patch point: the fixed coordinate is 1.
std::array<mpz_class, 2> patch_vector(bool x1_fixed, const mpz_class& t) {
  if (x1_fixed) return {t, 1};
  return {1, t};
}

}  // namespace

bool certify_witness(const QpForm& F, Patch patch, const mpz_class& x, const mpz_class& y,
                     int* e_out) {
  const int n = F.precision();
  const BiForm22<mpz_class> G = F.at_precision(n).residues();
  const bool xa = patch == Patch::X1Y1 || patch == Patch::X1Y0;
  const bool ya = patch == Patch::X1Y1 || patch == Patch::X0Y1;
  const auto X = patch_vector(xa, x);
  const auto Y = patch_vector(ya, y);

  // Monomials and their derivatives along the free coordinate.
  std::array<mpz_class, 3> mx, my, dx, dy;
  auto fill = [](const std::array<mpz_class, 2>& U, bool first_free,
                 std::array<mpz_class, 3>& m, std::array<mpz_class, 3>& d) {
    m = {U[0] * U[0], U[0] * U[1], U[1] * U[1]};
    if (first_free)
      d = {2 * U[0], U[1], 0};
    else
      d = {0, U[0], 2 * U[1]};
  };
  fill(X, xa, mx, dx);
  fill(Y, ya, my, dy);

  mpz_class f = 0, fx = 0, fy = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      f += G.a[i][j] * mx[i] * my[j];
      fx += G.a[i][j] * dx[i] * my[j];
      fy += G.a[i][j] * mx[i] * dy[j];
    }
  mpz_class mod;
  mpz_pow_ui(mod.get_mpz_t(), F.p.get_mpz_t(), static_cast<unsigned long>(n));
  for (mpz_class* v : {&f, &fx, &fy}) mpz_fdiv_r(v->get_mpz_t(), v->get_mpz_t(), mod.get_mpz_t());

  const Val vf = valuation_mod(f, F.p, n);
  const Val vx = valuation_mod(fx, F.p, n);
  const Val vy = valuation_mod(fy, F.p, n);
  if (!vx.exact && !vy.exact) return false;
  const int e = std::min(vx.exact ? vx.v : INT_MAX, vy.exact ? vy.v : INT_MAX);
  if (e_out) *e_out = e;
  if (2 * e >= n) return false;
  return !vf.exact || vf.v > 2 * e;
}

}  // namespace bisol::qp
