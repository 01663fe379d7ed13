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

// Residue-disc search for Q_p-points on a (2,2)-form.
//
// A node holds g = p^-s F o (M, N) together with the residue classes still
// allowed. Smooth points of g mod p lift by Hensel. Each singular point is
// blown up by a matrix sending the unit disc onto its residue disc, and the
// search recurses on the affine patch of the new coordinates.

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "bisol/qp_solver.hpp"

namespace bisol::qp {

namespace {

using Grid = BiForm22<mpz_class>;

struct Ctx {
  mpz_class p;
  unsigned long pl = 0;
  PowerTable pw;
  QpForm original;  // fixed precision, used for certification
  int n = 0;
  DecideOptions opts;

  explicit Ctx(const mpz_class& prime) : p(prime), pw(prime) {}
};

struct Node {
  Grid g;
  int prec = 0;
  Mat2<mpz_class> M = identity2<mpz_class>();
  Mat2<mpz_class> N = identity2<mpz_class>();
  int scale = 0;
  bool x_full = true;
  bool y_full = true;
  int depth = 0;
};

// A residue class of P^1(F_p): (t:1) when affine, (1:0) otherwise.
struct Residue {
  bool affine;
  unsigned long t;
};

void monomials_mod_p(const Residue& r, unsigned long p, unsigned long m[3],
                     unsigned long d[3]) {
  if (r.affine) {
    const unsigned long t = r.t;
    m[0] = t * t % p;
    m[1] = t;
    m[2] = 1;
    // Free coordinate X0.
    d[0] = 2 * t % p;
    d[1] = 1;
    d[2] = 0;
  } else {
    m[0] = 1;
    m[1] = 0;
    m[2] = 0;
    // Free coordinate X1.
    d[0] = 0;
    d[1] = 1;
    d[2] = 0;
  }
}

struct Eval {
  mpz_class f, fx, fy;
};

Eval evaluate(const Grid& g, const std::array<mpz_class, 2>& X, bool x_first_free,
              const std::array<mpz_class, 2>& Y, bool y_first_free) {
  const std::array<mpz_class, 3> mx{X[0] * X[0], X[0] * X[1], X[1] * X[1]};
  const std::array<mpz_class, 3> my{Y[0] * Y[0], Y[0] * Y[1], Y[1] * Y[1]};
  std::array<mpz_class, 3> dx, dy;
  if (x_first_free)
    dx = {2 * X[0], X[1], 0};
  else
    dx = {0, X[0], 2 * X[1]};
  if (y_first_free)
    dy = {2 * Y[0], Y[1], 0};
  else
    dy = {0, Y[0], 2 * Y[1]};
  Eval e{0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const mpz_class& a = g.a[i][j];
      if (a == 0) continue;
      e.f += a * mx[i] * my[j];
      e.fx += a * dx[i] * my[j];
      e.fy += a * mx[i] * dy[j];
    }
  return e;
}

void reduce(mpz_class& v, const mpz_class& mod) {
  mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
}

// Newton-lifts a smooth residue point of the node form and maps it back to
// the original coordinates.
Verdict lift_smooth(Ctx& ctx, const Node& node, const Residue& rx, const Residue& ry,
                    bool along_x) {
  const mpz_class& mod = ctx.pw[node.prec];
  // Affine (t:1) has free coordinate X0; (1:0) has free coordinate X1.
  std::array<mpz_class, 2> X = rx.affine ? std::array<mpz_class, 2>{rx.t, 1}
                                         : std::array<mpz_class, 2>{1, 0};
  std::array<mpz_class, 2> Y = ry.affine ? std::array<mpz_class, 2>{ry.t, 1}
                                         : std::array<mpz_class, 2>{1, 0};
  auto& free = along_x ? (rx.affine ? X[0] : X[1]) : (ry.affine ? Y[0] : Y[1]);

  bool converged = false;
  for (int iter = 0; iter < 2 * 64 + 8; ++iter) {
    Eval e = evaluate(node.g, X, rx.affine, Y, ry.affine);
    reduce(e.f, mod);
    if (e.f == 0) {
      converged = true;
      break;
    }
    mpz_class d = along_x ? e.fx : e.fy;
    reduce(d, mod);
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), mod.get_mpz_t()) == 0)
      throw std::logic_error("Newton step at a non-smooth point");
    free -= e.f * inv;
    reduce(free, mod);
  }
  if (!converged) return Undetermined{UndeterminedReason::Precision};

  const mpz_class& modN = ctx.pw[ctx.n];
  std::array<mpz_class, 2> Xo{node.M[0][0] * X[0] + node.M[0][1] * X[1],
                              node.M[1][0] * X[0] + node.M[1][1] * X[1]};
  std::array<mpz_class, 2> Yo{node.N[0][0] * Y[0] + node.N[0][1] * Y[1],
                              node.N[1][0] * Y[0] + node.N[1][1] * Y[1]};
  for (auto* v : {&Xo[0], &Xo[1], &Yo[0], &Yo[1]}) reduce(*v, modN);

  auto to_patch = [&](const std::array<mpz_class, 2>& V, bool& second_fixed) {
    mpz_class inv, out;
    second_fixed = mpz_divisible_p(V[1].get_mpz_t(), ctx.p.get_mpz_t()) == 0;
    const mpz_class& unit = second_fixed ? V[1] : V[0];
    const mpz_class& other = second_fixed ? V[0] : V[1];
    if (mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), modN.get_mpz_t()) == 0)
      throw std::logic_error("lifted point is not primitive");
    out = other * inv;
    reduce(out, modN);
    return out;
  };
  bool x1_fixed = false, y1_fixed = false;
  Witness w;
  w.x = to_patch(Xo, x1_fixed);
  w.y = to_patch(Yo, y1_fixed);
  w.patch = x1_fixed ? (y1_fixed ? Patch::X1Y1 : Patch::X1Y0)
                     : (y1_fixed ? Patch::X0Y1 : Patch::X0Y0);
  w.precision = ctx.n;
  if (!certify_witness(ctx.original, w.patch, w.x, w.y, &w.e))
    return Undetermined{UndeterminedReason::Precision};
  return Soluble{std::move(w)};
}

Verdict explore(Ctx& ctx, Node node) {
  if (node.depth > ctx.opts.max_depth) return Undetermined{UndeterminedReason::Depth};
  const unsigned long p = ctx.pl;

  // Content.
  unsigned long r[3][3];
  bool unit = false;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      r[i][j] = mpz_fdiv_ui(node.g.a[i][j].get_mpz_t(), p);
      unit |= r[i][j] != 0;
    }
  if (!unit) {
    int c = INT_MAX;
    for (const auto& row : node.g.a)
      for (const auto& v : row) {
        const Val val = valuation_mod(v, ctx.p, node.prec);
        if (val.exact) c = std::min(c, val.v);
      }
    if (c == INT_MAX) return Undetermined{UndeterminedReason::Precision};
    const mpz_class& pc = ctx.pw[c];
    for (auto& row : node.g.a)
      for (auto& v : row) {
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), pc.get_mpz_t());
      }
    node.prec -= c;
    node.scale += c;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r[i][j] = mpz_fdiv_ui(node.g.a[i][j].get_mpz_t(), p);
  }

  std::vector<Residue> xs, ys;
  xs.reserve(p + 1);
  for (unsigned long t = 0; t < p; ++t) xs.push_back({true, t});
  ys = xs;
  if (node.x_full) xs.push_back({false, 0});
  if (node.y_full) ys.push_back({false, 0});

  std::vector<std::pair<Residue, Residue>> singular;
  unsigned long my[3], dy[3];
  std::vector<std::array<unsigned long, 6>> ytab;
  ytab.reserve(ys.size());
  for (const auto& ry : ys) {
    monomials_mod_p(ry, p, my, dy);
    ytab.push_back({my[0], my[1], my[2], dy[0], dy[1], dy[2]});
  }
  for (const auto& rx : xs) {
    unsigned long mx[3], dx[3];
    monomials_mod_p(rx, p, mx, dx);
    unsigned long G[3], Gd[3];
    for (int j = 0; j < 3; ++j) {
      G[j] = (r[0][j] * mx[0] + r[1][j] * mx[1] + r[2][j] * mx[2]) % p;
      Gd[j] = (r[0][j] * dx[0] + r[1][j] * dx[1] + r[2][j] * dx[2]) % p;
    }
    for (size_t k = 0; k < ys.size(); ++k) {
      const auto& t = ytab[k];
      const unsigned long val = (G[0] * t[0] + G[1] * t[1] + G[2] * t[2]) % p;
      if (val != 0) continue;
      const unsigned long fx = (Gd[0] * t[0] + Gd[1] * t[1] + Gd[2] * t[2]) % p;
      const unsigned long fy = (G[0] * t[3] + G[1] * t[4] + G[2] * t[5]) % p;
      if (fx != 0 || fy != 0) return lift_smooth(ctx, node, rx, ys[k], fx != 0);
      singular.push_back({rx, ys[k]});
    }
  }
  if (singular.empty()) return Insoluble{};

  // Blow up each singular residue class.
  const mpz_class& mod = ctx.pw[node.prec];
  auto disc_matrix = [&](const Residue& res) {
    Mat2<mpz_class> B;
    if (res.affine)
      B = {{{ctx.p, res.t}, {0, 1}}};
    else
      B = {{{0, 1}, {ctx.p, 0}}};
    return B;
  };
  bool undetermined = false;
  Undetermined first_undetermined;
  for (const auto& [rx, ry] : singular) {
    const Mat2<mpz_class> Bx = disc_matrix(rx);
    const Mat2<mpz_class> By = disc_matrix(ry);
    Node child;
    child.g = act(node.g, Bx, By);
    for (auto& row : child.g.a)
      for (auto& v : row) reduce(v, mod);
    child.prec = node.prec;
    child.M = mat_mul(node.M, Bx);
    child.N = mat_mul(node.N, By);
    child.scale = node.scale;
    child.x_full = false;
    child.y_full = false;
    child.depth = node.depth + 1;
    Verdict v = explore(ctx, std::move(child));
    if (std::holds_alternative<Soluble>(v)) return v;
    if (auto* u = std::get_if<Undetermined>(&v); u && !undetermined) {
      undetermined = true;
      first_undetermined = *u;
    }
  }
  if (undetermined) return first_undetermined;
  return Insoluble{};
}

bool all_known_zero(const QpForm& F) {
  for (const auto& row : F.a)
    for (const auto& c : row)
      if (!c.source || !c.source->known_zero()) return false;
  return true;
}

}  // namespace

Verdict decide_local(const LocalProblem& problem, const DecideOptions& opts) {
  const QpForm& F = problem.form;
  if (!mpz_fits_ulong_p(F.p.get_mpz_t()) || F.p > 1000000)
    throw SolverError(SolverError::Kind::InvalidInput, "decide_qp: p too large");
  const bool extendable = F.extendable();
  int n = F.precision();
  if (n < 1) n = 1;
  for (;;) {
    Ctx ctx(F.p);
    ctx.pl = F.p.get_ui();
    ctx.opts = opts;
    ctx.n = n;
    ctx.original = F.at_precision(n);

    Node root;
    bool nonzero = false;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        root.g.a[i][j] = ctx.original.a[i][j].value;
        nonzero |= root.g.a[i][j] != 0;
      }
    for (auto& row : ctx.original.a)
      for (auto& c : row) c.source.reset();

    if (!nonzero) {
      if (!extendable || all_known_zero(F) || 2 * n > opts.max_precision)
        throw SolverError(SolverError::Kind::AllZero, "all coefficients vanish");
      n *= 2;
      continue;
    }
    root.prec = n;
    root.scale = problem.scale;
    root.x_full = problem.x_allowed == Allowed::Full;
    root.y_full = problem.y_allowed == Allowed::Full;
    root.depth = problem.depth;

    Verdict v = explore(ctx, std::move(root));
    const auto* u = std::get_if<Undetermined>(&v);
    if (u && u->reason == UndeterminedReason::Precision && extendable &&
        2 * n <= opts.max_precision) {
      n *= 2;
      continue;
    }
    return v;
  }
}

Verdict decide_qp(const QpForm& F, const DecideOptions& opts) {
  return decide_local(LocalProblem{F, Allowed::Full, Allowed::Full, 0, 0}, opts);
}

}  // namespace bisol::qp
