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

#include "bisol/ff_forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace bisol::ff {

namespace {

using Grid = std::array<std::array<Elem, 3>, 3>;

struct Poly {
  int dx = 2, dy = 2;
  Grid c{};
};

Poly swap_xy(const Poly& P) {
  Poly out;
  out.dx = P.dy;
  out.dy = P.dx;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.c[i][j] = P.c[j][i];
  return out;
}

// sum_i c_i x0^(d-i) x1^i
Elem eval_binary(const Field& K, const Elem* c, int stride, int d, const Proj& x) {
  Elem acc = 0;
  for (int i = 0; i <= d; ++i) {
    Elem m = c[i * stride];
    if (m == 0) continue;
    m = K.mul(m, K.pow(x[0], static_cast<unsigned>(d - i)));
    m = K.mul(m, K.pow(x[1], static_cast<unsigned>(i)));
    acc = K.add(acc, m);
  }
  return acc;
}

bool column_vanishes(const Field& K, const Poly& P, const Proj& x) {
  for (int j = 0; j <= P.dy; ++j)
    if (eval_binary(K, &P.c[0][j], 3, P.dx, x) != 0) return false;
  return true;
}

// Divides every Y-column by the linear form vanishing at x.
void divide_x_line(const Field& K, Poly& P, const Proj& x) {
  const int d = P.dx;
  for (int j = 0; j <= P.dy; ++j) {
    std::array<Elem, 3> q{};
    if (x[0] == 0) {
      for (int i = 0; i < d; ++i) q[i] = P.c[i][j];
    } else {
      // Dehomogenize at X0 = 1 and divide by (X1 - t).
      const Elem t = x[1];
      q[d - 1] = P.c[d][j];
      for (int i = d - 1; i >= 1; --i) q[i - 1] = K.add(P.c[i][j], K.mul(t, q[i]));
    }
    for (int i = 0; i < 3; ++i) P.c[i][j] = i < d ? q[i] : 0;
  }
  P.dx = d - 1;
}

// Extracts all F_q-rational (1,0) factors; returns their multiplicities.
std::vector<int> extract_x_lines(const Field& K, Poly& P, const std::vector<Proj>& line) {
  std::vector<std::pair<Proj, int>> found;
  bool again = true;
  while (again && P.dx > 0) {
    again = false;
    for (const auto& x : line) {
      if (!column_vanishes(K, P, x)) continue;
      divide_x_line(K, P, x);
      auto it = std::find_if(found.begin(), found.end(),
                             [&](const auto& e) { return e.first == x; });
      if (it == found.end())
        found.push_back({x, 1});
      else
        ++it->second;
      again = true;
      break;
    }
  }
  std::vector<int> mult;
  for (const auto& e : found) mult.push_back(e.second);
  std::sort(mult.begin(), mult.end());
  return mult;
}

int grid_rank(const Field& K, Grid g) {
  int rank = 0;
  for (int col = 0; col < 3 && rank < 3; ++col) {
    int piv = -1;
    for (int r = rank; r < 3; ++r)
      if (g[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(g[piv], g[rank]);
    const Elem inv = K.inv(g[rank][col]);
    for (int r = 0; r < 3; ++r) {
      if (r == rank || g[r][col] == 0) continue;
      const Elem f = K.mul(g[r][col], inv);
      for (int c = 0; c < 3; ++c) g[r][c] = K.sub(g[r][c], K.mul(f, g[rank][c]));
    }
    ++rank;
  }
  return rank;
}

std::vector<Proj> roots_in_fiber(const Field& K, const Grid& c, const Proj& x,
                                 const std::vector<Proj>& line) {
  std::array<Elem, 3> g;
  for (int j = 0; j < 3; ++j) g[j] = eval_binary(K, &c[0][j], 3, 2, x);
  std::vector<Proj> roots;
  for (const auto& y : line)
    if (eval_binary(K, g.data(), 1, 2, y) == 0) roots.push_back(y);
  return roots;
}

// Whether R(X, M X) vanishes identically.
bool graph_divides(const Field& K, const Grid& c, const Mat2<Elem>& M) {
  const Elem m00 = M[0][0], m01 = M[0][1], m10 = M[1][0], m11 = M[1][1];
  Grid S;
  S[0] = {K.mul(m00, m00), K.add(K.mul(m00, m01), K.mul(m00, m01)), K.mul(m01, m01)};
  S[1] = {K.mul(m00, m10), K.add(K.mul(m00, m11), K.mul(m01, m10)), K.mul(m01, m11)};
  S[2] = {K.mul(m10, m10), K.add(K.mul(m10, m11), K.mul(m10, m11)), K.mul(m11, m11)};
  std::array<Elem, 5> quartic{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (c[i][j] == 0) continue;
      for (int k = 0; k < 3; ++k)
        quartic[i + k] = K.add(quartic[i + k], K.mul(c[i][j], S[j][k]));
    }
  for (Elem e : quartic)
    if (e != 0) return false;
  return true;
}

// A (1,1) factor of R over K, given as the matrix of its Mobius graph y = M x.
std::optional<Mat2<Elem>> find_mobius_factor(const Field& K, const Grid& c) {
  const auto line = projective_line(K);
  const Proj v0{0, 1}, v1{1, 0}, v2{1, 1};
  const auto ra = roots_in_fiber(K, c, v0, line);
  if (ra.empty()) return std::nullopt;
  const auto rb = roots_in_fiber(K, c, v1, line);
  if (rb.empty()) return std::nullopt;
  const auto rc = roots_in_fiber(K, c, v2, line);
  for (const auto& ya : ra)
    for (const auto& yb : rb) {
      const Elem det = K.sub(K.mul(yb[0], ya[1]), K.mul(yb[1], ya[0]));
      if (det == 0) continue;
      const Elem dinv = K.inv(det);
      for (const auto& yc : rc) {
        const Elem lam = K.mul(K.sub(K.mul(yc[0], ya[1]), K.mul(yc[1], ya[0])), dinv);
        const Elem mu = K.mul(K.sub(K.mul(yb[0], yc[1]), K.mul(yb[1], yc[0])), dinv);
        if (lam == 0 || mu == 0) continue;
        Mat2<Elem> M{{{K.mul(lam, yb[0]), K.mul(mu, ya[0])},
                      {K.mul(lam, yb[1]), K.mul(mu, ya[1])}}};
        if (graph_divides(K, c, M)) return M;
      }
    }
  return std::nullopt;
}

// (1,1) form det[Y | M X] of the graph y = M x.
Grid graph_form(const Field& K, const Mat2<Elem>& M) {
  Grid h{};
  h[0][0] = M[1][0];
  h[1][0] = M[1][1];
  h[0][1] = K.neg(M[0][0]);
  h[1][1] = K.neg(M[0][1]);
  return h;
}

bool proportional(const Field& K, const Grid& a, const Grid& b) {
  // a = lambda b for some nonzero lambda; both assumed nonzero.
  Elem lam = 0;
  for (int i = 0; i < 3 && lam == 0; ++i)
    for (int j = 0; j < 3 && lam == 0; ++j)
      if (b[i][j] != 0) lam = K.div(a[i][j], b[i][j]);
  if (lam == 0) return false;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (a[i][j] != K.mul(lam, b[i][j])) return false;
  return true;
}

Grid square_11(const Field& K, const Grid& h) {
  Grid s{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          s[i + k][j + l] = K.add(s[i + k][j + l], K.mul(h[i][j], h[k][l]));
  return s;
}

// Singular locus of the two conjugate components y = M x and y = conj(M) x.
Conj11Sub conj11_subtype(const Field& E, const Field& K, const Mat2<Elem>& M) {
  Mat2<Elem> Mb;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) Mb[i][j] = E.conj(M[i][j]);
  auto lin_prod = [&](Elem a0, Elem a1, Elem b0, Elem b1) {
    return std::array<Elem, 3>{E.mul(a0, b0), E.add(E.mul(a0, b1), E.mul(a1, b0)),
                               E.mul(a1, b1)};
  };
  const auto p1 = lin_prod(M[0][0], M[0][1], Mb[1][0], Mb[1][1]);
  const auto p2 = lin_prod(M[1][0], M[1][1], Mb[0][0], Mb[0][1]);
  std::array<Elem, 3> qd;
  for (int k = 0; k < 3; ++k) qd[k] = E.sub(p1[k], p2[k]);
  Elem lead = 0;
  for (Elem e : qd)
    if (e != 0) {
      lead = e;
      break;
    }
  if (lead == 0) throw std::logic_error("conjugate components coincide");
  BinaryForm f{2, {}};
  for (Elem e : qd) {
    const Elem v = E.div(e, lead);
    if (!E.in_base(v)) throw std::logic_error("singular locus not defined over base");
    f.coeffs.push_back(v);
  }
  switch (classify_binary_quadratic(K, f)) {
    case BinaryQuadraticClass::SplitDistinct: return Conj11Sub::RationalPair;
    case BinaryQuadraticClass::Irreducible: return Conj11Sub::ConjugatePair;
    case BinaryQuadraticClass::DoubleRoot: return Conj11Sub::SinglePoint;
    case BinaryQuadraticClass::Zero: break;
  }
  throw std::logic_error("degenerate singular locus");
}

enum class Residual { Const, Irred, Rank1, Prod11, Sq11, Conj, AbsIrr };

struct Decomp {
  std::vector<int> xl, yl;
  int rdx = 0, rdy = 0;
  Residual kind = Residual::Const;
  Conj11Sub sub = Conj11Sub::None;
  Grid residual{};
};

Decomp decompose(const Field& K, Poly P) {
  const auto line = projective_line(K);
  Decomp d;
  d.xl = extract_x_lines(K, P, line);
  Poly T = swap_xy(P);
  d.yl = extract_x_lines(K, T, line);
  P = swap_xy(T);
  d.rdx = P.dx;
  d.rdy = P.dy;
  d.residual = P.c;
  if (P.dx == 0 && P.dy == 0) {
    d.kind = Residual::Const;
    return d;
  }
  if (P.dx < 2 || P.dy < 2) {
    d.kind = Residual::Irred;
    return d;
  }
  if (grid_rank(K, P.c) == 1) {
    d.kind = Residual::Rank1;
    return d;
  }
  if (auto M = find_mobius_factor(K, P.c)) {
    const Grid h = graph_form(K, *M);
    d.kind = proportional(K, P.c, square_11(K, h)) ? Residual::Sq11 : Residual::Prod11;
    return d;
  }
  const Field& E = K.ext();
  if (auto M = find_mobius_factor(E, P.c)) {
    d.kind = Residual::Conj;
    d.sub = conj11_subtype(E, K, *M);
    return d;
  }
  d.kind = Residual::AbsIrr;
  return d;
}

bool same(const std::vector<int>& v, std::initializer_list<int> w) {
  return std::equal(v.begin(), v.end(), w.begin(), w.end());
}

Tag tag_from(const Decomp& d, bool& needs_singular_check) {
  needs_singular_check = false;
  const auto& X = d.xl;
  const auto& Y = d.yl;
  switch (d.kind) {
    case Residual::Const:
      if (same(X, {1, 1}) && same(Y, {1, 1})) return Tag::P10_10_01_01;
      if ((same(X, {2}) && same(Y, {1, 1})) || (same(X, {1, 1}) && same(Y, {2})))
        return Tag::P10sq_01_01;
      if (same(X, {2}) && same(Y, {2})) return Tag::P10sq_01sq;
      break;
    case Residual::Irred:
      if (d.rdx == 1 && d.rdy == 1 && same(X, {1}) && same(Y, {1})) return Tag::P11_10_01;
      if (d.rdx == 2 && d.rdy == 1 && X.empty() && same(Y, {1})) return Tag::P21_01;
      if (d.rdx == 1 && d.rdy == 2 && same(X, {1}) && Y.empty()) return Tag::P21_01;
      if (d.rdx == 2 && d.rdy == 0 && X.empty()) {
        if (same(Y, {1, 1})) return Tag::P20_01_01;
        if (same(Y, {2})) return Tag::P20_01sq;
      }
      if (d.rdx == 0 && d.rdy == 2 && Y.empty()) {
        if (same(X, {1, 1})) return Tag::P20_01_01;
        if (same(X, {2})) return Tag::P20_01sq;
      }
      break;
    case Residual::Rank1: return Tag::P20_02;
    case Residual::Prod11: return Tag::P11_11;
    case Residual::Sq11: return Tag::P11sq;
    case Residual::Conj: return Tag::Conj11;
    case Residual::AbsIrr: needs_singular_check = true; return Tag::Smooth;
  }
  throw std::logic_error("unexpected factorization pattern");
}

// Partials along the free coordinate of each factor's affine patch.
void chart_partials(const Field& K, const FfForm& F, const Proj& x, const Proj& y,
                    Elem& fx, Elem& fy) {
  // For (1:t) the free coordinate is X1, for (0:1) it is X0.
  auto deriv_row = [&](const Proj& u, int i, bool wrt_first) -> Elem {
    // d/du of u0^(2-i) u1^i, evaluated at u, with the exponent as multiplier.
    const int e0 = 2 - i, e1 = i;
    if (wrt_first) {
      if (e0 == 0) return 0;
      return K.mul(K.from_int(e0),
                   K.mul(K.pow(u[0], static_cast<unsigned>(e0 - 1)),
                         K.pow(u[1], static_cast<unsigned>(e1))));
    }
    if (e1 == 0) return 0;
    return K.mul(K.from_int(e1), K.mul(K.pow(u[0], static_cast<unsigned>(e0)),
                                       K.pow(u[1], static_cast<unsigned>(e1 - 1))));
  };
  auto mono = [&](const Proj& u, int i) {
    return K.mul(K.pow(u[0], static_cast<unsigned>(2 - i)), K.pow(u[1], static_cast<unsigned>(i)));
  };
  const bool xfirst = x[0] == 0;
  const bool yfirst = y[0] == 0;
  fx = 0;
  fy = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Elem a = F.a[i][j];
      if (a == 0) continue;
      fx = K.add(fx, K.mul(a, K.mul(deriv_row(x, i, xfirst), mono(y, j))));
      fy = K.add(fy, K.mul(a, K.mul(mono(x, i), deriv_row(y, j, yfirst))));
    }
}

}  // namespace

MonicQuadraticClass classify_monic_quadratic(const Field& K, Elem b, Elem c) {
  int roots = 0;
  for (int x = 0; x < K.q(); ++x) {
    const Elem e = static_cast<Elem>(x);
    if (K.add(K.add(K.mul(e, e), K.mul(b, e)), c) == 0) ++roots;
  }
  if (roots == 2) return MonicQuadraticClass::TwoDistinct;
  if (roots == 1) return MonicQuadraticClass::DoubleRoot;
  return MonicQuadraticClass::Conjugate;
}

BinaryQuadraticClass classify_binary_quadratic(const Field& K, const BinaryForm& f) {
  if (f.degree != 2 || f.coeffs.size() != 3)
    throw std::invalid_argument("classify_binary_quadratic: degree must be 2");
  if (f.coeffs[0] == 0 && f.coeffs[1] == 0 && f.coeffs[2] == 0)
    return BinaryQuadraticClass::Zero;
  int roots = 0;
  for (const auto& x : projective_line(K))
    if (eval_binary(K, f.coeffs.data(), 1, 2, x) == 0) ++roots;
  if (roots == 2) return BinaryQuadraticClass::SplitDistinct;
  if (roots == 1) return BinaryQuadraticClass::DoubleRoot;
  return BinaryQuadraticClass::Irreducible;
}

std::string_view tag_name(Tag t) {
  switch (t) {
    case Tag::P11_11: return "(1,1)(1,1)";
    case Tag::P21_01: return "(2,1)(0,1)|(1,2)(1,0)";
    case Tag::P11_10_01: return "(1,1)(1,0)(0,1)";
    case Tag::P10_10_01_01: return "(1,0)(1,0)(0,1)(0,1)";
    case Tag::P20_01_01: return "(2,0)(0,1)(0,1)|(0,2)(1,0)(1,0)";
    case Tag::P20_02: return "(2,0)(0,2)";
    case Tag::P10sq_01_01: return "(1,0)^2(0,1)(0,1)|(0,1)^2(1,0)(1,0)";
    case Tag::P20_01sq: return "(2,0)(0,1)^2|(0,2)(1,0)^2";
    case Tag::P11sq: return "(1,1)^2";
    case Tag::P10sq_01sq: return "(1,0)^2(0,1)^2";
    case Tag::Smooth: return "smooth";
    case Tag::AbsIrredSingular: return "abs-irreducible-singular";
    case Tag::Conj11: return "(1,1)(1,1)-conj";
  }
  return "?";
}

std::string_view sub_name(Conj11Sub s) {
  switch (s) {
    case Conj11Sub::None: return "-";
    case Conj11Sub::RationalPair: return "rational-pair";
    case Conj11Sub::ConjugatePair: return "conjugate-pair";
    case Conj11Sub::SinglePoint: return "single-point";
  }
  return "?";
}

bool type_has_smooth_point(Tag t) {
  switch (t) {
    case Tag::P20_02:
    case Tag::P20_01sq:
    case Tag::P11sq:
    case Tag::P10sq_01sq:
    case Tag::Conj11: return false;
    default: return true;
  }
}

bool is_zero(const FfForm& F) {
  for (const auto& row : F.a)
    for (Elem e : row)
      if (e != 0) return false;
  return true;
}

FactorType factorization_type(const Field& K, const FfForm& F) {
  FactorType t;
  if (is_zero(F)) {
    t.zero = true;
    return t;
  }
  Poly P;
  P.c = F.a;
  const Decomp d = decompose(K, P);
  bool check = false;
  t.tag = tag_from(d, check);
  t.sub = d.sub;
  if (check) {
    for (const auto& x : projective_line(K))
      for (const auto& y : projective_line(K))
        if (evaluate(K, F, x, y) == 0 && !is_smooth_at(K, F, x, y)) {
          t.tag = Tag::AbsIrredSingular;
          return t;
        }
  }
  return t;
}

bool is_irreducible(const Field& K, int dx, int dy, const Grid& c) {
  Poly P;
  P.dx = dx;
  P.dy = dy;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) P.c[i][j] = (i <= dx && j <= dy) ? c[i][j] : 0;
  bool nonzero = false;
  for (const auto& row : P.c)
    for (Elem e : row) nonzero |= e != 0;
  if (!nonzero || (dx == 0 && dy == 0)) return false;
  const Decomp d = decompose(K, P);
  const size_t lines = d.xl.size() + d.yl.size();
  if (d.kind == Residual::Const) return lines == 1 && (same(d.xl, {1}) || same(d.yl, {1}));
  if (lines != 0) return false;
  return d.kind == Residual::Irred || d.kind == Residual::Conj || d.kind == Residual::AbsIrr;
}

std::vector<Proj> projective_line(const Field& K) {
  std::vector<Proj> pts;
  pts.reserve(K.q() + 1);
  for (int t = 0; t < K.q(); ++t) pts.push_back({1, static_cast<Elem>(t)});
  pts.push_back({0, 1});
  return pts;
}

Elem evaluate(const Field& K, const FfForm& F, const Proj& x, const Proj& y) {
  std::array<Elem, 3> g;
  for (int j = 0; j < 3; ++j) g[j] = eval_binary(K, &F.a[0][j], 3, 2, x);
  return eval_binary(K, g.data(), 1, 2, y);
}

bool is_smooth_at(const Field& K, const FfForm& F, const Proj& x, const Proj& y) {
  Elem fx, fy;
  chart_partials(K, F, x, y, fx, fy);
  return fx != 0 || fy != 0;
}

std::vector<PointPair> points_on_curve(const Field& K, const FfForm& F) {
  std::vector<PointPair> out;
  const auto line = projective_line(K);
  for (const auto& x : line)
    for (const auto& y : line)
      if (evaluate(K, F, x, y) == 0) out.push_back({x, y, is_smooth_at(K, F, x, y)});
  return out;
}

std::optional<PointPair> has_smooth_point(const Field& K, const FfForm& F) {
  const auto line = projective_line(K);
  for (const auto& x : line)
    for (const auto& y : line)
      if (evaluate(K, F, x, y) == 0 && is_smooth_at(K, F, x, y))
        return PointPair{x, y, true};
  return std::nullopt;
}

FfForm act(const Field& K, const FfForm& F, const Mat2<Elem>& M, const Mat2<Elem>& N) {
  auto subst = [&](const Mat2<Elem>& A) {
    const Elem a00 = A[0][0], a01 = A[0][1], a10 = A[1][0], a11 = A[1][1];
    Grid S;
    S[0] = {K.mul(a00, a00), K.add(K.mul(a00, a01), K.mul(a00, a01)), K.mul(a01, a01)};
    S[1] = {K.mul(a00, a10), K.add(K.mul(a00, a11), K.mul(a01, a10)), K.mul(a01, a11)};
    S[2] = {K.mul(a10, a10), K.add(K.mul(a10, a11), K.mul(a10, a11)), K.mul(a11, a11)};
    return S;
  };
  const Grid S = subst(M), T = subst(N);
  FfForm out;
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) {
      Elem acc = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          acc = K.add(acc, K.mul(K.mul(S[i][k], F.a[i][j]), T[j][l]));
      out.a[k][l] = acc;
    }
  return out;
}

}  // namespace bisol::ff
