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

#ifndef BISOL_FORM_HPP
#define BISOL_FORM_HPP

#include <array>

namespace bisol {

/// Bidegree (2,2) form over a coefficient ring R.
///
/// a[i][j] is the coefficient of X0^(2-i) X1^i Y0^(2-j) Y1^j.
template <class R>
struct BiForm22 {
  std::array<std::array<R, 3>, 3> a{};

  R& operator()(int i, int j) { return a[i][j]; }
  const R& operator()(int i, int j) const { return a[i][j]; }

  friend bool operator==(const BiForm22&, const BiForm22&) = default;
};

template <class R>
using Mat2 = std::array<std::array<R, 2>, 2>;

template <class R>
Mat2<R> identity2() {
  return {{{R(1), R(0)}, {R(0), R(1)}}};
}

template <class R>
Mat2<R> mat_mul(const Mat2<R>& A, const Mat2<R>& B) {
  Mat2<R> C;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) C[i][j] = A[i][0] * B[0][j] + A[i][1] * B[1][j];
  return C;
}

/// Matrix of the substitution X -> M X on binary quadratic monomials:
/// X0^(2-i) X1^i maps to sum_k S[i][k] X0^(2-k) X1^k.
template <class R>
std::array<std::array<R, 3>, 3> quadratic_substitution(const Mat2<R>& M) {
  const R& m00 = M[0][0];
  const R& m01 = M[0][1];
  const R& m10 = M[1][0];
  const R& m11 = M[1][1];
  std::array<std::array<R, 3>, 3> S;
  S[0] = {m00 * m00, R(2) * m00 * m01, m01 * m01};
  S[1] = {m00 * m10, m00 * m11 + m01 * m10, m01 * m11};
  S[2] = {m10 * m10, R(2) * m10 * m11, m11 * m11};
  return S;
}

/// F o (M, N): X replaced by M X and Y by N Y.
template <class R>
BiForm22<R> act(const BiForm22<R>& F, const Mat2<R>& M, const Mat2<R>& N) {
  const auto S = quadratic_substitution(M);
  const auto T = quadratic_substitution(N);
  std::array<std::array<R, 3>, 3> tmp;
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < 3; ++j) {
      R acc(0);
      for (int i = 0; i < 3; ++i) acc += S[i][k] * F.a[i][j];
      tmp[k][j] = acc;
    }
  BiForm22<R> out;
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) {
      R acc(0);
      for (int j = 0; j < 3; ++j) acc += tmp[k][j] * T[j][l];
      out.a[k][l] = acc;
    }
  return out;
}

/// Swaps the two P^1 factors.
template <class R>
BiForm22<R> transpose(const BiForm22<R>& F) {
  BiForm22<R> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.a[i][j] = F.a[j][i];
  return out;
}

}  // namespace bisol

#endif  // BISOL_FORM_HPP
