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

#ifndef BISOL_FF_FORMS_HPP
#define BISOL_FF_FORMS_HPP

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "bisol/field.hpp"
#include "bisol/form.hpp"

namespace bisol::ff {

using FfForm = BiForm22<Elem>;
using Proj = std::array<Elem, 2>;

/// Binary form; coeffs[i] multiplies X0^(d-i) X1^i.
struct BinaryForm {
  int degree = 0;
  std::vector<Elem> coeffs;
};

enum class MonicQuadraticClass { TwoDistinct, Conjugate, DoubleRoot };
enum class BinaryQuadraticClass { SplitDistinct, Irreducible, DoubleRoot, Zero };

/// X^2 + b X + c.
MonicQuadraticClass classify_monic_quadratic(const Field& K, Elem b, Elem c);
BinaryQuadraticClass classify_binary_quadratic(const Field& K, const BinaryForm& f);

enum class Tag {
  P11_11,        // (1,1)(1,1)
  P21_01,        // (2,1)(0,1) | (1,2)(1,0)
  P11_10_01,     // (1,1)(1,0)(0,1)
  P10_10_01_01,  // (1,0)(1,0)(0,1)(0,1)
  P20_01_01,     // (2,0)(0,1)(0,1) | (0,2)(1,0)(1,0)
  P20_02,        // (2,0)(0,2)
  P10sq_01_01,   // (1,0)^2(0,1)(0,1) | (0,1)^2(1,0)(1,0)
  P20_01sq,      // (2,0)(0,1)^2 | (0,2)(1,0)^2
  P11sq,         // (1,1)^2
  P10sq_01sq,    // (1,0)^2(0,1)^2
  Smooth,
  AbsIrredSingular,
  Conj11,
};
inline constexpr int kTagCount = 13;

enum class Conj11Sub { None, RationalPair, ConjugatePair, SinglePoint };

struct FactorType {
  Tag tag = Tag::Smooth;
  Conj11Sub sub = Conj11Sub::None;
  bool zero = false;

  friend bool operator==(const FactorType&, const FactorType&) = default;
};

std::string_view tag_name(Tag t);
std::string_view sub_name(Conj11Sub s);

/// Whether forms of this type always (true) or never (false) have a
/// smooth F_q-point.
bool type_has_smooth_point(Tag t);

FactorType factorization_type(const Field& K, const FfForm& F);

struct PointPair {
  Proj x{};
  Proj y{};
  bool smooth = false;
};

/// All points of P^1(F_q) with first nonzero coordinate 1: (1:t) then (0:1).
std::vector<Proj> projective_line(const Field& K);

Elem evaluate(const Field& K, const FfForm& F, const Proj& x, const Proj& y);
bool is_smooth_at(const Field& K, const FfForm& F, const Proj& x, const Proj& y);

std::vector<PointPair> points_on_curve(const Field& K, const FfForm& F);
std::optional<PointPair> has_smooth_point(const Field& K, const FfForm& F);

bool is_zero(const FfForm& F);

/// F o (M, N) over F_q.
FfForm act(const Field& K, const FfForm& F, const Mat2<Elem>& M, const Mat2<Elem>& N);

/// Irreducibility over F_q of a form of bidegree (dx, dy) with dx, dy <= 2.
/// c[i][j] multiplies X0^(dx-i) X1^i Y0^(dy-j) Y1^j.
bool is_irreducible(const Field& K, int dx, int dy,
                    const std::array<std::array<Elem, 3>, 3>& c);

}  // namespace bisol::ff

#endif  // BISOL_FF_FORMS_HPP
