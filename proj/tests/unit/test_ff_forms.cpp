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

#include <random>

#include "bisol/ff_forms.hpp"
#include "doctest.h"

using namespace bisol;
using namespace bisol::ff;

namespace {

const int kFields[] = {2, 3, 4, 5, 7, 8, 9, 16, 25};

FfForm form(const Field& K, std::array<long, 9> c) {
  FfForm F;
  for (int k = 0; k < 9; ++k) F.a[k / 3][k % 3] = K.from_int(c[k]);
  return F;
}

// The form with index n in base q.
FfForm nth_form(int q, long n) {
  FfForm F;
  for (int k = 0; k < 9; ++k) {
    F.a[k / 3][k % 3] = static_cast<Elem>(n % q);
    n /= q;
  }
  return F;
}

long power(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Mat2<Elem> random_invertible(const Field& K, std::mt19937_64& g) {
  for (;;) {
    Mat2<Elem> M;
    for (auto& row : M)
      for (auto& e : row) e = static_cast<Elem>(g() % K.q());
    if (K.sub(K.mul(M[0][0], M[1][1]), K.mul(M[0][1], M[1][0])) != 0) return M;
  }
}

}  // namespace

TEST_SUITE("ff_forms") {
  TEST_CASE("field axioms") {
    for (int q : kFields) {
      const Field& K = Field::get(q);
      CHECK(K.q() == q);
      for (int a = 0; a < q; ++a) {
        const Elem x = static_cast<Elem>(a);
        CHECK(K.add(x, 0) == x);
        CHECK(K.mul(x, 1) == x);
        CHECK(K.add(x, K.neg(x)) == 0);
        if (x != 0) {
          CHECK(K.mul(x, K.inv(x)) == 1);
          CHECK(K.antilog(K.log(x)) == x);
          CHECK(K.pow(x, static_cast<unsigned>(q - 1)) == 1);
        }
        for (int b = 0; b < q; ++b) {
          const Elem y = static_cast<Elem>(b);
          CHECK(K.add(x, y) == K.add(y, x));
          CHECK(K.mul(x, y) == K.mul(y, x));
          for (int c = 0; c < q; c += 3) {
            const Elem z = static_cast<Elem>(c);
            CHECK(K.mul(x, K.add(y, z)) == K.add(K.mul(x, y), K.mul(x, z)));
            CHECK(K.mul(x, K.mul(y, z)) == K.mul(K.mul(x, y), z));
          }
        }
      }
      // Characteristic.
      Elem s = 0;
      for (int k = 0; k < K.p(); ++k) s = K.add(s, 1);
      CHECK(s == 0);
    }
  }

  TEST_CASE("extension fields embed their base") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
      const Field& K = Field::get(q);
      const Field& L = K.ext();
      CHECK(L.q() == q * q);
      CHECK(L.base_q() == q);
      for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
          const Elem x = static_cast<Elem>(a), y = static_cast<Elem>(b);
          CHECK(L.add(x, y) == K.add(x, y));
          CHECK(L.mul(x, y) == K.mul(x, y));
        }
      for (int a = 0; a < L.q(); ++a) {
        const Elem x = static_cast<Elem>(a);
        CHECK(L.conj(x) == L.pow(x, static_cast<unsigned>(q)));
        CHECK(L.in_base(L.mul(x, L.conj(x))));
      }
    }
  }

  TEST_CASE("unsupported fields") {
    CHECK_THROWS_AS(Field::get(6), UnsupportedField);
    CHECK_THROWS_AS(Field::get(11), UnsupportedField);
    CHECK_THROWS_AS(Field::get(1), UnsupportedField);
  }

  TEST_CASE("monic quadratic counts") {
    const Field& K3 = Field::get(3);
    CHECK(classify_monic_quadratic(K3, 0, K3.from_int(-1)) == MonicQuadraticClass::TwoDistinct);
    CHECK(classify_monic_quadratic(K3, 0, 1) == MonicQuadraticClass::Conjugate);
    for (int q : kFields) {
      const Field& K = Field::get(q);
      long two = 0, conj = 0, dbl = 0;
      for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c) {
          switch (classify_monic_quadratic(K, static_cast<Elem>(b), static_cast<Elem>(c))) {
            case MonicQuadraticClass::TwoDistinct: ++two; break;
            case MonicQuadraticClass::Conjugate: ++conj; break;
            case MonicQuadraticClass::DoubleRoot: ++dbl; break;
          }
        }
      CHECK(two == q * (q - 1) / 2);
      CHECK(conj == q * (q - 1) / 2);
      CHECK(dbl == q);
    }
  }

  TEST_CASE("binary quadratic counts") {
    const Field& K3 = Field::get(3);
    CHECK(classify_binary_quadratic(K3, BinaryForm{2, {0, 1, 0}}) == BinaryQuadraticClass::SplitDistinct);
    CHECK(classify_binary_quadratic(K3, BinaryForm{2, {1, 0, 1}}) == BinaryQuadraticClass::Irreducible);
    for (int q : kFields) {
      const Field& K = Field::get(q);
      long split = 0, irr = 0, dbl = 0, zero = 0;
      for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
          for (int c = 0; c < q; ++c) {
            const BinaryForm f{2, {static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(c)}};
            switch (classify_binary_quadratic(K, f)) {
              case BinaryQuadraticClass::SplitDistinct: ++split; break;
              case BinaryQuadraticClass::Irreducible: ++irr; break;
              case BinaryQuadraticClass::DoubleRoot: ++dbl; break;
              case BinaryQuadraticClass::Zero: ++zero; break;
            }
          }
      CHECK(split == (q - 1) * (q + 1) * q / 2);
      CHECK(irr == (q - 1) * (q * q - q) / 2);
      CHECK(dbl == (q - 1) * (q + 1));
      CHECK(zero == 1);
    }
  }

  TEST_CASE("factorization type examples") {
    const Field& K3 = Field::get(3);
    CHECK(factorization_type(K3, form(K3, {1, 0, 1, 0, 0, 0, 1, 0, 1})).tag == Tag::P20_02);
    CHECK(factorization_type(K3, form(K3, {1, 0, 0, 0, 0, 0, 0, 0, 0})).tag == Tag::P10sq_01sq);
    CHECK(factorization_type(K3, FfForm{}).zero);

    // f(X0 Y1, X1 Y0) with f = Z0^2 + Z0 Z1 + Z1^2 over F_2.
    const Field& K2 = Field::get(2);
    const FactorType t = factorization_type(K2, form(K2, {0, 0, 1, 0, 1, 0, 1, 0, 0}));
    CHECK(t.tag == Tag::Conj11);
    CHECK(t.sub == Conj11Sub::RationalPair);
  }

  TEST_CASE("points on curve examples") {
    const Field& K3 = Field::get(3);
    CHECK(points_on_curve(K3, form(K3, {1, 0, 1, 0, 0, 0, 1, 0, 1})).empty());

    const Field& K2 = Field::get(2);
    const auto pts2 = points_on_curve(K2, form(K2, {1, 0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(pts2.size() == 5);
    for (const auto& pt : pts2) CHECK_FALSE(pt.smooth);

    const auto pts3 = points_on_curve(K3, form(K3, {0, 0, 0, 0, 1, 0, 0, 0, 0}));
    CHECK(pts3.size() == 12);
    long singular = 0;
    for (const auto& pt : pts3) singular += !pt.smooth;
    CHECK(singular == 4);
  }

  TEST_CASE("projective line") {
    for (int q : kFields) CHECK(projective_line(Field::get(q)).size() == static_cast<size_t>(q + 1));
  }

  TEST_CASE("smooth point examples") {
    const Field& K3 = Field::get(3);
    CHECK_FALSE(has_smooth_point(K3, form(K3, {0, 0, 1, 0, -2, 0, 1, 0, 0})).has_value());
    // (X0 Y0 + X1 Y1)(X0 Y1 + X1 Y0 + X1 Y1) over F_2.
    const Field& K2 = Field::get(2);
    const FfForm F = form(K2, {0, 1, 0, 1, 1, 1, 0, 1, 1});
    CHECK(factorization_type(K2, F).tag == Tag::P11_11);
    const auto pt = has_smooth_point(K2, F);
    REQUIRE(pt.has_value());
    CHECK(evaluate(K2, F, pt->x, pt->y) == 0);
    CHECK(is_smooth_at(K2, F, pt->x, pt->y));
  }

  TEST_CASE("smooth points follow the factorization type") {
    // Exhaustive over F_2 and F_3.
    for (int q : {2, 3}) {
      const Field& K = Field::get(q);
      const long total = power(q, 9);
      for (long n = 1; n < total; ++n) {
        const FfForm F = nth_form(q, n);
        const FactorType t = factorization_type(K, F);
        const bool has = has_smooth_point(K, F).has_value();
        if (t.tag == Tag::AbsIrredSingular || t.tag == Tag::Smooth) {
          CHECK(has);
        } else {
          CHECK(has == type_has_smooth_point(t.tag));
        }
      }
    }
  }

  TEST_CASE("points agree with direct evaluation") {
    std::mt19937_64 g(1);
    for (int q : {4, 5, 7, 9}) {
      const Field& K = Field::get(q);
      const auto line = projective_line(K);
      for (int trial = 0; trial < 50; ++trial) {
        const FfForm F = nth_form(q, static_cast<long>(g() % static_cast<unsigned long>(power(q, 9))));
        std::size_t zeros = 0, smooth = 0;
        for (const auto& x : line)
          for (const auto& y : line)
            if (evaluate(K, F, x, y) == 0) {
              ++zeros;
              smooth += is_smooth_at(K, F, x, y);
            }
        const auto pts = points_on_curve(K, F);
        CHECK(pts.size() == zeros);
        std::size_t s = 0;
        for (const auto& pt : pts) s += pt.smooth;
        CHECK(s == smooth);
        CHECK(has_smooth_point(K, F).has_value() == (smooth > 0));
      }
    }
  }

  TEST_CASE("invariance under GL2 x GL2 and transpose") {
    std::mt19937_64 g(2);
    for (int q : {2, 3, 4, 5, 7}) {
      const Field& K = Field::get(q);
      for (int trial = 0; trial < 200; ++trial) {
        const FfForm F = nth_form(q, static_cast<long>(g() % static_cast<unsigned long>(power(q, 9))));
        const FactorType t = factorization_type(K, F);
        const FfForm G = act(K, F, random_invertible(K, g), random_invertible(K, g));
        CHECK(factorization_type(K, G) == t);
        CHECK(factorization_type(K, transpose(F)) == t);
        CHECK(points_on_curve(K, G).size() == points_on_curve(K, F).size());
      }
    }
  }

  TEST_CASE("irreducibility of small bidegrees") {
    const Field& K3 = Field::get(3);
    std::array<std::array<Elem, 3>, 3> c{};
    // X0^2 + X1^2 over F_3.
    c[0][0] = 1;
    c[2][0] = 1;
    CHECK(is_irreducible(K3, 2, 0, c));
    // X0 X1 is reducible.
    c = {};
    c[1][0] = 1;
    CHECK_FALSE(is_irreducible(K3, 2, 0, c));
    // X0 Y0 + X1 Y1 is irreducible; X0 Y0 is not.
    c = {};
    c[0][0] = 1;
    c[1][1] = 1;
    CHECK(is_irreducible(K3, 1, 1, c));
    c[1][1] = 0;
    CHECK_FALSE(is_irreducible(K3, 1, 1, c));
  }
}
