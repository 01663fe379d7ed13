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

#include "bisol/qp_solver.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bisol;
using namespace bisol::qp;

namespace {

BiForm22<mpz_class> form(std::array<long, 9> c) {
  BiForm22<mpz_class> F;
  for (int k = 0; k < 9; ++k) F.a[k / 3][k % 3] = c[k];
  return F;
}

Outcome decide(const BiForm22<mpz_class>& F, unsigned long p, int n = 16) {
  return outcome(decide_qp(QpForm::exact(F, p, n)));
}

Outcome from_oracle(oracle::Verdict v) {
  switch (v) {
    case oracle::Verdict::Soluble: return Outcome::Soluble;
    case oracle::Verdict::Insoluble: return Outcome::Insoluble;
    default: return Outcome::Undetermined;
  }
}

// Random matrix over Z with determinant prime to p.
Mat2<mpz_class> unimodular_mod(std::mt19937_64& g, unsigned long p) {
  for (;;) {
    Mat2<mpz_class> M;
    for (auto& row : M)
      for (auto& e : row) e = static_cast<long>(g() % 19) - 9;
    const mpz_class det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
    if (mpz_divisible_ui_p(det.get_mpz_t(), p) == 0) return M;
  }
}

}  // namespace

TEST_SUITE("qp_solver") {
  TEST_CASE("valuation grid and normalize") {
    QpForm F = QpForm::fixed(form({4, 1, 1, 1, 1, 1, 1, 1, 1}), 2, 6);
    const ValuationGrid g = valuation_grid(F);
    CHECK(g[0][0] == Val{2, true});
    CHECK(g[1][1] == Val{0, true});

    const ValuationGrid h = valuation_grid(QpForm::fixed(form({1, 1, 1, 1, 1, 1, 1, 1, 625}), 5, 4));
    CHECK(h[2][2] == Val{4, false});

    auto [G, scale] = normalize(QpForm::fixed(form({3, 6, 9, 3, 3, 3, 3, 3, 12}), 3, 5));
    CHECK(scale == 1);
    CHECK(G.precision() == 4);
    CHECK(G.a[0][1].value == 2);

    auto [H, s0] = normalize(QpForm::fixed(form({1, 2, 3, 4, 5, 6, 7, 8, 9}), 3, 5));
    CHECK(s0 == 0);
    CHECK(H.residues() == form({1, 2, 3, 4, 5, 6, 7, 8, 9}));

    CHECK_THROWS_AS(normalize(QpForm::fixed(form({27, 0, 0, 0, 0, 0, 0, 0, 0}), 3, 3)), SolverError);
  }

  TEST_CASE("act") {
    const auto F = form({1, 0, 0, 0, 0, 0, 0, 0, 0});
    const Mat2<mpz_class> I = identity2<mpz_class>();
    const Mat2<mpz_class> S{{{0, 1}, {1, 0}}};
    const Mat2<mpz_class> D{{{5, 0}, {0, 1}}};
    CHECK(act(F, I, I) == F);
    CHECK(act(F, S, S) == form({0, 0, 0, 0, 0, 0, 0, 0, 1}));
    CHECK(act(F, D, I) == form({25, 0, 0, 0, 0, 0, 0, 0, 0}));
  }

  TEST_CASE("decide examples") {
    const Verdict v = decide_qp(QpForm::exact(form({1, 0, 0, 0, 0, 0, 0, 0, -1}), 5, 8));
    REQUIRE(std::holds_alternative<Soluble>(v));
    CHECK(decide(form({1, 0, 1, 0, 0, 0, 1, 0, 1}), 3) == Outcome::Insoluble);
    const auto F = form({1, 2, 2, 2, 2, 2, 2, 2, 6});
    CHECK(decide(F, 2) == from_oracle(oracle::brute_force_qp(F, 2, 16)));
  }

  TEST_CASE("witnesses pass the Hensel certificate") {
    for (unsigned long p : {2ul, 3ul, 5ul})
      for (std::uint64_t i = 0; i < 60; ++i) {
        const auto F = oracle::random_test_form(11, i, p, 12);
        const QpForm Q = QpForm::fixed(F, p, 12);
        const Verdict v = decide_qp(Q);
        if (const auto* s = std::get_if<Soluble>(&v)) {
          CHECK(certify_witness(Q, s->witness.patch, s->witness.x, s->witness.y));
        }
      }
  }

  TEST_CASE("certificate with e = 1 at p = 2 against enumeration") {
    // (X0^2 - 17 X1^2) Y1^2: at odd x the x-partial has valuation 1.
    const auto F = form({0, 0, 1, 0, 0, 0, 0, 0, -17});
    const QpForm Q = QpForm::fixed(F, 2, 5);
    int certified = 0;
    for (long x = 0; x < 32; ++x)
      for (long y = 0; y < 32; ++y) {
        // Independent evaluation on the (x : 1), (y : 1) patch.
        const mpz_class X = x, Y = y;
        const mpz_class f = F.a[0][0] * X * X * Y * Y + F.a[0][2] * X * X + F.a[2][0] * Y * Y + F.a[2][2];
        const mpz_class fx = 2 * X * (F.a[0][0] * Y * Y + F.a[0][2]);
        const mpz_class fy = 2 * Y * (F.a[0][0] * X * X + F.a[2][0]);
        auto v = [](mpz_class z) {
          z %= 32;
          if (z < 0) z += 32;
          int k = 0;
          while (k < 5 && mpz_divisible_ui_p(z.get_mpz_t(), 2)) {
            if (z == 0) return 5;
            z /= 2;
            ++k;
          }
          return k;
        };
        const int e = std::min(v(fx), v(fy));
        const bool expect = 2 * e < 5 && v(f) > 2 * e;
        int e_out = -1;
        CHECK(certify_witness(Q, Patch::X1Y1, X, Y, &e_out) == expect);
        certified += expect && e == 1;
      }
    CHECK(certified > 0);
  }

  TEST_CASE("brute-force oracle agreement") {
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
      int decided = 0;
      for (std::uint64_t i = 0; i < 60; ++i) {
        const auto F = oracle::random_test_form(3, i, p, 12);
        const Outcome o = from_oracle(oracle::brute_force_qp(F, p, 12));
        const Outcome s = outcome(decide_qp(QpForm::fixed(F, p, 12)));
        if (o == Outcome::Undetermined || s == Outcome::Undetermined) continue;
        ++decided;
        CHECK(o == s);
      }
      CHECK(decided >= 50);
    }
  }

  TEST_CASE("invariance under coordinate change, scaling and transpose") {
    std::mt19937_64 g(5);
    for (unsigned long p : {2ul, 3ul, 5ul})
      for (std::uint64_t i = 0; i < 40; ++i) {
        const auto F = oracle::random_small_form(17, i + 100 * p, 6);
        const Outcome base = decide(F, p);
        REQUIRE(base != Outcome::Undetermined);
        CHECK(decide(act(F, unimodular_mod(g, p), unimodular_mod(g, p)), p) == base);
        CHECK(decide(transpose(F), p) == base);
        BiForm22<mpz_class> G = F;
        const long unit = p == 2 ? 3 : static_cast<long>(p - 1);
        for (auto& row : G.a)
          for (auto& c : row) c *= unit * static_cast<long>(p * p);
        CHECK(decide(G, p, 20) == base);
      }
  }

  TEST_CASE("local problems restrict residue classes") {
    // X0^2 Y0^2 - X1^2 Y1^2 has points with X1, Y1 units.
    LocalProblem lp{QpForm::exact(form({1, 0, 0, 0, 0, 0, 0, 0, -1}), 3, 8), Allowed::Affine,
                    Allowed::Affine};
    CHECK(outcome(decide_local(lp)) == Outcome::Soluble);
    // X1^2 Y1^2 vanishes only where X1 or Y1 does.
    LocalProblem lq{QpForm::exact(form({0, 0, 0, 0, 0, 0, 0, 0, 1}), 3, 8), Allowed::Affine,
                    Allowed::Affine};
    CHECK(outcome(decide_local(lq)) == Outcome::Insoluble);
  }

  TEST_CASE("phi") {
    const auto G = phi(form({1, 0, 0, 0, 1, 0, 0, 0, 1}));
    CHECK(G.g2 == std::array<mpz_class, 3>{0, 1, 0});
    CHECK(G.g4 == std::array<mpz_class, 5>{0, 0, -1, 0, 0});
    const auto Z = phi(form({1, 0, 0, 0, 0, 0, 0, 0, 0}));
    for (const auto& c : Z.g2) CHECK(c == 0);
    for (const auto& c : Z.g4) CHECK(c == 0);
    // (X0 Y1 - X1 Y0)^2 gives (Z - X0 X1)^2 = 0, equivalent to Z^2 = 0.
    const auto F = form({0, 0, 1, 0, -2, 0, 1, 0, 0});
    const auto W = phi(F);
    CHECK(W.g2 == std::array<mpz_class, 3>{0, -2, 0});
    CHECK(W.g4 == std::array<mpz_class, 5>{0, 0, -1, 0, 0});
    for (const auto& c : projection_quartic(F)) CHECK(c == 0);
  }

  TEST_CASE("decide_gbq examples") {
    GenBinaryQuartic<mpz_class> a;
    a.g4 = {1, 0, 0, 0, 0};
    CHECK(outcome(decide_gbq_exact(a, 7)) == Outcome::Soluble);
    GenBinaryQuartic<mpz_class> b;
    b.g4 = {-1, 0, -2, 0, -1};
    CHECK(outcome(decide_gbq_exact(b, 3)) == Outcome::Insoluble);
  }

  TEST_CASE("phi preserves solubility") {
    for (unsigned long p : {2ul, 3ul, 5ul}) {
      int decided = 0;
      for (std::uint64_t i = 0; i < 200; ++i) {
        const QpForm Q = QpForm::fixed(oracle::random_test_form(23, i, p, 20), p, 20);
        const Outcome a = outcome(decide_qp(Q));
        const Outcome b = outcome(decide_gbq(phi(Q)));
        if (a == Outcome::Undetermined || b == Outcome::Undetermined) continue;
        ++decided;
        CHECK(a == b);
      }
      CHECK(decided >= 180);
    }
  }

  TEST_CASE("gbq methods agree") {
    for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 67ul, 101ul})
      for (std::uint64_t i = 0; i < 80; ++i) {
        const auto G = phi(oracle::random_small_form(29, i + 1000 * p, 10));
        const Outcome a = outcome(decide_gbq_exact(G, p, {}, GbqMethod::DiscSubdivision));
        const Outcome b = outcome(decide_gbq_exact(G, p, {}, GbqMethod::RootRecursion));
        CHECK(a == b);
      }
  }

  TEST_CASE("discriminant") {
    CHECK(discriminant(form({1, 0, 0, 0, 0, 0, 0, 0, -1})) == 0);
    CHECK(discriminant(form({0, 0, 1, 0, -2, 0, 1, 0, 0})) == 0);
    CHECK(discriminant(form({1, 0, 1, 0, 0, 0, 1, 0, -1})) != 0);
    // x^4 - y^4: I = -12, J = 0, so (4 I^3 - 0) / 27 = -256.
    CHECK(quartic_discriminant(std::array<mpz_class, 5>{1, 0, 0, 0, -1}) == -256);
  }

  TEST_CASE("discriminant symmetry and covariance") {
    std::mt19937_64 g(9);
    for (std::uint64_t i = 0; i < 200; ++i) {
      const auto F = oracle::random_small_form(31, i, 10);
      const mpz_class d = discriminant(F);
      CHECK(discriminant(transpose(F)) == d);
      const auto M = unimodular_mod(g, 2);
      const auto N = unimodular_mod(g, 2);
      const mpz_class dm = M[0][0] * M[1][1] - M[0][1] * M[1][0];
      const mpz_class dn = N[0][0] * N[1][1] - N[0][1] * N[1][0];
      mpz_class scale;
      mpz_pow_ui(scale.get_mpz_t(), mpz_class(dm * dn).get_mpz_t(), 12);
      CHECK(discriminant(act(F, M, N)) == scale * d);
    }
  }

  TEST_CASE("prime factors") {
    CHECK(prime_factors(1) == std::vector<mpz_class>{});
    CHECK(prime_factors(-360) == std::vector<mpz_class>{2, 3, 5});
    const mpz_class big = mpz_class("1000003") * mpz_class("1000033") * 4;
    CHECK(prime_factors(big) == std::vector<mpz_class>{2, mpz_class("1000003"), mpz_class("1000033")});
  }

  TEST_CASE("phi derivative rank matches the explicit map") {
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
      CHECK(phi_derivative_rank(RankCase::Case4, p) == oracle::explicit_phi_rank_case4(p));
      CHECK(oracle::explicit_phi_rank_case4(p) == 8);
      const auto fs = irreducible_quadratics(p);
      CHECK(fs.size() == (p * p - p) / 2);
      for (const auto& f : fs) {
        CHECK(phi_derivative_rank(RankCase::Case1iii, p, f) == oracle::explicit_phi_rank_case1iii(p, f));
        CHECK(oracle::explicit_phi_rank_case1iii(p, f) == 8);
      }
    }
  }
}
