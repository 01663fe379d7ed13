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
#include <random>

#include "bisol/pv_inequality.hpp"
#include "doctest.h"

using namespace bisol::pv;

namespace {

mpz_class binom(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

InequalityInstance random_instance(std::mt19937_64& g, unsigned k, unsigned n_max, unsigned d_max) {
  for (;;) {
    InequalityInstance inst;
    unsigned rs = 0, ds = 0;
    for (unsigned i = 0; i < k; ++i) {
      const unsigned n = 1 + static_cast<unsigned>(g() % n_max);
      const unsigned d = 1 + static_cast<unsigned>(g() % d_max);
      const unsigned r = static_cast<unsigned>(g() % (d + 1));
      inst.n.push_back(n);
      inst.d.push_back(d);
      inst.r.push_back(r);
      rs += r;
      ds += d;
    }
    if (rs > 0 && rs < ds) return inst;
  }
}

}  // namespace

TEST_SUITE("pv_inequality") {
  TEST_CASE("examples") {
    CHECK_FALSE(inequality_holds({{2}, {2}, {1}}));
    CHECK(inequality_holds({{2}, {3}, {1}}));
    const Sides s = sides({{2}, {3}, {1}});
    CHECK(s.first == 3);
    CHECK(s.second == 6);
    CHECK(s.total == 10);

    // first = C(2,1) C(1,1) = 2, second = C(1,1) C(3,1) = 3, total = 2 * 3.
    const Sides t = sides({{1, 1}, {1, 2}, {1, 0}});
    CHECK(t.first == 2);
    CHECK(t.second == 3);
    CHECK(t.total == 6);
    CHECK(inequality_holds({{1, 1}, {1, 2}, {1, 0}}));
    CHECK_FALSE(inequality_holds({{1, 1}, {1, 2}, {0, 1}}));
    CHECK(inequality_holds({{1, 1}, {2, 2}, {1, 0}}));
  }

  TEST_CASE("validation") {
    CHECK_THROWS_AS(inequality_holds({{2}, {2}, {0}}), InvalidInstance);
    CHECK_THROWS_AS(inequality_holds({{2}, {2}, {2}}), InvalidInstance);
    CHECK_THROWS_AS(inequality_holds({{2}, {2}, {3}}), InvalidInstance);
    CHECK_THROWS_AS(inequality_holds({{2, 1}, {2}, {1}}), InvalidInstance);
    CHECK_THROWS_AS(inequality_holds({{}, {}, {}}), InvalidInstance);
    CHECK_THROWS_AS(scan(0, 3, 3), std::invalid_argument);
  }

  TEST_CASE("hypotheses") {
    CHECK(hypotheses_hold({2}, {3}));
    CHECK_FALSE(hypotheses_hold({2}, {2}));
    CHECK_FALSE(hypotheses_hold({1}, {5}));
    CHECK(hypotheses_hold({1, 1}, {2, 2}));
    CHECK_FALSE(hypotheses_hold({1, 1}, {1, 2}));
    CHECK(hypotheses_hold({1, 2}, {1, 1}));
    CHECK(hypotheses_hold({1, 1, 1}, {1, 1, 1}));
  }

  TEST_CASE("sides are products of binomials") {
    std::mt19937_64 g(4);
    for (int trial = 0; trial < 300; ++trial) {
      const auto inst = random_instance(g, 1 + static_cast<unsigned>(trial % 4), 6, 6);
      mpz_class a = 1, b = 1, c = 1;
      for (unsigned i = 0; i < inst.k(); ++i) {
        a *= binom(inst.n[i] + inst.r[i], inst.n[i]);
        b *= binom(inst.n[i] + inst.d[i] - inst.r[i], inst.n[i]);
        c *= binom(inst.n[i] + inst.d[i], inst.n[i]);
      }
      const Sides s = sides(inst);
      CHECK(s.first == a);
      CHECK(s.second == b);
      CHECK(s.total == c);
      CHECK(inequality_holds(inst) == (a + b < c));
    }
  }

  TEST_CASE("symmetries") {
    std::mt19937_64 g(5);
    for (int trial = 0; trial < 300; ++trial) {
      auto inst = random_instance(g, 1 + static_cast<unsigned>(trial % 3), 5, 5);
      const bool h = inequality_holds(inst);
      InequalityInstance flipped = inst;
      for (unsigned i = 0; i < inst.k(); ++i) flipped.r[i] = inst.d[i] - inst.r[i];
      CHECK(inequality_holds(flipped) == h);
      std::vector<unsigned> perm(inst.k());
      for (unsigned i = 0; i < inst.k(); ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), g);
      InequalityInstance permuted;
      for (unsigned i : perm) {
        permuted.n.push_back(inst.n[i]);
        permuted.d.push_back(inst.d[i]);
        permuted.r.push_back(inst.r[i]);
      }
      CHECK(inequality_holds(permuted) == h);
    }
  }

  TEST_CASE("set counts match the sides") {
    std::mt19937_64 g(6);
    for (int trial = 0; trial < 150; ++trial) {
      const auto inst = random_instance(g, 1 + static_cast<unsigned>(trial % 3), 4, 4);
      const SetCounts c = count_sets(inst);
      const Sides s = sides(inst);
      CHECK(c.s == s.total);
      CHECK(c.s1 == s.second);
      CHECK(c.s2 == s.first);
      CHECK(c.both == 1);
      CHECK(c.neither == c.s - c.s1 - c.s2 + c.both);
      CHECK(inequality_holds(inst) == (c.neither >= 2));
    }
  }

  TEST_CASE("scan") {
    const ScanResult r = scan(2, 4, 4);
    CHECK(r.violations.empty());
    const bool found = std::any_of(r.excluded_failures.begin(), r.excluded_failures.end(),
                                   [](const InequalityInstance& i) {
                                     return i.n == std::vector<unsigned>{2} && i.d == std::vector<unsigned>{2};
                                   });
    CHECK(found);
    for (const auto& inst : r.excluded_failures) CHECK_FALSE(hypotheses_hold(inst.n, inst.d));

    const ScanResult t = scan(2, 4, 4, 3);
    CHECK(t.instances == r.instances);
    REQUIRE(t.excluded_failures.size() == r.excluded_failures.size());
    for (std::size_t i = 0; i < r.excluded_failures.size(); ++i)
      CHECK(to_string(t.excluded_failures[i]) == to_string(r.excluded_failures[i]));
  }

  TEST_CASE("formatting") {
    CHECK(to_string({{1, 2}, {3, 4}, {0, 1}}) == "k=2 n=(1,2) d=(3,4) r=(0,1)");
  }
}
