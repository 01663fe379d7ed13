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

#include "bisol/form_io.hpp"
#include "doctest.h"

using namespace bisol;

TEST_SUITE("form_io") {
  TEST_CASE("parse and format") {
    const auto F = parse_form("1 0 1 0 0 0 1 0 -1");
    CHECK(F.a[0][0] == 1);
    CHECK(F.a[0][2] == 1);
    CHECK(F.a[2][0] == 1);
    CHECK(F.a[2][2] == -1);
    CHECK(format_form(F) == "1 0 1 0 0 0 1 0 -1");
    CHECK(parse_form("  +3\t-2 0 0 0 0 0 0 123456789012345678901234567890\n").a[2][2] ==
          mpz_class("123456789012345678901234567890"));
    CHECK(parse_form(format_form(F)) == F);
  }

  TEST_CASE("malformed forms") {
    CHECK_THROWS_AS(parse_form(""), ParseError);
    CHECK_THROWS_AS(parse_form("1 2 3"), ParseError);
    CHECK_THROWS_AS(parse_form("1 2 3 4 5 6 7 8 9 10"), ParseError);
    CHECK_THROWS_AS(parse_form("1 2 3 4 5 6 7 8 x"), ParseError);
    CHECK_THROWS_AS(parse_form("1 2 3 4 5 6 7 8 9.5"), ParseError);
    CHECK_THROWS_AS(parse_form("1 2 3 4 5 6 7 8 --9"), ParseError);
  }

  TEST_CASE("blank lines") {
    CHECK(is_blank_line(""));
    CHECK(is_blank_line("   "));
    CHECK(is_blank_line("# comment"));
    CHECK_FALSE(is_blank_line("1 2 3"));
  }

  TEST_CASE("primes") {
    CHECK(parse_prime("5") == 5);
    CHECK(parse_prime("1000003") == 1000003);
    CHECK_THROWS_AS(parse_prime("1"), ParseError);
    CHECK_THROWS_AS(parse_prime("9"), ParseError);
    CHECK_THROWS_AS(parse_prime("-3"), ParseError);
    CHECK_THROWS_AS(parse_prime("abc"), ParseError);
  }
}
