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

#include <sstream>

namespace bisol {

namespace {

mpz_class parse_integer(const std::string& tok) {
  mpz_class v;
  const char* s = tok.c_str();
  if (*s == '+') ++s;
  if (*s == '\0' || v.set_str(s, 10) != 0) throw ParseError("not an integer: '" + tok + "'");
  return v;
}

}  // namespace

BiForm22<mpz_class> parse_form(std::string_view text) {
  std::istringstream in{std::string(text)};
  BiForm22<mpz_class> F;
  std::string tok;
  int k = 0;
  while (in >> tok) {
    if (k == 9) throw ParseError("expected 9 integers, got more");
    F.a[k / 3][k % 3] = parse_integer(tok);
    ++k;
  }
  if (k != 9) throw ParseError("expected 9 integers, got " + std::to_string(k));
  return F;
}

bool is_blank_line(std::string_view line) {
  const auto pos = line.find_first_not_of(" \t\r\n");
  return pos == std::string_view::npos || line[pos] == '#';
}

std::string format_form(const BiForm22<mpz_class>& F) {
  std::string out;
  for (int k = 0; k < 9; ++k) {
    if (k) out += ' ';
    out += F.a[k / 3][k % 3].get_str();
  }
  return out;
}

mpz_class parse_prime(std::string_view text) {
  std::string tok(text);
  const auto b = tok.find_first_not_of(" \t");
  const auto e = tok.find_last_not_of(" \t");
  if (b == std::string::npos) throw ParseError("empty prime");
  const mpz_class p = parse_integer(tok.substr(b, e - b + 1));
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) throw ParseError("not a prime: " + p.get_str());
  return p;
}

}  // namespace bisol
