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

#ifndef BISOL_SRC_FP_POLY_HPP
#define BISOL_SRC_FP_POLY_HPP

#include <gmpxx.h>

#include <vector>

namespace bisol::qp::fp {

// Dense polynomial over F_p, coefficient k multiplies x^k, no trailing zeros.
using Poly = std::vector<mpz_class>;

Poly reduce(Poly a, const mpz_class& p);
int degree(const Poly& a);
Poly mod(Poly a, const Poly& f, const mpz_class& p);
Poly mul_mod(const Poly& a, const Poly& b, const Poly& f, const mpz_class& p);
Poly gcd(Poly a, Poly b, const mpz_class& p);
mpz_class eval(const Poly& a, const mpz_class& x, const mpz_class& p);

// Distinct roots in F_p of a nonzero polynomial, p odd.
std::vector<mpz_class> roots(const Poly& f, const mpz_class& p);

// Whether f = c k^2 for a constant c and a polynomial k; c returned when so.
bool is_constant_times_square(const Poly& f, const mpz_class& p, mpz_class* c);

}  // namespace bisol::qp::fp

#endif  // BISOL_SRC_FP_POLY_HPP
