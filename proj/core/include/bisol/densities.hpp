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

#ifndef BISOL_DENSITIES_HPP
#define BISOL_DENSITIES_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string_view>

#include "bisol/real_soluble.hpp"

namespace bisol {

using Rational = mpq_class;

/// Closed-form local density of soluble (2,2)-forms over Z_p.
Rational rho_closed(unsigned long p);

/// Every intermediate quantity of the case analysis at a prime p.
struct CaseDensityTable {
  unsigned long p = 0;

  // Counts of forms over F_p up to scaling, by case.
  mpz_class n0, n1, n2, n3, n4, n5, n11, n12, n13;

  Rational xi1, xi11, xi12, xi13, xi2, xi3, xi4, xi5, xi51, xi52;
  Rational xi11p, xi13p, xi3p, xi4p, xi5p;  // primed variants

  Rational delta_line, delta1, delta2, delta1s, delta2s, eps1, eps2, alpha;
  Rational sigma, tau, tau_star;

  // Line-condition counts and the delta_1 / delta_2 counts.
  mpz_class r0, r11, r12, r13, r2, r3;
  mpz_class s0, s11, s12, s13, s2, s3, s4, s5, t0;

  Rational rho;
};

CaseDensityTable build_case_table(unsigned long p);

/// rho assembled from the case table.
Rational rho_assembled(unsigned long p);

struct BqConstants {
  Rational sigma, tau, tau_star;
};

/// Solubility proportions of generalised binary quartics in the three
/// residue classes used by Cases 1(iii) and 4.
BqConstants bq_constants(unsigned long p);

struct MCEstimate {
  double estimate = 0;
  std::uint64_t samples = 0;
  std::uint64_t successes = 0;
  /// Undetermined verdicts; excluded from the estimate.
  std::uint64_t anomalies = 0;
  double stderr_ = 0;
  std::uint64_t seed = 0;
};

/// Fills estimate and stderr from the counters.
MCEstimate make_estimate(std::uint64_t successes, std::uint64_t decided,
                         std::uint64_t anomalies, std::uint64_t seed);

struct MCOptions {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  int max_depth = 64;
  int initial_precision = 8;
};

/// Fraction of Haar-random forms over Z_p that are soluble over Q_p.
MCEstimate mc_rho(unsigned long p, const MCOptions& opts);

/// ClassS: v(a00), v(a01) >= 2, v(a02) = 1, v(a1j) >= 1, a20 a unit, with
/// points restricted to X1, Y1 units. ClassT adds v(a21), v(a22) >= 1.
enum class Selector { Case1i, Case1iii, Case3, Case4, Case5, ClassS, ClassT, LineCondition };

std::string_view selector_name(Selector s);
/// Throws std::invalid_argument on an unknown name.
Selector parse_selector(std::string_view name);

/// The closed-form value each selector estimates.
Rational selector_expected(unsigned long p, Selector s);

/// Conditional solubility over one residue or valuation class. The case
/// selectors need p <= 5.
MCEstimate mc_conditional(unsigned long p, Selector s, const MCOptions& opts);

/// A closed interval of reals.
struct Interval {
  double lo = 0, hi = 0;
  double mid() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
};

struct PrimeProduct {
  Interval value;      // product of rho(p) over p <= pmax
  double tail = 0;     // product over p > pmax lies in [1 - tail, 1]
  double tail_constant = 0;
  Interval with_tail;  // [value.lo * (1 - tail), value.hi]
  std::uint64_t primes = 0;
};

/// True when 1 - rho(p) <= c / p^2 holds for every real p >= p0 (exact
/// check on the shifted polynomial).
bool tail_bound_holds(unsigned long c, unsigned long p0);

PrimeProduct prime_product(unsigned long pmax);

/// Fraction of forms with coefficients uniform in [-1, 1] that are soluble
/// over R. Insoluble samples with mixed corner signs are counted in
/// anomalies.
MCEstimate mc_real_density(const MCOptions& opts);

/// A form with coefficients k / 2^53, k uniform in [-2^53, 2^53), returned
/// scaled by 2^53. Deterministic in (seed, index).
BiForm22<mpz_class> sample_real_form(std::uint64_t seed, std::uint64_t index);

struct GlobalConstant {
  PrimeProduct finite;
  MCEstimate real;
  double z = 4;  // standard errors allowed for the real factor
  Interval value;
};

GlobalConstant global_constant(unsigned long pmax, const MCOptions& real_opts);

}  // namespace bisol

#endif  // BISOL_DENSITIES_HPP
