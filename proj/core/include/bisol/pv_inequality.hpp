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

#ifndef BISOL_PV_INEQUALITY_HPP
#define BISOL_PV_INEQUALITY_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace bisol::pv {

class InvalidInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct InequalityInstance {
  std::vector<unsigned> n, d, r;

  unsigned k() const { return static_cast<unsigned>(n.size()); }
  /// Throws InvalidInstance unless 0 <= r_i <= d_i and 0 < sum r < sum d.
  void validate() const;
};

/// prod C(n_i + r_i, n_i) + prod C(n_i + d_i - r_i, n_i) < prod C(n_i + d_i, n_i)
bool inequality_holds(const InequalityInstance& inst);

/// The three sides of the inequality, in order.
struct Sides {
  mpz_class first, second, total;
};
Sides sides(const InequalityInstance& inst);

/// Whether (k, n, d) satisfies one of the sufficient hypotheses:
/// k = 1 with n, d >= 2 and (n, d) != (2, 2); k = 2 with d_1, d_2 >= 2
/// whenever n_1 = n_2 = 1; or k >= 3.
bool hypotheses_hold(const std::vector<unsigned>& n, const std::vector<unsigned>& d);

struct ScanResult {
  std::vector<InequalityInstance> violations;         // hypotheses hold, inequality fails
  std::vector<InequalityInstance> excluded_failures;  // hypotheses fail, inequality fails
  unsigned long instances = 0;
};

/// Every instance with 1 <= k <= k_max, 1 <= n_i <= n_max, 1 <= d_i <= d_max.
/// Throws std::invalid_argument for a zero bound.
ScanResult scan(unsigned k_max, unsigned n_max, unsigned d_max, unsigned threads = 1);

/// S is the set of tuples (A_1, ..., A_k) of n_i-subsets of
/// {1, ..., n_i + d_i}; S1 asks A_i to miss {1, ..., r_i} and S2 to miss
/// {r_i + 1, ..., d_i}. Subsets are enumerated block by block, so this is
/// limited to n_i + d_i <= 24.
struct SetCounts {
  mpz_class s, s1, s2, both, neither;
};
SetCounts count_sets(const InequalityInstance& inst);

std::string to_string(const InequalityInstance& inst);

}  // namespace bisol::pv

#endif  // BISOL_PV_INEQUALITY_HPP
