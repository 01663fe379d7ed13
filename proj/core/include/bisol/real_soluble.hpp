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

#ifndef BISOL_REAL_SOLUBLE_HPP
#define BISOL_REAL_SOLUBLE_HPP

#include <gmpxx.h>

#include <vector>

#include "bisol/form.hpp"

namespace bisol {

using RealForm22 = BiForm22<mpq_class>;

/// Exact decision of whether F has a point over R.
bool real_soluble(const RealForm22& F);
bool real_soluble(const BiForm22<mpz_class>& F);

/// Number of distinct real roots of a nonzero polynomial (coefficient k
/// multiplies t^k), by a Sturm sequence.
int real_root_count(const std::vector<mpq_class>& f);

}  // namespace bisol

#endif  // BISOL_REAL_SOLUBLE_HPP
