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

#ifndef BISOL_CENSUS_HPP
#define BISOL_CENSUS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "bisol/ff_forms.hpp"

namespace bisol::census {

/// Cases of the local density analysis; Case 0 is everything else.
enum class Case { None, C1i, C1ii, C1iii, C2, C3, C4, C5 };
inline constexpr int kCaseCount = 8;

Case case_of(const ff::FactorType& t);
std::string_view case_name(Case c);

struct CensusReport {
  int q = 0;
  bool prime = false;
  std::uint64_t classes = 0;

  std::array<std::uint64_t, ff::kTagCount> type_count{};
  std::array<std::uint64_t, ff::kTagCount> type_smooth{};  // forms with a smooth point
  std::array<std::uint64_t, 4> conj_sub{};                 // indexed by Conj11Sub

  // Irreducible forms of bidegree (1,0), (2,0), (1,1), (2,1) up to scaling.
  std::uint64_t m10 = 0, m20 = 0, m11 = 0, m21 = 0;

  // Prime q only: per-case counts among forms with the line condition and
  // the delta_1 condition, and of delta_2 within the latter.
  std::uint64_t line_total = 0, delta1_total = 0, delta2_total = 0;
  std::array<std::uint64_t, kCaseCount> line{};
  std::array<std::uint64_t, kCaseCount> delta1{};
  std::array<std::uint64_t, kCaseCount> delta2{};
};

struct CensusOptions {
  unsigned threads = 1;
  /// Allows q in {7, 8, 9}; tens of millions of classes.
  bool allow_large = false;
};

/// Classifies one representative of every scalar class of nonzero forms
/// over F_q (first nonzero coefficient 1). Throws ff::UnsupportedField.
CensusReport run_census(int q, const CensusOptions& opts = {});

/// F(X0, X1; 1, 0) is an irreducible binary quadratic.
bool check_line_condition(const ff::Field& K, const ff::FfForm& F);

/// delta1: singular at ((1:0),(1:0)) and not containing Y1 = 0.
/// delta2: delta1 and not containing X1 = 0.
std::pair<bool, bool> check_delta1_condition(const ff::Field& K, const ff::FfForm& F);

/// One comparison between an observed and a closed-form count.
struct CensusRow {
  std::string section;
  std::string type;
  std::string subtype;
  std::uint64_t count = 0;
  std::uint64_t expected = 0;
  /// For factorization types: forms with a smooth point, and whether the
  /// type is expected to have one. Empty otherwise.
  bool has_smooth_column = false;
  std::uint64_t smooth_count = 0;
  bool smooth_expected = false;

  bool ok() const;
};

std::vector<CensusRow> census_rows(const CensusReport& r);
std::vector<CensusRow> mismatches(const CensusReport& r);

void write_tsv(std::ostream& os, const std::vector<CensusRow>& rows, int q);

/// Every class representative over F_q satisfying pred, in enumeration
/// order.
std::vector<ff::FfForm> class_representatives(
    int q, const std::function<bool(const ff::FfForm&)>& pred);

}  // namespace bisol::census

#endif  // BISOL_CENSUS_HPP
