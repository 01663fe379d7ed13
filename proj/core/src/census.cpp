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

#include "bisol/census.hpp"

#include <atomic>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "bisol/densities.hpp"

namespace bisol::census {

using ff::Conj11Sub;
using ff::Elem;
using ff::FfForm;
using ff::Field;
using ff::Tag;

Case case_of(const ff::FactorType& t) {
  switch (t.tag) {
    case Tag::Conj11:
      switch (t.sub) {
        case Conj11Sub::RationalPair: return Case::C1i;
        case Conj11Sub::ConjugatePair: return Case::C1ii;
        case Conj11Sub::SinglePoint: return Case::C1iii;
        case Conj11Sub::None: break;
      }
      break;
    case Tag::P20_02: return Case::C2;
    case Tag::P20_01sq: return Case::C3;
    case Tag::P11sq: return Case::C4;
    case Tag::P10sq_01sq: return Case::C5;
    default: break;
  }
  return Case::None;
}

std::string_view case_name(Case c) {
  switch (c) {
    case Case::None: return "other";
    case Case::C1i: return "1(i)";
    case Case::C1ii: return "1(ii)";
    case Case::C1iii: return "1(iii)";
    case Case::C2: return "2";
    case Case::C3: return "3";
    case Case::C4: return "4";
    case Case::C5: return "5";
  }
  return "?";
}

bool check_line_condition(const Field& K, const FfForm& F) {
  ff::BinaryForm h{2, {F.a[0][0], F.a[1][0], F.a[2][0]}};
  return ff::classify_binary_quadratic(K, h) == ff::BinaryQuadraticClass::Irreducible;
}

std::pair<bool, bool> check_delta1_condition(const Field&, const FfForm& F) {
  // Value and both partials vanish at ((1:0),(1:0)): a00 = a01 = a10 = 0.
  const bool singular = F.a[0][0] == 0 && F.a[0][1] == 0 && F.a[1][0] == 0;
  // F(X; 1, 0) = a20 X1^2 once the above holds; F(1, 0; Y) = a02 Y1^2.
  const bool d1 = singular && F.a[2][0] != 0;
  return {d1, d1 && F.a[0][2] != 0};
}

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Decodes class number m for leading position lead into a form.
void decode(int q, int lead, std::uint64_t m, FfForm& F) {
  for (int k = 0; k < 9; ++k) {
    Elem v = 0;
    if (k == lead) {
      v = 1;
    } else if (k > lead) {
      v = static_cast<Elem>(m % q);
      m /= q;
    }
    F.a[k / 3][k % 3] = v;
  }
}

struct Unit {
  int lead;
  std::uint64_t begin, end;
};

std::vector<Unit> work_units(int q) {
  std::vector<Unit> units;
  const std::uint64_t chunk = 4096;
  for (int lead = 0; lead < 9; ++lead) {
    const std::uint64_t n = ipow(q, 8 - lead);
    for (std::uint64_t b = 0; b < n; b += chunk) units.push_back({lead, b, std::min(n, b + chunk)});
  }
  return units;
}

// Runs one worker per thread over every class; returns the workers.
template <class Worker>
std::vector<Worker> for_each_class(int q, unsigned threads, const Worker& proto) {
  const auto units = work_units(q);
  std::atomic<size_t> next{0};
  std::vector<Worker> workers(std::max(1u, threads), proto);
  auto run = [&](Worker& worker) {
    FfForm F;
    for (size_t u; (u = next.fetch_add(1)) < units.size();) {
      for (std::uint64_t m = units[u].begin; m < units[u].end; ++m) {
        decode(q, units[u].lead, m, F);
        worker(F);
      }
    }
  };
  if (workers.size() == 1) {
    run(workers[0]);
    return workers;
  }
  std::vector<std::thread> pool;
  for (auto& w : workers) pool.emplace_back([&run, &w] { run(w); });
  for (auto& th : pool) th.join();
  return workers;
}

// Irreducible forms of bidegree (dx, 0) or (dx, 1), up to scaling.
std::uint64_t count_irreducible(const Field& K, int dx, int dy) {
  const int q = K.q();
  const int n = (dx + 1) * (dy + 1);
  std::uint64_t count = 0;
  std::vector<int> digits(n, 0);
  for (std::uint64_t idx = 1; idx < ipow(q, n); ++idx) {
    std::uint64_t m = idx;
    int first = -1;
    for (int k = 0; k < n; ++k) {
      digits[k] = static_cast<int>(m % q);
      m /= q;
      if (first < 0 && digits[k] != 0) first = k;
    }
    if (digits[first] != 1) continue;
    std::array<std::array<Elem, 3>, 3> c{};
    for (int k = 0; k < n; ++k) c[k / (dy + 1)][k % (dy + 1)] = static_cast<Elem>(digits[k]);
    count += ff::is_irreducible(K, dx, dy, c) ? 1 : 0;
  }
  return count;
}

}  // namespace

CensusReport run_census(int q, const CensusOptions& opts) {
  const bool small = q == 2 || q == 3 || q == 4 || q == 5;
  const bool large = q == 7 || q == 8 || q == 9;
  if (!small && !(large && opts.allow_large)) throw ff::UnsupportedField("census: unsupported q " + std::to_string(q));
  const Field& K = Field::get(q);

  CensusReport total;
  total.q = q;
  total.prime = K.is_prime();
  struct Worker {
    const Field* K;
    bool prime;
    CensusReport local;

    void operator()(const FfForm& F) {
      const ff::FactorType t = ff::factorization_type(*K, F);
      const int tag = static_cast<int>(t.tag);
      ++local.classes;
      ++local.type_count[tag];
      if (ff::has_smooth_point(*K, F)) ++local.type_smooth[tag];
      if (t.tag == Tag::Conj11) ++local.conj_sub[static_cast<int>(t.sub)];
      if (!prime) return;
      const int c = static_cast<int>(case_of(t));
      if (check_line_condition(*K, F)) {
        ++local.line_total;
        ++local.line[c];
      }
      const auto [d1, d2] = check_delta1_condition(*K, F);
      if (d1) {
        ++local.delta1_total;
        ++local.delta1[c];
      }
      if (d2) {
        ++local.delta2_total;
        ++local.delta2[c];
      }
    }
  };

  for (const Worker& w : for_each_class(q, opts.threads, Worker{&K, total.prime, {}})) {
    const CensusReport& l = w.local;
    total.classes += l.classes;
    for (int i = 0; i < ff::kTagCount; ++i) {
      total.type_count[i] += l.type_count[i];
      total.type_smooth[i] += l.type_smooth[i];
    }
    for (int i = 0; i < 4; ++i) total.conj_sub[i] += l.conj_sub[i];
    total.line_total += l.line_total;
    total.delta1_total += l.delta1_total;
    total.delta2_total += l.delta2_total;
    for (int i = 0; i < kCaseCount; ++i) {
      total.line[i] += l.line[i];
      total.delta1[i] += l.delta1[i];
      total.delta2[i] += l.delta2[i];
    }
  }

  total.m10 = count_irreducible(K, 1, 0);
  total.m20 = count_irreducible(K, 2, 0);
  total.m11 = count_irreducible(K, 1, 1);
  total.m21 = count_irreducible(K, 2, 1);
  return total;
}

bool CensusRow::ok() const {
  if (count != expected) return false;
  if (!has_smooth_column) return true;
  return smooth_count == (smooth_expected ? count : 0);
}

std::vector<CensusRow> census_rows(const CensusReport& r) {
  const std::uint64_t q = r.q;
  std::vector<CensusRow> rows;
  auto add = [&](std::string section, std::string type, std::string sub, std::uint64_t count,
                 std::uint64_t expected) {
    CensusRow row;
    row.section = std::move(section);
    row.type = std::move(type);
    row.subtype = std::move(sub);
    row.count = count;
    row.expected = expected;
    rows.push_back(std::move(row));
  };

  add("irreducible", "(1,0)", "-", r.m10, q + 1);
  add("irreducible", "(2,0)", "-", r.m20, (q * q - q) / 2);
  add("irreducible", "(1,1)", "-", r.m11, q * q * q - q);
  add("irreducible", "(2,1)", "-", r.m21, ipow(q, 5) - ipow(q, 3));

  const std::array<std::uint64_t, ff::kTagCount> expected{
      (q * q * q - q) * (q * q * q - q - 1) / 2,
      2 * q * q * q * (q + 1) * (q + 1) * (q - 1),
      q * (q + 1) * (q + 1) * (q + 1) * (q - 1),
      q * q * (q + 1) * (q + 1) / 4,
      q * q * (q + 1) * (q - 1) / 2,
      q * q * (q - 1) * (q - 1) / 4,
      q * (q + 1) * (q + 1),
      q * (q + 1) * (q - 1),
      q * (q + 1) * (q - 1),
      (q + 1) * (q + 1),
      ipow(q, 4) * (q + 1) * (q + 1) * (q - 1) * (q - 1),
      ipow(q, 3) * (q + 1) * (q + 1) * (q - 1) * (q - 1),
      (q * q * q - q) * (q * q * q + q - 1) / 2,
  };
  for (int i = 0; i < ff::kTagCount; ++i) {
    const Tag t = static_cast<Tag>(i);
    add("type", std::string(ff::tag_name(t)), "-", r.type_count[i], expected[i]);
    rows.back().has_smooth_column = true;
    rows.back().smooth_count = r.type_smooth[i];
    rows.back().smooth_expected = ff::type_has_smooth_point(t);
  }
  add("conj11", "(1,1)(1,1)-conj", "rational-pair",
      r.conj_sub[static_cast<int>(Conj11Sub::RationalPair)], q * q * q * (q + 1) * (q + 1) * (q - 1) / 4);
  add("conj11", "(1,1)(1,1)-conj", "conjugate-pair",
      r.conj_sub[static_cast<int>(Conj11Sub::ConjugatePair)],
      q * q * (q + 1) * (q - 1) * (q - 1) * (q - 2) / 4);
  add("conj11", "(1,1)(1,1)-conj", "single-point",
      r.conj_sub[static_cast<int>(Conj11Sub::SinglePoint)],
      q * (q + 1) * (q + 1) * (q - 1) * (q - 1) / 2);
  add("total", "all", "-", r.classes, (ipow(q, 9) - 1) / (q - 1));

  if (r.prime) {
    const CaseDensityTable t = build_case_table(r.q);
    auto u = [](const mpz_class& v) { return static_cast<std::uint64_t>(v.get_ui()); };
    auto idx = [](Case c) { return static_cast<int>(c); };
    add("line", "total", "-", r.line_total, ipow(q, 7) * (q - 1) / 2);
    add("line", "1(i)", "-", r.line[idx(Case::C1i)], u(t.r11));
    add("line", "1(ii)", "-", r.line[idx(Case::C1ii)], u(t.r12));
    add("line", "1(iii)", "-", r.line[idx(Case::C1iii)], u(t.r13));
    add("line", "2", "-", r.line[idx(Case::C2)], u(t.r2));
    add("line", "3", "-", r.line[idx(Case::C3)], u(t.r3));
    add("line", "4", "-", r.line[idx(Case::C4)], 0);
    add("line", "5", "-", r.line[idx(Case::C5)], 0);
    add("line", "other", "-", r.line[idx(Case::None)], u(t.r0));

    add("delta1", "total", "-", r.delta1_total, ipow(q, 5));
    add("delta1", "1(i)", "-", r.delta1[idx(Case::C1i)], u(t.s11));
    add("delta1", "1(ii)", "-", r.delta1[idx(Case::C1ii)], u(t.s12));
    add("delta1", "1(iii)", "-", r.delta1[idx(Case::C1iii)], u(t.s13));
    add("delta1", "2", "-", r.delta1[idx(Case::C2)], u(t.s2));
    add("delta1", "3", "-", r.delta1[idx(Case::C3)], u(t.s3));
    add("delta1", "4", "-", r.delta1[idx(Case::C4)], u(t.s4));
    add("delta1", "5", "-", r.delta1[idx(Case::C5)], u(t.s5));
    add("delta1", "other", "-", r.delta1[idx(Case::None)], u(t.s0));

    add("delta2", "total", "-", r.delta2_total, ipow(q, 4) * (q - 1));
    add("delta2", "1(i)", "-", r.delta2[idx(Case::C1i)], u(t.s11));
    add("delta2", "1(iii)", "-", r.delta2[idx(Case::C1iii)], u(t.s13));
    add("delta2", "3", "-", r.delta2[idx(Case::C3)], 0);
    add("delta2", "4", "-", r.delta2[idx(Case::C4)], u(t.s4));
    add("delta2", "5", "-", r.delta2[idx(Case::C5)], 0);
    add("delta2", "other", "-", r.delta2[idx(Case::None)], u(t.t0));
  }
  return rows;
}

std::vector<CensusRow> mismatches(const CensusReport& r) {
  std::vector<CensusRow> out;
  for (auto& row : census_rows(r))
    if (!row.ok()) out.push_back(row);
  return out;
}

void write_tsv(std::ostream& os, const std::vector<CensusRow>& rows, int q) {
  os << "q\tsection\ttype\tsubtype\tcount\texpected\tsmooth_forms\tsmooth_expected\tstatus\n";
  for (const auto& r : rows) {
    os << q << '\t' << r.section << '\t' << r.type << '\t' << r.subtype << '\t' << r.count << '\t'
       << r.expected << '\t';
    if (r.has_smooth_column)
      os << r.smooth_count << '\t' << (r.smooth_expected ? "all" : "none");
    else
      os << "-\t-";
    os << '\t' << (r.ok() ? "ok" : "MISMATCH") << '\n';
  }
}

std::vector<FfForm> class_representatives(int q,
                                          const std::function<bool(const FfForm&)>& pred) {
  Field::get(q);
  std::vector<FfForm> out;
  FfForm F;
  for (int lead = 0; lead < 9; ++lead) {
    const std::uint64_t n = ipow(q, 8 - lead);
    for (std::uint64_t m = 0; m < n; ++m) {
      decode(q, lead, m, F);
      if (pred(F)) out.push_back(F);
    }
  }
  return out;
}

}  // namespace bisol::census
