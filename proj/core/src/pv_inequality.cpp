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

#include "bisol/pv_inequality.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <thread>

namespace bisol::pv {

namespace {

mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

unsigned long sum(const std::vector<unsigned>& v) {
  return std::accumulate(v.begin(), v.end(), 0ul);
}

// Calls f on every vector of length k with entries in [1, bound].
template <class F>
void for_each_tuple(unsigned k, unsigned bound, F&& f) {
  std::vector<unsigned> v(k, 1);
  for (;;) {
    f(v);
    unsigned i = 0;
    while (i < k && v[i] == bound) v[i++] = 1;
    if (i == k) return;
    ++v[i];
  }
}

}  // namespace

void InequalityInstance::validate() const {
  if (n.empty()) throw InvalidInstance("k must be positive");
  if (d.size() != n.size() || r.size() != n.size())
    throw InvalidInstance("n, d and r must have length k");
  for (unsigned i = 0; i < k(); ++i) {
    if (n[i] == 0 || d[i] == 0) throw InvalidInstance("n_i and d_i must be positive");
    if (r[i] > d[i]) throw InvalidInstance("r_i must not exceed d_i");
  }
  const unsigned long rs = sum(r);
  if (rs == 0 || rs >= sum(d)) throw InvalidInstance("need 0 < sum r < sum d");
}

Sides sides(const InequalityInstance& inst) {
  inst.validate();
  Sides s{1, 1, 1};
  for (unsigned i = 0; i < inst.k(); ++i) {
    s.first *= binom(inst.n[i] + inst.r[i], inst.n[i]);
    s.second *= binom(inst.n[i] + inst.d[i] - inst.r[i], inst.n[i]);
    s.total *= binom(inst.n[i] + inst.d[i], inst.n[i]);
  }
  return s;
}

bool inequality_holds(const InequalityInstance& inst) {
  const Sides s = sides(inst);
  return s.first + s.second < s.total;
}

bool hypotheses_hold(const std::vector<unsigned>& n, const std::vector<unsigned>& d) {
  switch (n.size()) {
    case 0: return false;
    case 1: return n[0] >= 2 && d[0] >= 2 && !(n[0] == 2 && d[0] == 2);
    case 2: return !(n[0] == 1 && n[1] == 1) || (d[0] >= 2 && d[1] >= 2);
    default: return true;
  }
}

ScanResult scan(unsigned k_max, unsigned n_max, unsigned d_max, unsigned threads) {
  if (k_max == 0 || n_max == 0 || d_max == 0) throw std::invalid_argument("scan bounds must be >= 1");
  // Work items: (n, d) pairs; each expands over all admissible r.
  std::vector<std::pair<std::vector<unsigned>, std::vector<unsigned>>> items;
  for (unsigned k = 1; k <= k_max; ++k)
    for_each_tuple(k, n_max, [&](const std::vector<unsigned>& n) {
      for_each_tuple(k, d_max, [&](const std::vector<unsigned>& d) { items.emplace_back(n, d); });
    });

  auto run = [&](size_t begin, size_t step) {
    ScanResult out;
    for (size_t it = begin; it < items.size(); it += step) {
      const auto& [n, d] = items[it];
      const bool hyp = hypotheses_hold(n, d);
      const unsigned k = static_cast<unsigned>(n.size());
      InequalityInstance inst{n, d, std::vector<unsigned>(k, 0)};
      const unsigned long ds = sum(d);
      for (;;) {
        const unsigned long rs = sum(inst.r);
        if (rs > 0 && rs < ds) {
          ++out.instances;
          if (!inequality_holds(inst)) (hyp ? out.violations : out.excluded_failures).push_back(inst);
        }
        unsigned i = 0;
        while (i < k && inst.r[i] == d[i]) inst.r[i++] = 0;
        if (i == k) break;
        ++inst.r[i];
      }
    }
    return out;
  };

  threads = std::max(1u, threads);
  std::vector<ScanResult> parts(threads);
  if (threads == 1) {
    parts[0] = run(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back([&, t] { parts[t] = run(t, threads); });
    for (auto& th : pool) th.join();
  }

  // Merge in item order so the result does not depend on the thread count.
  ScanResult out;
  auto key = [](const InequalityInstance& a) { return std::tie(a.n, a.d, a.r); };
  for (auto& part : parts) {
    out.instances += part.instances;
    out.violations.insert(out.violations.end(), part.violations.begin(), part.violations.end());
    out.excluded_failures.insert(out.excluded_failures.end(), part.excluded_failures.begin(),
                                 part.excluded_failures.end());
  }
  auto by_key = [&](const InequalityInstance& a, const InequalityInstance& b) {
    if (a.k() != b.k()) return a.k() < b.k();
    return key(a) < key(b);
  };
  std::sort(out.violations.begin(), out.violations.end(), by_key);
  std::sort(out.excluded_failures.begin(), out.excluded_failures.end(), by_key);
  return out;
}

SetCounts count_sets(const InequalityInstance& inst) {
  inst.validate();
  SetCounts c{1, 1, 1, 1, 0};
  for (unsigned i = 0; i < inst.k(); ++i) {
    const unsigned m = inst.n[i] + inst.d[i];
    if (m > 24) throw std::invalid_argument("count_sets: block too large");
    const std::uint32_t low = (1u << inst.r[i]) - 1;                 // {1, ..., r_i}
    const std::uint32_t mid = ((1u << inst.d[i]) - 1) & ~low;        // {r_i + 1, ..., d_i}
    unsigned long all = 0, miss_low = 0, miss_mid = 0, miss_both = 0;
    for (std::uint32_t a = 0; a < (1u << m); ++a) {
      if (static_cast<unsigned>(std::popcount(a)) != inst.n[i]) continue;
      ++all;
      const bool l = (a & low) == 0, md = (a & mid) == 0;
      miss_low += l;
      miss_mid += md;
      miss_both += l && md;
    }
    c.s *= all;
    c.s1 *= miss_low;
    c.s2 *= miss_mid;
    c.both *= miss_both;
  }
  c.neither = c.s - (c.s1 + c.s2 - c.both);
  return c;
}

std::string to_string(const InequalityInstance& inst) {
  std::ostringstream os;
  auto list = [&](const std::vector<unsigned>& v) {
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
  };
  os << "k=" << inst.k() << " n=";
  list(inst.n);
  os << " d=";
  list(inst.d);
  os << " r=";
  list(inst.r);
  return os.str();
}

}  // namespace bisol::pv
