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

// F has a real point iff the projection quartic D = F1^2 - 4 F0 F2 is
// nonnegative somewhere on P^1(R).

#include "bisol/real_soluble.hpp"

#include <stdexcept>

#include "bisol/qp_solver.hpp"

namespace bisol {

namespace {

using Poly = std::vector<mpq_class>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a by b (b nonzero).
Poly remainder(Poly a, const Poly& b) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int k = static_cast<int>(a.size()) - 1;
    const mpq_class c = a[k] / b[db];
    for (int i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

int sign(const mpq_class& x) { return sgn(x); }

int variations(const std::vector<int>& s) {
  int v = 0, last = 0;
  for (int x : s) {
    if (x == 0) continue;
    if (last != 0 && x != last) ++v;
    last = x;
  }
  return v;
}

}  // namespace

int real_root_count(const std::vector<mpq_class>& f0) {
  Poly f = f0;
  trim(f);
  if (f.empty()) throw std::invalid_argument("real_root_count: zero polynomial");
  std::vector<Poly> seq{f};
  Poly d;
  for (size_t k = 1; k < f.size(); ++k) d.push_back(f[k] * static_cast<long>(k));
  trim(d);
  while (!d.empty()) {
    seq.push_back(d);
    Poly r = remainder(seq[seq.size() - 2], d);
    for (auto& c : r) c = -c;
    d = std::move(r);
  }
  std::vector<int> at_pos, at_neg;
  for (const auto& g : seq) {
    const int lead = sign(g.back());
    const int deg = static_cast<int>(g.size()) - 1;
    at_pos.push_back(lead);
    at_neg.push_back(deg % 2 == 0 ? lead : -lead);
  }
  return variations(at_neg) - variations(at_pos);
}

bool real_soluble(const RealForm22& F) {
  const auto d = qp::projection_quartic(F);
  // D(1,0) and D(0,1).
  if (d[0] >= 0 || d[4] >= 0) return true;
  // d(t) = D(t,1) has negative leading coefficient; it is nonnegative
  // somewhere iff it has a real root.
  Poly t(5);
  for (int i = 0; i < 5; ++i) t[4 - i] = d[i];
  return real_root_count(t) > 0;
}

bool real_soluble(const BiForm22<mpz_class>& F) {
  RealForm22 G;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) G.a[i][j] = F.a[i][j];
  return real_soluble(G);
}

}  // namespace bisol
