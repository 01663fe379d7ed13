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

// Monte Carlo estimators. Sample i depends only on mix64(seed, i), so the
// counts do not depend on the number of threads.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "bisol/census.hpp"
#include "bisol/densities.hpp"
#include "bisol/qp_solver.hpp"

namespace bisol {

using qp::DigitRule;
using qp::DigitSource;
using qp::HaarSource;
using qp::mix64;
using qp::uniform_below;
using qp::PadicApprox;
using qp::QpForm;

MCEstimate make_estimate(std::uint64_t successes, std::uint64_t decided,
                         std::uint64_t anomalies, std::uint64_t seed) {
  MCEstimate e;
  e.samples = decided;
  e.successes = successes;
  e.anomalies = anomalies;
  e.seed = seed;
  if (decided > 0) {
    e.estimate = static_cast<double>(successes) / static_cast<double>(decided);
    e.stderr_ = std::sqrt(e.estimate * (1 - e.estimate) / static_cast<double>(decided));
  }
  return e;
}

namespace {

enum class Result { Yes, No, Anomaly };

struct Counts {
  std::uint64_t yes = 0, no = 0, anomaly = 0;
};

// Applies fn to every sample index; fn returns a Result.
template <class Fn>
Counts run_samples(std::uint64_t samples, unsigned threads, const Fn& fn) {
  constexpr std::uint64_t kBlock = 256;
  std::atomic<std::uint64_t> next{0};
  std::mutex mu;
  Counts total;
  auto work = [&] {
    Counts local;
    for (std::uint64_t b; (b = next.fetch_add(kBlock)) < samples;) {
      const std::uint64_t end = std::min(samples, b + kBlock);
      for (std::uint64_t i = b; i < end; ++i) {
        switch (fn(i)) {
          case Result::Yes: ++local.yes; break;
          case Result::No: ++local.no; break;
          case Result::Anomaly: ++local.anomaly; break;
        }
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    total.yes += local.yes;
    total.no += local.no;
    total.anomaly += local.anomaly;
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return total;
}

std::uint64_t sample_key(std::uint64_t seed, std::uint64_t index) { return mix64(seed, index); }

// Per-coefficient constraint on a Haar-random p-adic integer.
struct Coef {
  enum Kind { Free, Residue, ValAtLeast, ValExactly } kind = Free;
  unsigned long residue = 0;  // Residue: fixed first digit
  int v = 0;                  // ValAtLeast / ValExactly
};

std::shared_ptr<const DigitSource> make_source(const Coef& c, std::uint64_t key,
                                               unsigned long p) {
  const mpz_class P = p;
  switch (c.kind) {
    case Coef::Free:
      return std::make_shared<HaarSource>(key, p);
    case Coef::Residue:
      return std::make_shared<qp::ShiftedSource>(mpz_class(c.residue), 1,
                                                 std::make_shared<HaarSource>(key, p), P);
    case Coef::ValAtLeast:
      return std::make_shared<qp::ShiftedSource>(0, c.v, std::make_shared<HaarSource>(key, p), P);
    case Coef::ValExactly:
      return std::make_shared<qp::ShiftedSource>(
          0, c.v, std::make_shared<HaarSource>(key, p, std::vector<DigitRule>{DigitRule::NonZero}),
          P);
  }
  return nullptr;
}

QpForm make_form(const std::array<Coef, 9>& cs, std::uint64_t key, unsigned long p, int prec) {
  QpForm F;
  F.p = p;
  for (int k = 0; k < 9; ++k)
    F.a[k / 3][k % 3] = PadicApprox::from_source(make_source(cs[k], mix64(key, k), p), p, prec);
  return F;
}

Result classify(const qp::Verdict& v) {
  switch (qp::outcome(v)) {
    case qp::Outcome::Soluble: return Result::Yes;
    case qp::Outcome::Insoluble: return Result::No;
    case qp::Outcome::Undetermined: return Result::Anomaly;
  }
  return Result::Anomaly;
}

qp::DecideOptions decide_options(const MCOptions& o) {
  qp::DecideOptions d;
  d.max_depth = o.max_depth;
  return d;
}

// Class representatives over F_p for one case, cached per (p, case).
const std::vector<ff::FfForm>& case_classes(unsigned long p, census::Case c) {
  static std::mutex mu;
  static std::map<std::pair<unsigned long, int>, std::vector<ff::FfForm>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, static_cast<int>(c));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const ff::Field& K = ff::Field::get(static_cast<int>(p));
  auto reps = census::class_representatives(static_cast<int>(p), [&](const ff::FfForm& F) {
    return census::case_of(ff::factorization_type(K, F)) == c;
  });
  return cache.emplace(key, std::move(reps)).first->second;
}

std::optional<census::Case> case_for(Selector s) {
  switch (s) {
    case Selector::Case1i: return census::Case::C1i;
    case Selector::Case1iii: return census::Case::C1iii;
    case Selector::Case3: return census::Case::C3;
    case Selector::Case4: return census::Case::C4;
    case Selector::Case5: return census::Case::C5;
    default: return std::nullopt;
  }
}

}  // namespace

MCEstimate mc_rho(unsigned long p, const MCOptions& opts) {
  const auto dopts = decide_options(opts);
  const std::array<Coef, 9> free{};
  const Counts c = run_samples(opts.samples, opts.threads, [&](std::uint64_t i) {
    const QpForm F = make_form(free, sample_key(opts.seed, i), p, opts.initial_precision);
    return classify(qp::decide_qp(F, dopts));
  });
  return make_estimate(c.yes, c.yes + c.no, c.anomaly, opts.seed);
}

std::string_view selector_name(Selector s) {
  switch (s) {
    case Selector::Case1i: return "case1i";
    case Selector::Case1iii: return "case1iii";
    case Selector::Case3: return "case3";
    case Selector::Case4: return "case4";
    case Selector::Case5: return "case5";
    case Selector::ClassS: return "class-s";
    case Selector::ClassT: return "class-t";
    case Selector::LineCondition: return "line";
  }
  return "?";
}

Selector parse_selector(std::string_view name) {
  for (Selector s : {Selector::Case1i, Selector::Case1iii, Selector::Case3, Selector::Case4,
                     Selector::Case5, Selector::ClassS, Selector::ClassT,
                     Selector::LineCondition})
    if (selector_name(s) == name) return s;
  throw std::invalid_argument("unknown selector: " + std::string(name));
}

Rational selector_expected(unsigned long p, Selector s) {
  const CaseDensityTable t = build_case_table(p);
  switch (s) {
    case Selector::Case1i: return t.xi11;
    case Selector::Case1iii: return t.xi13;
    case Selector::Case3: return t.xi3;
    case Selector::Case4: return t.xi4;
    case Selector::Case5: return t.xi5;
    case Selector::ClassS:
    case Selector::ClassT: return Rational(1, 2);
    case Selector::LineCondition: return t.delta_line;
  }
  return 0;
}

MCEstimate mc_conditional(unsigned long p, Selector s, const MCOptions& opts) {
  const auto dopts = decide_options(opts);
  const int prec = opts.initial_precision;

  if (auto c = case_for(s)) {
    if (p > 5) throw std::invalid_argument("mc_conditional: case selectors need p <= 5");
    const auto& reps = case_classes(p, *c);
    const ff::Field& K = ff::Field::get(static_cast<int>(p));
    const Counts n = run_samples(opts.samples, opts.threads, [&](std::uint64_t i) {
      const std::uint64_t key = sample_key(opts.seed, i);
      const ff::FfForm& R = reps[uniform_below(mix64(key, 100), reps.size())];
      const ff::Elem u = static_cast<ff::Elem>(1 + uniform_below(mix64(key, 101), p - 1));
      std::array<Coef, 9> cs;
      for (int k = 0; k < 9; ++k) {
        cs[k].kind = Coef::Residue;
        cs[k].residue = K.mul(u, R.a[k / 3][k % 3]);
      }
      return classify(qp::decide_qp(make_form(cs, key, p, prec), dopts));
    });
    return make_estimate(n.yes, n.yes + n.no, n.anomaly, opts.seed);
  }

  if (s == Selector::LineCondition) {
    const auto irr = qp::irreducible_quadratics(p);
    const Counts n = run_samples(opts.samples, opts.threads, [&](std::uint64_t i) {
      const std::uint64_t key = sample_key(opts.seed, i);
      const auto& f = irr[uniform_below(mix64(key, 100), irr.size())];
      const unsigned long u = 1 + uniform_below(mix64(key, 101), p - 1);
      std::array<Coef, 9> cs{};
      // F(X; 1, 0) = a00 X0^2 + a10 X0 X1 + a20 X1^2.
      const int idx[3] = {0, 3, 6};
      for (int k = 0; k < 3; ++k) {
        cs[idx[k]].kind = Coef::Residue;
        cs[idx[k]].residue = (u * f[k]) % p;
      }
      return classify(qp::decide_qp(make_form(cs, key, p, prec), dopts));
    });
    return make_estimate(n.yes, n.yes + n.no, n.anomaly, opts.seed);
  }

  // The S and T valuation classes; row-major a00 .. a22.
  std::array<Coef, 9> cs{};
  auto at_least = [](int v) { return Coef{Coef::ValAtLeast, 0, v}; };
  auto exactly = [](int v) { return Coef{Coef::ValExactly, 0, v}; };
  cs[0] = at_least(2);
  cs[1] = at_least(2);
  cs[2] = exactly(1);
  cs[3] = at_least(1);
  cs[4] = at_least(1);
  cs[5] = at_least(1);
  cs[6] = exactly(0);
  if (s == Selector::ClassT) {
    cs[7] = at_least(1);
    cs[8] = at_least(1);
  }
  const Counts n = run_samples(opts.samples, opts.threads, [&](std::uint64_t i) {
    qp::LocalProblem prob;
    prob.form = make_form(cs, sample_key(opts.seed, i), p, prec);
    prob.x_allowed = qp::Allowed::Affine;
    prob.y_allowed = qp::Allowed::Affine;
    return classify(qp::decide_local(prob, dopts));
  });
  return make_estimate(n.yes, n.yes + n.no, n.anomaly, opts.seed);
}

BiForm22<mpz_class> sample_real_form(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t key = sample_key(seed, index);
  BiForm22<mpz_class> F;
  for (int k = 0; k < 9; ++k) {
    const std::int64_t v =
        static_cast<std::int64_t>(mix64(key, k) >> 10) - (std::int64_t{1} << 53);
    F.a[k / 3][k % 3] = static_cast<long>(v);
  }
  return F;
}

MCEstimate mc_real_density(const MCOptions& opts) {
  const Counts c = run_samples(opts.samples, opts.threads, [&](std::uint64_t i) {
    const BiForm22<mpz_class> F = sample_real_form(opts.seed, i);
    if (real_soluble(F)) return Result::Yes;
    const int s = sgn(F.a[0][0]);
    const bool same = sgn(F.a[0][2]) == s && sgn(F.a[2][0]) == s && sgn(F.a[2][2]) == s;
    return same ? Result::No : Result::Anomaly;
  });
  MCEstimate e = make_estimate(c.yes, c.yes + c.no + c.anomaly, c.anomaly, opts.seed);
  return e;
}

}  // namespace bisol
