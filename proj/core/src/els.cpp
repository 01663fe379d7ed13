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

#include <atomic>
#include <mutex>
#include <thread>

#include "bisol/qp_solver.hpp"
#include "bisol/real_soluble.hpp"

namespace bisol::qp {

ElsReport els_decide(const BiForm22<mpz_class>& F, const DecideOptions& opts) {
  bool any = false;
  for (const auto& row : F.a)
    for (const auto& c : row) any |= c != 0;
  if (!any) throw SolverError(SolverError::Kind::AllZero, "form is zero");

  ElsReport report;
  if (!real_soluble(F)) {
    report.status = ElsReport::Status::NotELS;
    report.failed_at_real = true;
    return report;
  }
  report.discriminant = discriminant(F);
  if (report.discriminant == 0)
    throw SolverError(SolverError::Kind::SingularDiscriminantZero, "discriminant is zero");

  bool undetermined = false;
  for (const mpz_class& p : prime_factors(2 * report.discriminant)) {
    report.primes_checked.push_back(p);
    const Verdict v = p < 64 ? decide_qp(QpForm::exact(F, p, 16), opts)
                             : decide_gbq_exact(phi(F), p, opts);
    if (std::holds_alternative<Insoluble>(v)) {
      report.status = ElsReport::Status::NotELS;
      report.failing_prime = p;
      return report;
    }
    undetermined |= std::holds_alternative<Undetermined>(v);
  }
  report.status = undetermined ? ElsReport::Status::Undetermined : ElsReport::Status::ELS;
  return report;
}

BiForm22<mpz_class> random_integer_form(std::uint64_t seed, std::uint64_t index, unsigned height) {
  const std::uint64_t key = mix64(seed, index);
  const std::uint64_t n = 2 * static_cast<std::uint64_t>(height) + 1;
  BiForm22<mpz_class> F;
  for (int k = 0; k < 9; ++k)
    F.a[k / 3][k % 3] = static_cast<long>(uniform_below(mix64(key, k), n)) - static_cast<long>(height);
  return F;
}

double ElsSummary::rate() const {
  const std::uint64_t n = forms - singular;
  return n ? static_cast<double>(els) / static_cast<double>(n) : 0.0;
}

ElsSummary els_batch(std::uint64_t count, unsigned height, std::uint64_t seed, unsigned threads,
                     const DecideOptions& opts) {
  constexpr std::uint64_t kBlock = 64;
  std::atomic<std::uint64_t> next{0};
  std::mutex mu;
  ElsSummary total;
  auto work = [&] {
    ElsSummary s;
    for (std::uint64_t b; (b = next.fetch_add(kBlock)) < count;) {
      for (std::uint64_t i = b; i < std::min(count, b + kBlock); ++i) {
        ++s.forms;
        try {
          const ElsReport r = els_decide(random_integer_form(seed, i, height), opts);
          switch (r.status) {
            case ElsReport::Status::ELS: ++s.els; break;
            case ElsReport::Status::NotELS:
              ++s.not_els;
              s.failed_at_real += r.failed_at_real;
              break;
            case ElsReport::Status::Undetermined: ++s.undetermined; break;
          }
        } catch (const SolverError&) {
          ++s.singular;
        }
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    total.forms += s.forms;
    total.els += s.els;
    total.not_els += s.not_els;
    total.failed_at_real += s.failed_at_real;
    total.undetermined += s.undetermined;
    total.singular += s.singular;
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

}  // namespace bisol::qp
