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

#include "bisol/padic.hpp"

#include <climits>
#include <stdexcept>

namespace bisol::qp {

std::uint64_t mix64(std::uint64_t key, std::uint64_t counter) {
  auto fin = [](std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return fin(key ^ fin(counter + 0x9e3779b97f4a7c15ULL));
}

std::uint64_t uniform_below(std::uint64_t key, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  for (std::uint64_t c = 0;; ++c) {
    const std::uint64_t r = mix64(key, c);
    if (r < limit) return r % n;
  }
}

mpz_class ExactSource::residue(int n) const {
  mpz_class m;
  mpz_pow_ui(m.get_mpz_t(), p_.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), value_.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpz_class ShiftedSource::residue(int n) const {
  mpz_class m, ps;
  mpz_pow_ui(m.get_mpz_t(), p_.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(ps.get_mpz_t(), p_.get_mpz_t(), static_cast<unsigned long>(shift_));
  mpz_class r = c_;
  if (n > shift_) r += ps * inner_->residue(n - shift_);
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  return r;
}

HaarSource::HaarSource(std::uint64_t key, unsigned long p, std::vector<DigitRule> prefix)
    : key_(key), p_(p), prefix_(std::move(prefix)) {
  if (p < 2) throw std::invalid_argument("HaarSource: p < 2");
  chunk_digits_ = 0;
  chunk_modulus_ = 1;
  while (chunk_modulus_ <= (std::uint64_t{1} << 62) / p) {
    chunk_modulus_ *= p;
    ++chunk_digits_;
  }
}

// Uniform on [0, p^K) by rejection from 62-bit draws.
std::uint64_t HaarSource::chunk(int k) const {
  const std::uint64_t span = std::uint64_t{1} << 62;
  const std::uint64_t limit = span - span % chunk_modulus_;
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::uint64_t r =
        mix64(key_, (static_cast<std::uint64_t>(k) << 16) | attempt) >> 2;
    if (r < limit) return r % chunk_modulus_;
  }
}

unsigned long HaarSource::digit_at(int t, unsigned long chunk_digit) const {
  if (t >= static_cast<int>(prefix_.size())) return chunk_digit;
  switch (prefix_[t]) {
    case DigitRule::Any: return chunk_digit;
    case DigitRule::Zero: return 0;
    case DigitRule::NonZero: {
      const std::uint64_t m = p_ - 1;
      const std::uint64_t limit = UINT64_MAX - UINT64_MAX % m;
      for (std::uint64_t attempt = 0;; ++attempt) {
        const std::uint64_t r =
            mix64(key_ ^ 0x5bd1e995ULL, (static_cast<std::uint64_t>(t) << 16) | attempt);
        if (r < limit) return 1 + static_cast<unsigned long>(r % m);
      }
    }
  }
  return chunk_digit;
}

mpz_class HaarSource::residue(int n) const {
  mpz_class acc = 0;
  if (n <= 0) return acc;
  const int chunks = (n + chunk_digits_ - 1) / chunk_digits_;
  for (int k = chunks - 1; k >= 0; --k) {
    const int lo = k * chunk_digits_;
    const int len = std::min(chunk_digits_, n - lo);
    std::uint64_t c = chunk(k);
    // Digits of this chunk, least significant first.
    std::uint64_t part = 0, scale = 1;
    for (int i = 0; i < len; ++i) {
      const unsigned long d = digit_at(lo + i, static_cast<unsigned long>(c % p_));
      c /= p_;
      part += d * scale;
      scale *= p_;
    }
    acc *= static_cast<unsigned long>(scale);
    acc += static_cast<unsigned long>(part);
  }
  return acc;
}

PadicApprox PadicApprox::fixed(const mpz_class& v, const mpz_class& p, int precision) {
  PadicApprox a;
  a.p = p;
  a.precision = precision;
  mpz_class m;
  mpz_pow_ui(m.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(precision));
  mpz_fdiv_r(a.value.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return a;
}

PadicApprox PadicApprox::exact(const mpz_class& v, const mpz_class& p, int precision) {
  return from_source(std::make_shared<ExactSource>(v, p), p, precision);
}

PadicApprox PadicApprox::from_source(std::shared_ptr<const DigitSource> src,
                                     const mpz_class& p, int precision) {
  PadicApprox a;
  a.p = p;
  a.precision = precision;
  a.value = src->residue(precision);
  a.source = std::move(src);
  return a;
}

PadicApprox PadicApprox::at_precision(int n) const {
  if (n <= precision) {
    PadicApprox a = fixed(value, p, n);
    a.source = source;
    return a;
  }
  if (!source) throw std::logic_error("PadicApprox: no digit source to extend from");
  return from_source(source, p, n);
}

Val valuation_mod(const mpz_class& x, const mpz_class& p, int n) {
  if (x == 0) return {n, false};
  if (p == 2) {
    const int v = static_cast<int>(mpz_scan1(x.get_mpz_t(), 0));
    return v >= n ? Val{n, false} : Val{v, true};
  }
  mpz_class t = x;
  int v = 0;
  while (v < n && mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v >= n ? Val{n, false} : Val{v, true};
}

Val valuation(const PadicApprox& a) { return valuation_mod(a.value, a.p, a.precision); }

const mpz_class& PowerTable::operator[](int k) {
  while (static_cast<int>(pw_.size()) <= k) pw_.push_back(pw_.back() * p_);
  return pw_[k];
}

}  // namespace bisol::qp
