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

#ifndef BISOL_PADIC_HPP
#define BISOL_PADIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <deque>
#include <memory>
#include <vector>

namespace bisol::qp {

/// Counter-based 64-bit mixer (splitmix64 finalizer over key and counter).
std::uint64_t mix64(std::uint64_t key, std::uint64_t counter);

/// Uniform integer in [0, n) drawn from the stream mix64(key, 0), mix64(key, 1), ...
/// by rejection.
std::uint64_t uniform_below(std::uint64_t key, std::uint64_t n);

/// An extendable sequence of p-adic digits.
class DigitSource {
 public:
  virtual ~DigitSource() = default;
  /// The first n digits as an integer in [0, p^n). Consistent in n.
  virtual mpz_class residue(int n) const = 0;
  /// True when the source is known to be exactly zero.
  virtual bool known_zero() const { return false; }
};

/// Digits of a fixed integer (negative values use their p-adic expansion).
class ExactSource final : public DigitSource {
 public:
  ExactSource(mpz_class value, mpz_class p) : value_(std::move(value)), p_(std::move(p)) {}
  mpz_class residue(int n) const override;
  bool known_zero() const override { return value_ == 0; }

 private:
  mpz_class value_, p_;
};

enum class DigitRule : std::uint8_t { Any, Zero, NonZero };

/// Haar-random digits drawn from a keyed counter-based generator.
///
/// Digit t is uniform on {0..p-1}, or forced by prefix[t] when t is inside
/// the prefix. The same key always yields the same digits.
class HaarSource final : public DigitSource {
 public:
  HaarSource(std::uint64_t key, unsigned long p, std::vector<DigitRule> prefix = {});
  mpz_class residue(int n) const override;

 private:
  unsigned long digit_at(int t, unsigned long chunk_digit) const;
  std::uint64_t chunk(int k) const;

  std::uint64_t key_;
  unsigned long p_;
  int chunk_digits_;
  std::uint64_t chunk_modulus_;
  std::vector<DigitRule> prefix_;
};

/// The number c + p^shift * x for x drawn from an inner source.
class ShiftedSource final : public DigitSource {
 public:
  ShiftedSource(mpz_class c, int shift, std::shared_ptr<const DigitSource> inner, mpz_class p)
      : c_(std::move(c)), shift_(shift), inner_(std::move(inner)), p_(std::move(p)) {}
  mpz_class residue(int n) const override;
  bool known_zero() const override { return c_ == 0 && inner_->known_zero(); }

 private:
  mpz_class c_;
  int shift_;
  std::shared_ptr<const DigitSource> inner_;
  mpz_class p_;
};

/// A p-adic integer known modulo p^precision.
struct PadicApprox {
  mpz_class p;
  mpz_class value;  // in [0, p^precision)
  int precision = 0;
  std::shared_ptr<const DigitSource> source;

  static PadicApprox fixed(const mpz_class& v, const mpz_class& p, int precision);
  static PadicApprox exact(const mpz_class& v, const mpz_class& p, int precision);
  static PadicApprox from_source(std::shared_ptr<const DigitSource> src, const mpz_class& p,
                                 int precision);

  bool extendable() const { return static_cast<bool>(source); }
  /// Same number at precision n (requires a source when n > precision).
  PadicApprox at_precision(int n) const;
};

/// p-adic valuation, or an exact flag cleared when v is only a lower bound.
struct Val {
  int v = 0;
  bool exact = true;

  friend bool operator==(const Val&, const Val&) = default;
};

Val valuation(const PadicApprox& a);
/// Valuation of x modulo p^n; returns {n, false} when x == 0 mod p^n.
Val valuation_mod(const mpz_class& x, const mpz_class& p, int n);

/// p^k with a small cache for repeated use.
class PowerTable {
 public:
  explicit PowerTable(mpz_class p) : p_(std::move(p)) { pw_.emplace_back(1); }
  const mpz_class& operator[](int k);
  const mpz_class& p() const { return p_; }

 private:
  mpz_class p_;
  std::deque<mpz_class> pw_;
};

}  // namespace bisol::qp

#endif  // BISOL_PADIC_HPP
