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

#ifndef BISOL_FIELD_HPP
#define BISOL_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bisol::ff {

using Elem = std::uint8_t;

class UnsupportedField : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Table-driven finite field F_q with q <= 81.
///
/// Elements are the integers 0..q-1. 0 and 1 are the additive and
/// multiplicative identities. A field built as a quadratic extension of a
/// smaller field stores the base elements at indices 0..base_q-1, so
/// embedding the base is the identity map on indices.
class Field {
 public:
  /// Returns the shared instance for q in {2,3,4,5,7,8,9} or one of their
  /// quadratic extensions {16,25,49,64,81}. Throws UnsupportedField.
  static const Field& get(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  bool is_prime() const { return q_ == p_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem div(Elem a, Elem b) const { return mul(a, inv_[b]); }
  Elem pow(Elem a, unsigned e) const;

  /// Image of an integer under Z -> F_p -> F_q.
  Elem from_int(long n) const;

  /// Discrete log with respect to a fixed primitive element; a != 0.
  int log(Elem a) const { return log_[a]; }
  Elem antilog(int k) const { return exp_[k % (q_ - 1)]; }

  /// The quadratic extension F_{q^2}, with this field at indices 0..q-1.
  const Field& ext() const;

  /// For a field built as a quadratic extension: size of the base field.
  /// Zero otherwise.
  int base_q() const { return base_q_; }
  bool in_base(Elem a) const { return a < base_q_; }
  /// Nontrivial automorphism over the base field (x -> x^base_q).
  Elem conj(Elem a) const { return conj_[a]; }

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field() = default;
  void build_prime(int p);
  void build_extension(const Field& base, int degree);
  void finish_tables();
  void check_axioms() const;

  int q_ = 0;
  int p_ = 0;
  int base_q_ = 0;
  int ext_q_ = 0;
  std::vector<Elem> add_, mul_, neg_, inv_, conj_, exp_;
  std::vector<int> log_;

  friend struct FieldRegistry;
};

}  // namespace bisol::ff

#endif  // BISOL_FIELD_HPP
