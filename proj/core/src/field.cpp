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

#include "bisol/field.hpp"

#include <map>
#include <memory>
#include <string>

namespace bisol::ff {

struct FieldRegistry {
  std::map<int, std::unique_ptr<Field>> fields;

  Field& make(int q) {
    auto& slot = fields[q];
    slot.reset(new Field());
    return *slot;
  }

  FieldRegistry() {
    for (int p : {2, 3, 5, 7}) make(p).build_prime(p);
    make(4).build_extension(*fields[2], 2);
    make(8).build_extension(*fields[2], 3);
    make(9).build_extension(*fields[3], 2);
    for (int q : {4, 5, 7, 8, 9}) make(q * q).build_extension(*fields[q], 2);
    for (int q : {2, 3, 4, 5, 7, 8, 9}) fields[q]->ext_q_ = q * q;
    for (auto& [q, f] : fields) f->check_axioms();
  }
};

static FieldRegistry& registry() {
  static FieldRegistry r;
  return r;
}

const Field& Field::get(int q) {
  auto& r = registry();
  auto it = r.fields.find(q);
  if (it == r.fields.end())
    throw UnsupportedField("unsupported field size q=" + std::to_string(q));
  return *it->second;
}

const Field& Field::ext() const {
  if (ext_q_ == 0)
    throw UnsupportedField("no quadratic extension for q=" + std::to_string(q_));
  return get(ext_q_);
}

Elem Field::pow(Elem a, unsigned e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<unsigned long>(log_[a]) * e) % (q_ - 1)];
}

Elem Field::from_int(long n) const {
  long r = n % p_;
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

void Field::build_prime(int p) {
  q_ = p_ = p;
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b) {
      add_[a * q_ + b] = static_cast<Elem>((a + b) % p);
      mul_[a * q_ + b] = static_cast<Elem>((a * b) % p);
    }
  finish_tables();
}

// Elements of the extension are digit vectors over the base, index
// sum d_i Q^i, reduced modulo a monic irreducible of the given degree.
void Field::build_extension(const Field& base, int degree) {
  const int bq = base.q();
  p_ = base.p();
  q_ = 1;
  for (int i = 0; i < degree; ++i) q_ *= bq;

  // Monic modulus x^m + c_{m-1} x^{m-1} + ... + c_0 with no root in the
  // base; for m <= 3 that is irreducibility.
  std::vector<Elem> mod(degree, 0);
  auto eval = [&](Elem x) {
    Elem acc = 1;
    for (int i = degree - 1; i >= 0; --i) acc = base.add(base.mul(acc, x), mod[i]);
    return acc;
  };
  for (int code = 0;; ++code) {
    int c = code;
    for (int i = 0; i < degree; ++i) {
      mod[i] = static_cast<Elem>(c % bq);
      c /= bq;
    }
    bool has_root = false;
    for (int x = 0; x < bq && !has_root; ++x) has_root = eval(static_cast<Elem>(x)) == 0;
    if (!has_root) break;
  }

  auto digits = [&](int v) {
    std::vector<Elem> d(degree);
    for (int i = 0; i < degree; ++i) {
      d[i] = static_cast<Elem>(v % bq);
      v /= bq;
    }
    return d;
  };
  auto index = [&](const std::vector<Elem>& d) {
    int v = 0;
    for (int i = degree - 1; i >= 0; --i) v = v * bq + d[i];
    return v;
  };

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  for (int a = 0; a < q_; ++a) {
    auto da = digits(a);
    for (int b = 0; b < q_; ++b) {
      auto db = digits(b);
      std::vector<Elem> s(degree);
      for (int i = 0; i < degree; ++i) s[i] = base.add(da[i], db[i]);
      add_[a * q_ + b] = static_cast<Elem>(index(s));

      std::vector<Elem> prod(2 * degree - 1, 0);
      for (int i = 0; i < degree; ++i)
        for (int j = 0; j < degree; ++j)
          prod[i + j] = base.add(prod[i + j], base.mul(da[i], db[j]));
      for (int k = 2 * degree - 2; k >= degree; --k) {
        Elem top = prod[k];
        prod[k] = 0;
        for (int i = 0; i < degree; ++i)
          prod[k - degree + i] = base.sub(prod[k - degree + i], base.mul(top, mod[i]));
      }
      prod.resize(degree);
      mul_[a * q_ + b] = static_cast<Elem>(index(prod));
    }
  }
  if (degree == 2) base_q_ = bq;
  finish_tables();
}

void Field::finish_tables() {
  neg_.assign(q_, 0);
  inv_.assign(q_, 0);
  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b) {
      if (add_[a * q_ + b] == 0) neg_[a] = static_cast<Elem>(b);
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<Elem>(b);
    }

  // Log/antilog tables from the first primitive element.
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, -1);
  for (int g = 1; g < q_; ++g) {
    Elem x = 1;
    int order = 0;
    do {
      x = mul_[x * q_ + g];
      ++order;
    } while (x != 1);
    if (order != q_ - 1) continue;
    x = 1;
    for (int k = 0; k < q_ - 1; ++k) {
      exp_[k] = x;
      log_[x] = k;
      x = mul_[x * q_ + g];
    }
    break;
  }

  conj_.assign(q_, 0);
  for (int a = 0; a < q_; ++a)
    conj_[a] = base_q_ ? pow(static_cast<Elem>(a), static_cast<unsigned>(base_q_))
                       : static_cast<Elem>(a);
}

void Field::check_axioms() const {
  auto fail = [&](const char* what) {
    throw std::logic_error(std::string("field axiom failed for q=") + std::to_string(q_) +
                           ": " + what);
  };
  for (int a = 0; a < q_; ++a) {
    if (add(static_cast<Elem>(a), 0) != a) fail("additive identity");
    if (mul(static_cast<Elem>(a), 1) != a) fail("multiplicative identity");
    if (a != 0 && (log_[a] < 0 || mul(static_cast<Elem>(a), inv_[a]) != 1))
      fail("inverse");
    for (int b = 0; b < q_; ++b) {
      if (add_[a * q_ + b] != add_[b * q_ + a]) fail("additive commutativity");
      if (mul_[a * q_ + b] != mul_[b * q_ + a]) fail("multiplicative commutativity");
      for (int c = 0; c < q_; ++c) {
        const Elem ea = static_cast<Elem>(a), eb = static_cast<Elem>(b),
                   ec = static_cast<Elem>(c);
        if (add(add(ea, eb), ec) != add(ea, add(eb, ec))) fail("additive associativity");
        if (mul(mul(ea, eb), ec) != mul(ea, mul(eb, ec))) fail("associativity");
        if (mul(ea, add(eb, ec)) != add(mul(ea, eb), mul(ea, ec))) fail("distributivity");
      }
    }
  }
  if (base_q_) {
    for (int a = 0; a < q_; ++a) {
      bool fixed = conj_[a] == a;
      if (fixed != (a < base_q_)) fail("base field is not the fixed field");
    }
  }
}

}  // namespace bisol::ff
