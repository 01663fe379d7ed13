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

#ifndef BISOL_QP_SOLVER_HPP
#define BISOL_QP_SOLVER_HPP

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "bisol/form.hpp"
#include "bisol/padic.hpp"

namespace bisol::qp {

class SolverError : public std::runtime_error {
 public:
  enum class Kind { AllZero, SingularDiscriminantZero, InvalidInput };
  SolverError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// A (2,2)-form with p-adic integer coefficients.
struct QpForm {
  mpz_class p;
  std::array<std::array<PadicApprox, 3>, 3> a;

  /// Coefficients known modulo p^n, no digit source.
  static QpForm fixed(const BiForm22<mpz_class>& F, const mpz_class& p, int n);
  /// Integer coefficients; precision can be raised without limit.
  static QpForm exact(const BiForm22<mpz_class>& F, const mpz_class& p, int n);

  int precision() const;
  bool extendable() const;
  QpForm at_precision(int n) const;
  BiForm22<mpz_class> residues() const;
};

using ValuationGrid = std::array<std::array<Val, 3>, 3>;

ValuationGrid valuation_grid(const QpForm& F);

/// F / p^scale with unit content. Throws SolverError(AllZero).
std::pair<QpForm, int> normalize(const QpForm& F);

/// F o (M, N) at the precision of F; the result carries no digit source.
QpForm act(const QpForm& F, const Mat2<mpz_class>& M, const Mat2<mpz_class>& N);

/// Which coordinate of each factor is set to 1.
enum class Patch : std::uint8_t { X1Y1, X1Y0, X0Y1, X0Y0 };
std::string_view patch_name(Patch patch);

/// For a (2,2)-form, x and y are the free affine coordinates of the
/// patch. For a quartic, x is the free coordinate and y is unused.
struct Witness {
  Patch patch = Patch::X1Y1;
  mpz_class x, y;
  int e = 0;
  int precision = 0;
};

enum class UndeterminedReason { Precision, Depth };

struct Soluble {
  Witness witness;
};
struct Insoluble {};
struct Undetermined {
  UndeterminedReason reason = UndeterminedReason::Precision;
};

using Verdict = std::variant<Soluble, Insoluble, Undetermined>;

enum class Outcome { Soluble, Insoluble, Undetermined };
Outcome outcome(const Verdict& v);
std::string_view outcome_name(Outcome o);

struct DecideOptions {
  int max_depth = 64;
  /// Ceiling for digit-stream extension.
  int max_precision = 4096;
};

enum class Allowed : std::uint8_t { Full, Affine };

/// A search restricted to points reducing into allowed residue classes.
/// Affine means the coordinate X1 (resp. Y1) is a unit.
struct LocalProblem {
  QpForm form;
  Allowed x_allowed = Allowed::Full;
  Allowed y_allowed = Allowed::Full;
  int depth = 0;
  int scale = 0;
};

Verdict decide_qp(const QpForm& F, const DecideOptions& opts = {});
Verdict decide_local(const LocalProblem& problem, const DecideOptions& opts = {});

/// Quantitative Hensel check: v(F(pt)) > 2e with e the least valuation of
/// the patch partials and 2e < precision.
bool certify_witness(const QpForm& F, Patch patch, const mpz_class& x, const mpz_class& y,
                     int* e_out = nullptr);

/// Z^2 + G2 Z = G4 with deg G2 = 2, deg G4 = 4. g2[i], g4[i] multiply
/// X0^(d-i) X1^i.
template <class R>
struct GenBinaryQuartic {
  std::array<R, 3> g2{};
  std::array<R, 5> g4{};
};

template <class R>
GenBinaryQuartic<R> phi(const BiForm22<R>& F) {
  GenBinaryQuartic<R> G;
  for (int i = 0; i < 3; ++i) G.g2[i] = F.a[i][1];
  for (int i = 0; i < 5; ++i) G.g4[i] = R(0);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) G.g4[i + k] -= F.a[i][0] * F.a[k][2];
  return G;
}

struct QpGbq {
  mpz_class p;
  std::array<PadicApprox, 3> g2;
  std::array<PadicApprox, 5> g4;

  int precision() const;
};

QpGbq phi(const QpForm& F);

enum class GbqMethod { Auto, DiscSubdivision, RootRecursion };

/// Solubility of Z^2 + G2 Z = G4 over Q_p. Auto uses disc subdivision for
/// p <= 64 and the root recursion otherwise.
Verdict decide_gbq(const QpGbq& G, const DecideOptions& opts = {},
                   GbqMethod method = GbqMethod::Auto);

/// Integer coefficients: precision is raised until the verdict is decided.
Verdict decide_gbq_exact(const GenBinaryQuartic<mpz_class>& G, const mpz_class& p,
                         const DecideOptions& opts = {}, GbqMethod method = GbqMethod::Auto);

/// G2^2 + 4 G4 = F1^2 - 4 F0 F2 for the first projection.
template <class R>
std::array<R, 5> projection_quartic(const BiForm22<R>& F) {
  std::array<R, 5> d;
  for (int i = 0; i < 5; ++i) d[i] = R(0);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) d[i + k] += F.a[i][1] * F.a[k][1] - R(4) * F.a[i][0] * F.a[k][2];
  return d;
}

/// Discriminant (4 I^3 - J^2) / 27 of a0 X^4 + a1 X^3 Y + ... + a4 Y^4 with
/// I = 12 a0 a4 - 3 a1 a3 + a2^2 and
/// J = 72 a0 a2 a4 + 9 a1 a2 a3 - 27 a0 a3^2 - 27 a4 a1^2 - 2 a2^3.
mpz_class quartic_discriminant(const std::array<mpz_class, 5>& q);
mpq_class quartic_discriminant(const std::array<mpq_class, 5>& q);

/// Discriminant of a (2,2)-form: that of its first projection quartic.
mpz_class discriminant(const BiForm22<mpz_class>& F);
mpq_class discriminant(const BiForm22<mpq_class>& F);

struct ElsReport {
  enum class Status { ELS, NotELS, Undetermined };
  Status status = Status::ELS;
  bool failed_at_real = false;
  mpz_class failing_prime = 0;  // nonzero when a p-adic place fails
  mpz_class discriminant = 0;
  std::vector<mpz_class> primes_checked;
};

/// Real and p-adic solubility at every p dividing 2 disc(F). The real place
/// is checked first; then a zero discriminant throws
/// SolverError(SingularDiscriminantZero).
ElsReport els_decide(const BiForm22<mpz_class>& F, const DecideOptions& opts = {});

/// A form with coefficients uniform in [-height, height], deterministic in
/// (seed, index).
BiForm22<mpz_class> random_integer_form(std::uint64_t seed, std::uint64_t index, unsigned height);

struct ElsSummary {
  std::uint64_t forms = 0;
  std::uint64_t els = 0;
  std::uint64_t not_els = 0;
  std::uint64_t failed_at_real = 0;
  std::uint64_t undetermined = 0;
  /// Zero forms and forms of discriminant zero; not part of the rate.
  std::uint64_t singular = 0;

  /// els / (forms - singular).
  double rate() const;
};

/// els_decide over random_integer_form(seed, i, height) for i < count.
ElsSummary els_batch(std::uint64_t count, unsigned height, std::uint64_t seed,
                     unsigned threads = 1, const DecideOptions& opts = {});

/// Distinct prime factors of |n| (n != 0), ascending.
std::vector<mpz_class> prime_factors(const mpz_class& n);

enum class RankCase { Case1iii, Case4 };

/// Rank over F_p of the derivative of Phi at the reduction of the case.
/// For Case1iii the reduction is f(X0 Y0, X0 Y1 + X1 Y0) with f the
/// irreducible binary quadratic f0 Z0^2 + f1 Z0 Z1 + f2 Z1^2; an all-zero f
/// selects the first irreducible one.
int phi_derivative_rank(RankCase c, unsigned long p, std::array<unsigned long, 3> f = {});

/// All monic irreducible binary quadratics X0^2 + b X0 X1 + c X1^2 over F_p.
std::vector<std::array<unsigned long, 3>> irreducible_quadratics(unsigned long p);

}  // namespace bisol::qp

#endif  // BISOL_QP_SOLVER_HPP
