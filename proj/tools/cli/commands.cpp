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

#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

#include "bisol/census.hpp"
#include "bisol/densities.hpp"
#include "bisol/form_io.hpp"
#include "bisol/pv_inequality.hpp"
#include "bisol/qp_solver.hpp"

namespace bisol::cli {

namespace {

using qp::Outcome;

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i];
  return s;
}

unsigned long small_prime(const RunConfig& cfg) {
  if (!cfg.p) throw ParseError("--p is required");
  const mpz_class p = parse_prime(*cfg.p);
  if (!p.fits_ulong_p()) throw ParseError("prime too large: " + p.get_str());
  return p.get_ui();
}

MCOptions mc_options(const RunConfig& cfg) {
  MCOptions o;
  if (cfg.samples) o.samples = *cfg.samples;
  o.seed = cfg.seed;
  o.threads = cfg.threads;
  o.max_depth = cfg.max_depth;
  return o;
}

qp::DecideOptions decide_options(const RunConfig& cfg) {
  qp::DecideOptions o;
  o.max_depth = cfg.max_depth;
  return o;
}

Json estimate_json(const MCEstimate& e) {
  return Json{{"estimate", e.estimate},   {"stderr", e.stderr_},
              {"samples", e.samples},     {"successes", e.successes},
              {"anomalies", e.anomalies}, {"seed", e.seed}};
}

Json interval_json(const Interval& i) {
  return Json{{"lo", i.lo}, {"hi", i.hi}, {"mid", i.mid()}, {"width", i.width()}};
}

// Calls f(line_number, line) for every non-blank line of the batch input.
template <class F>
void for_each_line(const std::string& input, F&& f) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!input.empty() && input != "-") {
    file.open(input);
    if (!file) throw std::runtime_error("cannot open input file " + input);
    in = &file;
  }
  std::string line;
  for (std::uint64_t n = 1; std::getline(*in, line); ++n)
    if (!is_blank_line(line)) f(n, line);
}

Json decide_record(const qp::Verdict& v) {
  Json rec;
  rec["verdict"] = std::string(qp::outcome_name(qp::outcome(v)));
  if (const auto* s = std::get_if<qp::Soluble>(&v)) {
    rec["patch"] = std::string(qp::patch_name(s->witness.patch));
    rec["x"] = s->witness.x.get_str();
    rec["y"] = s->witness.y.get_str();
    rec["e"] = s->witness.e;
    rec["witness_precision"] = s->witness.precision;
  } else {
    for (const char* k : {"patch", "x", "y", "e", "witness_precision"}) rec[k] = nullptr;
  }
  if (const auto* u = std::get_if<qp::Undetermined>(&v))
    rec["reason"] = u->reason == qp::UndeterminedReason::Depth ? "depth" : "precision";
  else
    rec["reason"] = nullptr;
  return rec;
}

int decide_exit(Outcome o) {
  switch (o) {
    case Outcome::Soluble: return kSoluble;
    case Outcome::Insoluble: return kInsoluble;
    case Outcome::Undetermined: return kUndetermined;
  }
  return kUndetermined;
}

qp::Verdict decide_one(const BiForm22<mpz_class>& F, const mpz_class& p, const RunConfig& cfg) {
  return qp::decide_qp(qp::QpForm::exact(F, p, cfg.precision), decide_options(cfg));
}

const char* els_status_name(qp::ElsReport::Status s) {
  switch (s) {
    case qp::ElsReport::Status::ELS: return "ELS";
    case qp::ElsReport::Status::NotELS: return "NotELS";
    case qp::ElsReport::Status::Undetermined: return "undetermined";
  }
  return "?";
}

// Record and exit code for one ELS query.
std::pair<Json, int> els_one(const BiForm22<mpz_class>& F, const RunConfig& cfg) {
  Json rec;
  rec["form"] = format_form(F);
  try {
    const qp::ElsReport r = qp::els_decide(F, decide_options(cfg));
    rec["status"] = els_status_name(r.status);
    rec["failing_place"] = r.failed_at_real ? Json("real")
                           : r.failing_prime != 0 ? Json(r.failing_prime.get_str())
                                                  : Json(nullptr);
    rec["discriminant"] = r.failed_at_real ? Json(nullptr) : Json(r.discriminant.get_str());
    Json primes = Json::array();
    for (const auto& p : r.primes_checked) primes.push_back(p.get_str());
    rec["primes_checked"] = primes;
    rec["error"] = nullptr;
    const int code = r.status == qp::ElsReport::Status::ELS      ? kOk
                     : r.status == qp::ElsReport::Status::NotELS ? kInsoluble
                                                                 : kUndetermined;
    return {rec, code};
  } catch (const qp::SolverError& e) {
    rec["status"] = "error";
    rec["failing_place"] = nullptr;
    rec["discriminant"] = "0";
    rec["primes_checked"] = Json::array();
    rec["error"] = e.kind() == qp::SolverError::Kind::AllZero ? "zero form" : "discriminant is zero";
    return {rec, kSingular};
  }
}

Json rational(const Rational& x) { return Json{{"exact", x.get_str()}, {"decimal", x.get_d()}}; }

}  // namespace

int cmd_decide(const RunConfig& cfg, const FormArgs& args) {
  const mpz_class p = small_prime(cfg);
  Output out(cfg);
  if (!args.form.empty()) {
    const BiForm22<mpz_class> F = parse_form(join(args.form));
    const qp::Verdict v = decide_one(F, p, cfg);
    Json result;
    result["form"] = format_form(F);
    result["p"] = p.get_str();
    result.update(decide_record(v));
    out.document(result);
    return decide_exit(qp::outcome(v));
  }

  out.begin_stream();
  std::uint64_t counts[3] = {0, 0, 0};
  std::uint64_t errors = 0;
  for_each_line(args.input, [&](std::uint64_t n, const std::string& line) {
    Json rec;
    rec["line"] = n;
    try {
      const BiForm22<mpz_class> F = parse_form(line);
      rec["form"] = format_form(F);
      const qp::Verdict v = decide_one(F, p, cfg);
      rec.update(decide_record(v));
      rec["error"] = nullptr;
      ++counts[static_cast<int>(qp::outcome(v))];
    } catch (const std::exception& e) {
      rec["form"] = nullptr;
      const Json blank = decide_record(qp::Insoluble{});
      for (const auto& [k, _] : blank.items()) rec[k] = nullptr;
      rec["error"] = e.what();
      ++errors;
    }
    out.record(rec);
  });
  out.summary(Json{{"soluble", counts[0]},
                   {"insoluble", counts[1]},
                   {"undetermined", counts[2]},
                   {"errors", errors}});
  return errors ? kUsage : kOk;
}

int cmd_els(const RunConfig& cfg, const FormArgs& args, std::uint64_t random_count,
            unsigned height) {
  Output out(cfg);
  if (random_count > 0) {
    const qp::ElsSummary s = qp::els_batch(random_count, height, cfg.seed, cfg.threads,
                                           decide_options(cfg));
    out.document(Json{{"forms", s.forms},
                      {"height", height},
                      {"els", s.els},
                      {"not_els", s.not_els},
                      {"failed_at_real", s.failed_at_real},
                      {"undetermined", s.undetermined},
                      {"singular", s.singular},
                      {"rate", s.rate()}});
    return kOk;
  }
  if (!args.form.empty()) {
    auto [rec, code] = els_one(parse_form(join(args.form)), cfg);
    out.document(rec);
    return code;
  }

  out.begin_stream();
  std::uint64_t els = 0, not_els = 0, undetermined = 0, singular = 0, errors = 0;
  for_each_line(args.input, [&](std::uint64_t n, const std::string& line) {
    Json rec;
    rec["line"] = n;
    try {
      auto [r, code] = els_one(parse_form(line), cfg);
      for (const auto& [k, x] : r.items()) rec[k] = x;
      els += code == kOk;
      not_els += code == kInsoluble;
      undetermined += code == kUndetermined;
      singular += code == kSingular;
    } catch (const ParseError& e) {
      rec["form"] = nullptr;
      rec["status"] = "error";
      rec["failing_place"] = nullptr;
      rec["discriminant"] = nullptr;
      rec["primes_checked"] = Json::array();
      rec["error"] = e.what();
      ++errors;
    }
    out.record(rec);
  });
  const std::uint64_t decided = els + not_els + undetermined;
  out.summary(Json{{"els", els},
                   {"not_els", not_els},
                   {"undetermined", undetermined},
                   {"singular", singular},
                   {"errors", errors},
                   {"rate", decided ? static_cast<double>(els) / static_cast<double>(decided) : 0.0}});
  return errors ? kUsage : kOk;
}

int cmd_rho(const RunConfig& cfg) {
  const unsigned long p = small_prime(cfg);
  const Rational closed = rho_closed(p);
  const Rational assembled = rho_assembled(p);
  Output out(cfg);
  out.document(Json{{"p", p},
                    {"rho", rational(closed)},
                    {"assembled", rational(assembled)},
                    {"assembled_equals_closed", assembled == closed}});
  return assembled == closed ? kOk : 1;
}

int cmd_table(const RunConfig& cfg) {
  const unsigned long p = small_prime(cfg);
  const CaseDensityTable t = build_case_table(p);
  Json counts, dens;
  const std::pair<const char*, const mpz_class*> cs[] = {
      {"n0", &t.n0},   {"n1", &t.n1},   {"n2", &t.n2},   {"n3", &t.n3},   {"n4", &t.n4},
      {"n5", &t.n5},   {"n11", &t.n11}, {"n12", &t.n12}, {"n13", &t.n13}, {"r0", &t.r0},
      {"r11", &t.r11}, {"r12", &t.r12}, {"r13", &t.r13}, {"r2", &t.r2},   {"r3", &t.r3},
      {"s0", &t.s0},   {"s11", &t.s11}, {"s12", &t.s12}, {"s13", &t.s13}, {"s2", &t.s2},
      {"s3", &t.s3},   {"s4", &t.s4},   {"s5", &t.s5},   {"t0", &t.t0}};
  for (const auto& [k, v] : cs) counts[k] = v->get_str();
  const std::pair<const char*, const Rational*> ds[] = {
      {"xi1", &t.xi1},           {"xi11", &t.xi11},     {"xi12", &t.xi12},
      {"xi13", &t.xi13},         {"xi2", &t.xi2},       {"xi3", &t.xi3},
      {"xi4", &t.xi4},           {"xi5", &t.xi5},       {"xi51", &t.xi51},
      {"xi52", &t.xi52},         {"xi11'", &t.xi11p},   {"xi13'", &t.xi13p},
      {"xi3'", &t.xi3p},         {"xi4'", &t.xi4p},     {"xi5'", &t.xi5p},
      {"delta_line", &t.delta_line}, {"delta1", &t.delta1}, {"delta2", &t.delta2},
      {"delta1*", &t.delta1s},   {"delta2*", &t.delta2s}, {"eps1", &t.eps1},
      {"eps2", &t.eps2},         {"alpha", &t.alpha},   {"sigma", &t.sigma},
      {"tau", &t.tau},           {"tau*", &t.tau_star}, {"rho", &t.rho}};
  for (const auto& [k, v] : ds) dens[k] = v->get_str();
  Output out(cfg);
  out.document(Json{{"p", p}, {"counts", counts}, {"densities", dens}});
  return kOk;
}

int cmd_mc(const RunConfig& cfg, const std::string& selector) {
  const unsigned long p = small_prime(cfg);
  MCOptions o = mc_options(cfg);
  MCEstimate e;
  Rational expected;
  if (selector.empty() || selector == "rho") {
    e = mc_rho(p, o);
    expected = rho_closed(p);
  } else {
    const Selector s = parse_selector(selector);
    e = mc_conditional(p, s, o);
    expected = selector_expected(p, s);
  }
  Json result = estimate_json(e);
  result["selector"] = selector.empty() ? "rho" : selector;
  result["expected"] = rational(expected);
  result["deviation_in_stderr"] = e.stderr_ > 0 ? (e.estimate - expected.get_d()) / e.stderr_ : 0.0;
  Output out(cfg);
  out.document(result);
  return kOk;
}

int cmd_product(const RunConfig& cfg) {
  const PrimeProduct pp = prime_product(cfg.pmax.value_or(100000));
  Output out(cfg);
  out.document(Json{{"primes", pp.primes},
                    {"product", interval_json(pp.value)},
                    {"tail_constant", pp.tail_constant},
                    {"tail", pp.tail},
                    {"with_tail", interval_json(pp.with_tail)}});
  return kOk;
}

int cmd_real(const RunConfig& cfg) {
  const MCEstimate e = mc_real_density(mc_options(cfg));
  Output out(cfg);
  out.document(estimate_json(e));
  return kOk;
}

int cmd_census(const RunConfig& cfg, bool allow_large) {
  if (!cfg.q) throw ParseError("--q is required");
  census::CensusOptions o;
  o.threads = cfg.threads;
  o.allow_large = allow_large;
  const census::CensusReport r = census::run_census(*cfg.q, o);
  const auto rows = census::census_rows(r);
  Json table = Json::array();
  std::uint64_t bad = 0;
  for (const auto& row : rows) {
    table.push_back(Json{{"section", row.section},
                         {"type", row.type},
                         {"subtype", row.subtype.empty() ? "-" : row.subtype},
                         {"count", row.count},
                         {"expected", row.expected},
                         {"smooth", row.has_smooth_column ? Json(row.smooth_count) : Json(nullptr)},
                         {"smooth_expected", row.has_smooth_column
                                                 ? Json(row.smooth_expected ? "yes" : "no")
                                                 : Json(nullptr)},
                         {"ok", row.ok()}});
    bad += !row.ok();
  }
  Output out(cfg);
  out.document(Json{{"q", r.q}, {"classes", r.classes}, {"mismatches", bad}, {"rows", table}});
  return bad ? 1 : kOk;
}

int cmd_scan(const RunConfig& cfg, unsigned k_max, unsigned n_max, unsigned d_max) {
  const pv::ScanResult s = pv::scan(k_max, n_max, d_max, cfg.threads);
  auto rows = [](const std::vector<pv::InequalityInstance>& v) {
    Json t = Json::array();
    for (const auto& inst : v) {
      const pv::Sides sd = pv::sides(inst);
      auto list = [](const std::vector<unsigned>& x) {
        std::string s;
        for (size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
        return s;
      };
      t.push_back(Json{{"k", inst.k()},
                       {"n", list(inst.n)},
                       {"d", list(inst.d)},
                       {"r", list(inst.r)},
                       {"first", sd.first.get_str()},
                       {"second", sd.second.get_str()},
                       {"total", sd.total.get_str()}});
    }
    return t;
  };
  Output out(cfg);
  out.document(Json{{"instances", s.instances},
                    {"violations_count", s.violations.size()},
                    {"excluded_failures_count", s.excluded_failures.size()},
                    {"violations", rows(s.violations)},
                    {"excluded_failures", rows(s.excluded_failures)}});
  return s.violations.empty() ? kOk : 1;
}

int cmd_global(const RunConfig& cfg) {
  const GlobalConstant g = global_constant(cfg.pmax.value_or(100000), mc_options(cfg));
  Output out(cfg);
  out.document(Json{{"finite", interval_json(g.finite.with_tail)},
                    {"real", estimate_json(g.real)},
                    {"z", g.z},
                    {"value", interval_json(g.value)}});
  return kOk;
}

}  // namespace bisol::cli
