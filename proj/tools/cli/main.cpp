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

#include <iostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "bisol/qp_solver.hpp"
#include "commands.hpp"

using namespace bisol::cli;

int main(int argc, char** argv) {
  CLI::App app{"Local solubility of (2,2)-forms: p-adic and real decisions, censuses over F_q, "
               "local densities and Monte Carlo checks."};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string p_text;
  int q = 0;
  std::uint64_t samples = 0;
  unsigned long pmax = 0;
  bool json = false;

  app.add_option("--p", p_text, "Prime");
  app.add_option("--q", q, "Field size (census)");
  app.add_option("--samples", samples, "Monte Carlo samples (default 100000)");
  app.add_option("--seed", cfg.seed, "Seed for every random stream")->capture_default_str();
  app.add_option("--depth", cfg.max_depth, "Maximum recursion depth")->capture_default_str();
  app.add_option("--precision", cfg.precision, "Initial p-adic precision")->capture_default_str();
  app.add_option("--pmax", pmax, "Largest prime in the Euler product (default 100000)");
  app.add_flag("--json", json, "JSON output instead of TSV");
  app.add_option("--threads", cfg.threads, "Worker threads")->capture_default_str();
  app.add_option("--out", cfg.out, "Output file (default stdout)");

  FormArgs form_args;
  auto add_form = [&](CLI::App* sub) {
    sub->add_option("form", form_args.form, "Nine integers a00 a01 a02 a10 ... a22; omit for batch mode");
    sub->add_option("--in", form_args.input, "Batch input file, one form per line (default stdin)");
  };

  auto* decide = app.add_subcommand("decide", "Decide solubility over Q_p");
  add_form(decide);

  std::uint64_t random_count = 0;
  unsigned height = 10;
  auto* els = app.add_subcommand("els", "Everywhere local solubility of an integer form");
  add_form(els);
  els->add_option("--random", random_count, "Summarize this many random forms instead");
  els->add_option("--height", height, "Coefficient bound for --random")->capture_default_str();

  auto* rho = app.add_subcommand("rho", "Exact local density at p");
  auto* table = app.add_subcommand("table", "Every intermediate density at p");
  std::string selector;
  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of the local density");
  mc->add_option("--selector", selector,
                 "Conditional class: case1i, case1iii, case3, case4, case5, class-s, class-t, line");
  auto* product = app.add_subcommand("product", "Certified interval for the product over primes");
  auto* real = app.add_subcommand("real", "Monte Carlo density of real solubility");
  bool allow_large = false;
  auto* census = app.add_subcommand("census", "Classify every form over F_q and check the counts");
  census->add_flag("--allow-large", allow_large, "Permit q in {7, 8, 9}");
  unsigned k_max = 3, n_max = 6, d_max = 6;
  auto* scan = app.add_subcommand("scan", "Exhaustive scan of the binomial inequality");
  scan->add_option("--k", k_max, "Largest k")->capture_default_str();
  scan->add_option("--n", n_max, "Largest n_i")->capture_default_str();
  scan->add_option("--d", d_max, "Largest d_i")->capture_default_str();
  auto* global = app.add_subcommand("global", "Product of all local densities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  cfg.format = json ? Format::Json : Format::Tsv;
  if (!p_text.empty()) cfg.p = p_text;
  if (q) cfg.q = q;
  if (samples) cfg.samples = samples;
  if (pmax) cfg.pmax = pmax;
  if (sub == els && random_count) cfg.extra = {{"random", random_count}, {"height", height}};
  if (sub == mc) cfg.extra = {{"selector", selector.empty() ? "rho" : selector}};
  if (sub == scan) cfg.extra = {{"k_max", k_max}, {"n_max", n_max}, {"d_max", d_max}};
  if ((sub == decide || sub == els) && form_args.form.empty() && !random_count)
    cfg.extra = {{"input", form_args.input.empty() ? "-" : form_args.input}};

  try {
    if (sub == decide) return cmd_decide(cfg, form_args);
    if (sub == els) return cmd_els(cfg, form_args, random_count, height);
    if (sub == rho) return cmd_rho(cfg);
    if (sub == table) return cmd_table(cfg);
    if (sub == mc) return cmd_mc(cfg, selector);
    if (sub == product) return cmd_product(cfg);
    if (sub == real) return cmd_real(cfg);
    if (sub == census) return cmd_census(cfg, allow_large);
    if (sub == scan) return cmd_scan(cfg, k_max, n_max, d_max);
    if (sub == global) return cmd_global(cfg);
  } catch (const bisol::qp::SolverError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == bisol::qp::SolverError::Kind::SingularDiscriminantZero ? kSingular : kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 70;
  }
  return kUsage;
}
