#include <CLI11.hpp>
#include <iostream>

#include "systole/commands.hpp"

int main(int argc, char** argv) {
  using systole::RunConfig;
  CLI::App app{"Systole upper bounds for congruence covers of hyperbolic triangle groups"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::vector<int> tau;

  auto add_tau = [&](CLI::App* sub) {
    sub->add_option("tau", tau, "triangle signature a b c")->expected(3)->required();
    sub->add_option("--format", cfg.format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
  };
  auto add_run = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "splitting seed");
    sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--precision-bits", cfg.precision_bits, "bits for real evaluation (>= 64)");
    sub->add_flag("--timing", cfg.timing, "include elapsed_ms in reports");
  };

  auto* info = app.add_subcommand("info", "fields, algebra and order data");
  add_tau(info);
  auto* primes = app.add_subcommand("primes", "prime ideals of E up to a norm bound");
  add_tau(primes);
  primes->add_option("--max-norm", cfg.max_norm, "norm bound");
  auto* sysb = app.add_subcommand("sysbound", "systole bound for one ideal");
  add_tau(sysb);
  add_run(sysb);
  std::string ideal;
  auto* ideal_opt = sysb->add_option("--ideal", ideal, "generator of the ideal, e.g. 'u+2' or '(u+2)(u-3)'");
  std::int64_t p = 0;
  auto* p_opt = sysb->add_option("--p", p, "rational prime");
  int which = 0;
  auto* which_opt = sysb->add_option("--which", which, "index of the prime of E above p");
  sysb->add_option("--dump-generators", cfg.dump_generators, "write generators (gzip text) to PATH");
  auto* table = app.add_subcommand("table", "all supported ideals up to a norm bound");
  add_tau(table);
  add_run(table);
  table->add_option("--max-norm", cfg.max_norm, "norm bound");
  bool primes_only = false;
  table->add_flag("--primes-only", primes_only, "skip composite ideals");
  table->add_flag("--show-skipped", cfg.show_skipped, "list skipped ideals on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : systole::kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.tau = systole::Triple{tau.at(0), tau.at(1), tau.at(2)};
  if (*ideal_opt) cfg.ideal = ideal;
  if (*p_opt) cfg.p = p;
  if (*which_opt) cfg.which = which;
  cfg.composites = !primes_only;
  return systole::run_command(cfg, std::cout, std::cerr);
}
