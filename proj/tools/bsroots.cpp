#include <CLI11.hpp>
#include <iostream>

#include "bsroots/cli.hpp"
#include "bsroots/errors.hpp"

using namespace bsroots;

namespace {

struct Options {
  JobConfig config;
  std::string format = "json";
  std::string interval;
  std::string lambda;
  std::string target;
  unsigned level = 0;
  unsigned denominator_bound = 0;
  std::uint32_t p = 0;
};

CLI::App* add_job(CLI::App& app, const std::string& name, const std::string& about, Options& o, bool ideal = true) {
  auto* sub = app.add_subcommand(name, about);
  sub->add_option("--ring", o.config.ring, "ring declaration, e.g. \"poly p=5 vars=x,y\"")->required();
  if (ideal) sub->add_option("--ideal", o.config.ideal, "comma-separated generators");
  sub->add_option("--format", o.format, "json, csv or text");
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prime-characteristic Bernstein-Sato invariants over F_p"};
  app.require_subcommand(1);
  Options o;

  auto* jumps = add_job(app, "jumps", "differential jump sets", o);
  jumps->add_option("--level", o.level, "single level e (default: levels 1..3)");
  jumps->add_option("--levels", o.level, "alias of --level");

  auto* roots = add_job(app, "roots", "Bernstein-Sato roots certified to a level", o);
  roots->add_option("--levels,-E", o.level, "verification level E");
  roots->add_option("--denom-bound,-B", o.denominator_bound, "candidates k/(p^b - 1) with b <= B");
  roots->add_option("--interval", o.interval, "lo:hi");

  auto* ths = add_job(app, "thresholds", "differential thresholds certified to a level", o);
  ths->add_option("--levels,-E", o.level, "verification level E");
  ths->add_option("--denom-bound,-B", o.denominator_bound, "denominators p^c (p^b - 1) with b <= B");
  ths->add_option("--interval", o.interval, "lo:hi (default 0:r)");

  auto* fp = add_job(app, "fpt", "F-pure threshold as the least differential threshold", o);
  fp->add_option("--levels,-E", o.level, "verification level E");
  fp->add_option("--denom-bound,-B", o.denominator_bound, "denominator bound");

  auto* nu = add_job(app, "nu", "nu_e sequence and its limit (F- or Cartier threshold)", o);
  nu->add_option("--levels,-E", o.level, "compute nu_0 .. nu_E (default 3)");
  nu->add_option("--target", o.target, "the ideal c (default: the variables)");
  nu->add_option("--kind", o.config.nu_kind, "f or cartier");

  auto* ti = add_job(app, "test-ideal", "test ideal tau(a^lambda)", o);
  ti->add_option("--lambda", o.lambda, "non-negative rational")->required();
  ti->add_option("--e-max", o.config.e_max, "largest level in the chain (default 4)");

  auto* fjn = add_job(app, "fjn", "F-jumping numbers on a grid", o);
  fjn->add_option("--interval", o.interval, "lo:hi (default 0:r)");
  fjn->add_option("--e-max", o.config.e_max, "largest level for each test ideal (default 4)");
  fjn->add_option("--denom-bound,-B", o.denominator_bound, "grid denominators p^c (p^b - 1), b <= B");

  auto* ex = app.add_subcommand("verify-example", "recompute a worked example (9.2 .. 9.8)");
  ex->add_option("example", o.config.example, "example id")->required();
  ex->add_option("--p", o.p, "the prime");
  ex->add_option("--n", o.config.n, "n for 9.8 (default 4)");
  ex->add_option("--format", o.format, "json, csv or text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  JobConfig& config = o.config;
  try {
    config.command = parse_command(app.get_subcommands().front()->get_name());
    config.format = parse_format(o.format);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  }
  if (o.level) config.level = o.level;
  if (o.denominator_bound) config.denominator_bound = o.denominator_bound;
  if (!o.interval.empty()) config.interval = o.interval;
  if (!o.lambda.empty()) config.lambda = o.lambda;
  if (!o.target.empty()) config.target = o.target;
  if (o.p) config.p = o.p;

  const auto result = run(config);
  std::cout << result.output;
  if (!result.diagnostics.empty()) std::cerr << result.diagnostics << "\n";
  return result.exit_code;
}
