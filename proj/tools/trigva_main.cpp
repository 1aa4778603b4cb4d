#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "trigva/cli/suite.hpp"
#include "trigva/errors.hpp"

using namespace trigva;

namespace {

vacuum::Interval parse_interval(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) throw UsageError("interval must look like LO..HI");
  return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for sine algebras, vacuum modules and Fock realizations"};
  app.require_subcommand(1);

  cli::SuiteConfig cfg;
  std::string suite, interval = "0..3", format = "json", out;
  std::vector<int> levels;
  std::vector<std::string> qspecs;
  bool no_timing = false;

  auto* verify = app.add_subcommand("verify", "run a check suite and print the report");
  verify->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(cli::suite_names()));
  verify->add_option("--box", cfg.box, "generator box for the isomorphism and covariant checks");
  verify->add_option("--interval", interval, "index interval LO..HI for vacuum-module suites");
  verify->add_option("--level", levels, "levels to test (repeatable)");
  verify->add_option("--vars", cfg.trunc.K, "number of Fock variables K");
  verify->add_option("--deg", cfg.trunc.D, "maximal weighted Fock degree D");
  verify->add_option("--order", cfg.trunc.N, "series order N");
  verify->add_option("--seed", cfg.seed, "seed for the random generators");
  verify->add_option("--q-spec", qspecs, "rational q specialization p/q (repeatable)");
  verify->add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md"}));
  std::vector<std::string> fault_list;
  for (const auto& [name, target] : cli::fault_names()) fault_list.push_back(name);
  verify->add_option("--perturb", cfg.perturb, "inject a fault (repeatable)")->check(CLI::IsMember(fault_list));
  verify->add_flag("--no-timing", no_timing, "report elapsed_ms = 0 for byte-stable output");
  verify->add_option("-o,--out", out, "write the report to a file");

  auto* faults = app.add_subcommand("faults", "list fault flags and the suite each one targets");

  CLI11_PARSE(app, argc, argv);

  if (faults->parsed()) {
    for (const auto& [name, target] : cli::fault_names()) std::cout << name << "\t" << target << "\n";
    return 0;
  }

  try {
    cfg.interval = parse_interval(interval);
    if (!levels.empty()) cfg.levels = levels;
    if (!qspecs.empty()) {
      cfg.q_specs.clear();
      for (const auto& s : qspecs) {
        mpq_class q(s);
        q.canonicalize();
        cfg.q_specs.push_back(q);
      }
    }
    cfg.format = format == "md" ? cli::Format::Markdown : cli::Format::Json;
    cfg.timing = !no_timing;
    cli::Report report = cli::run_suite(cfg, suite);
    std::string text = cli::emit_report(report, cfg.format);
    if (out.empty()) {
      std::cout << text << "\n";
    } else {
      std::ofstream f(out);
      f << text << "\n";
    }
    for (const auto& r : report)
      if (r.status != cli::Status::Pass) return 1;
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
}
