// Command-line front end: minorant, constant, reduce, verify.

#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hardy/report.hpp"

namespace {

enum Exit { kOk = 0, kInvalid = 1, kSuiteFailure = 2 };

void emit(const hardy::Report& report, const std::string& format) {
  if (format == "csv") {
    std::cout << hardy::to_csv(report);
  } else {
    std::cout << report.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greatest core-decreasing minorants and best constants of abstract Hardy inequalities"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string path;
  std::uint64_t seed = 1;
  std::string outerName = "theoremA";
  bool timing = false;
  hardy::SuiteOptions suite;
  std::vector<std::string> suites;

  const std::vector<std::string> formats{"json", "csv"};
  auto* minorant = app.add_subcommand("minorant", "greatest core-decreasing minorant of u with LP cross-check");
  auto* constant = app.add_subcommand("constant", "best-constant estimate with oracle bounds");
  auto* reduce = app.add_subcommand("reduce", "half-line reduction: lambda, nu and w");
  auto* verify = app.add_subcommand("verify", "randomized property suites");

  for (auto* sub : {minorant, constant, reduce}) {
    sub->add_option("file", path, "problem file (JSON)")->required();
  }
  for (auto* sub : {minorant, constant, reduce, verify}) {
    sub->add_option("--emit", format, "output format")->check(CLI::IsMember(formats));
    sub->add_flag("--timing", timing, "append wall-clock seconds (breaks byte-identical output)");
  }
  constant->add_option("--seed", seed, "seed of the ratio search");
  constant->add_option("--outer-exponent", outerName, "outer exponent of the q < 1 display")
      ->check(CLI::IsMember({"theoremA", "stepanov"}));
  verify->add_option("--seed", suite.seed, "suite seed");
  verify->add_option("--count", suite.count, "instances per suite");
  verify->add_option("--size", suite.size, "largest point count")->check(CLI::PositiveNumber);
  verify->add_option("--suite", suites, "run only these suites")->check(CLI::IsMember(hardy::suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    hardy::Report report;
    int code = kOk;
    if (verify->parsed()) {
      report = hardy::verify_report(suite, suites.empty() ? hardy::suite_names() : suites);
      if (report["status"] != "pass") code = kSuiteFailure;
    } else {
      const hardy::Input input = hardy::read_input(path);
      if (minorant->parsed()) {
        report = hardy::minorant_report(input);
        if (!report["consistent"].get<bool>()) code = kSuiteFailure;
      } else if (constant->parsed()) {
        const auto outer = outerName == "stepanov" ? hardy::OuterExponent::inverseQ : hardy::OuterExponent::homogeneous;
        report = hardy::constant_report(input, outer, seed);
      } else {
        report = hardy::reduce_report(input);
      }
    }
    if (timing) {
      report["timingSeconds"] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    emit(report, format);
    return code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}
