#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cli.hpp"

using namespace twistlab;

int main(int argc, char** argv) {
  cli::JobSpec job;
  std::string mode, format = "json";
  std::optional<double> tolerance;
  std::optional<int> degree;

  CLI::App app{"Twisted groupoid algebras, Cech cocycles and Dixmier-Douady classes"};
  app.add_option("command", job.command, "Command to run")->required()->check(CLI::IsMember(cli::commands()));
  app.add_option("--input", job.inputs, "Input JSON file (repeatable)");
  app.add_option("--output", job.output, "Write the report here instead of stdout");
  app.add_option("--mode", mode, "Override the cochain mode")->check(CLI::IsMember({"pointwise", "nerve"}));
  app.add_option("--tau", job.taus, "Restrict to these character indices");
  app.add_option("--tolerance", tolerance, "Floating-point tolerance");
  app.add_option("--seed", job.seed, "Seed for randomized checks");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--degree", degree, "Cohomology degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return e.get_exit_code() == 0 ? code : cli::kExitInput;
  }
  if (!mode.empty()) job.mode = parse_mode(mode);
  job.tolerance = tolerance;
  job.degree = degree;
  job.format = format == "text" ? cli::Format::text : cli::Format::json;

  const cli::RunResult result = cli::run(job);
  const std::string text = cli::render(result, job.format);
  if (job.output) {
    std::ofstream out(*job.output);
    if (!out) {
      std::cerr << "cannot write " << *job.output << "\n";
      return cli::kExitInput;
    }
    out << text;
  } else {
    std::cout << text;
  }
  if (result.report.contains("error")) std::cerr << "error: " << result.report["error"]["message"].get<std::string>() << "\n";
  return result.exit_code;
}
