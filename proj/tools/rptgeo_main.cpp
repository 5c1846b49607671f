// Command-line front end: validate, report, check and example.

#include "rptgeo/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#ifndef RPTGEO_DEFAULT_DATA_DIR
#define RPTGEO_DEFAULT_DATA_DIR "data"
#endif

namespace {

using namespace rptgeo;

struct OutputFlags {
  std::string json_path;
  std::string format = "text";
};

void add_output_flags(CLI::App* cmd, OutputFlags& out) {
  cmd->add_option("--json", out.json_path, "Also write the JSON report to this file");
  cmd->add_option("--format", out.format, "Output format on stdout")->check(CLI::IsMember({"text", "json"}));
}

int emit(const Report& report, const OutputFlags& out) {
  const nlohmann::json doc = render_json(report);
  if (out.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << render_text(report);
  }
  if (!out.json_path.empty()) {
    std::ofstream file(out.json_path);
    file << doc.dump(2) << "\n";
    if (!file) {
      std::cerr << "error: cannot write " << out.json_path << "\n";
      return kExitUsage;
    }
  }
  if (report.error && out.format == "json") std::cerr << "error: " << *report.error << "\n";
  return report.exit_status();
}

std::optional<std::vector<Rational>> lambda_or_nullopt(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_lambda_list(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact geometry of Riemannian almost product frame algebras"};
  app.require_subcommand(1);

  OutputFlags out;
  std::string spec_path;
  std::string suite = "all";
  std::string lambda;
  bool symbolic = false;
  std::string data_dir = RPTGEO_DEFAULT_DATA_DIR;

  CLI::App* validate_cmd = app.add_subcommand("validate", "Check the frame-algebra axioms and the Killing condition");
  validate_cmd->add_option("spec", spec_path, "Spec file")->required();
  add_output_flags(validate_cmd, out);

  CLI::App* report_cmd = app.add_subcommand("report", "Class, scalars and component tables");
  report_cmd->add_option("spec", spec_path, "Spec file")->required();
  report_cmd->add_option("--lambda", lambda, "Comma-separated values for the spec parameters");
  add_output_flags(report_cmd, out);

  CLI::App* check_cmd = app.add_subcommand("check", "Run identity and theorem checks");
  check_cmd->add_option("spec", spec_path, "Spec file")->required();
  check_cmd->add_option("--suite", suite, "Checker subset")
      ->check(CLI::IsMember({"all", "geometry", "rpt", "theorems"}));
  check_cmd->add_option("--lambda", lambda, "Comma-separated values for the spec parameters");
  add_output_flags(check_cmd, out);

  CLI::App* example_cmd = app.add_subcommand("example", "Four-dimensional example family against its golden tables");
  auto* lambda_opt = example_cmd->add_option("--lambda", lambda, "l1,l2,l3,l4");
  example_cmd->add_flag("--symbolic", symbolic, "Keep l1..l4 symbolic (default)")->excludes(lambda_opt);
  example_cmd->add_option("--data-dir", data_dir, "Directory holding golden/*.json");
  add_output_flags(example_cmd, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*validate_cmd) return emit(cmd_validate(spec_path), out);

    RunOptions options;
    options.suite = parse_suite(suite);
    options.lambda = lambda_or_nullopt(lambda);
    if (*report_cmd) return emit(cmd_report(spec_path, options), out);
    if (*check_cmd) return emit(cmd_check(spec_path, options), out);

    std::optional<std::array<Rational, 4>> values;
    if (options.lambda) {
      if (options.lambda->size() != 4) throw std::invalid_argument("--lambda expects four values l1,l2,l3,l4");
      values = std::array<Rational, 4>{(*options.lambda)[0], (*options.lambda)[1], (*options.lambda)[2],
                                       (*options.lambda)[3]};
    }
    return emit(cmd_example(values, std::filesystem::path(data_dir) / "golden"), out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
