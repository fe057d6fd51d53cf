// fit: least squares and total least squares fits of CSV data.
//
//   fit <mode> --input <path> [--rhs-cols N] [--frozen-cols J]
//       [--format json|text] [--seed S] [--no-intercept]
//
// Exit status: 0 success, 1 input error, 2 the TLS problem has no solution.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tlsq/cli.hpp"

int main(int argc, char** argv) {
  using namespace tlsq::cli;

  CLI::App app{"Ordinary and total least squares fitting"};
  app.set_version_flag("--version", "fit 1.0.0");

  std::string mode_name;
  FitRequest request;
  std::string format = "json";
  std::uint64_t seed = 0;
  bool no_intercept = false;

  app.add_option("mode", mode_name, "ols | tls-line | tls-plane | tls-system | tls-multi | tls-fixed")
      ->required()
      ->check(CLI::IsMember({"ols", "tls-line", "tls-plane", "tls-system", "tls-multi", "tls-fixed"}));
  app.add_option("--input", request.input_path, "numeric CSV file")->required();
  app.add_option("--rhs-cols", request.rhs_cols, "trailing columns forming the right-hand side")
      ->check(CLI::PositiveNumber);
  app.add_option("--frozen-cols", request.frozen_cols, "leading columns held fixed (tls-fixed)");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  auto* seed_opt = app.add_option("--seed", seed, "accepted for harness compatibility; fits are deterministic");
  app.add_flag("--no-intercept", no_intercept, "ols: fit y = X c without a constant term");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  request.mode = *parse_mode(mode_name);
  request.output_format = format == "text" ? OutputFormat::Text : OutputFormat::Json;
  request.intercept = !no_intercept;
  if (*seed_opt) request.seed = seed;
  if (request.mode != Mode::TlsFixed && request.frozen_cols != 0) {
    std::cerr << "fit: --frozen-cols only applies to tls-fixed\n";
    return 1;
  }

  const FitReport report = run(request);
  std::cout << (request.output_format == OutputFormat::Json ? to_json(report) : to_text(report));
  if (report.error) std::cerr << "fit: " << report.error->kind << ": " << report.error->detail << "\n";
  return report.exit_code;
}
