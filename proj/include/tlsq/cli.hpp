#pragma once

// Front end shared by the `fit` tool and its tests: CSV ingestion, solver
// dispatch and report rendering.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tlsq/matrix.hpp"

namespace tlsq::cli {

enum class Mode { Ols, TlsLine, TlsPlane, TlsSystem, TlsMulti, TlsFixed };
enum class OutputFormat { Json, Text };

std::string_view to_string(Mode mode) noexcept;
std::optional<Mode> parse_mode(std::string_view name) noexcept;

struct FitRequest {
  Mode mode = Mode::Ols;
  std::string input_path;
  std::size_t frozen_cols = 0;  // tls-fixed: leading columns held fixed
  std::size_t rhs_cols = 1;     // system modes: trailing columns form B
  OutputFormat output_format = OutputFormat::Json;
  bool intercept = true;        // ols: prepend a column of ones
  std::optional<std::uint64_t> seed;
};

struct ReportError {
  std::string kind;  // no_tls_solution, format_error, dimension_error, ...
  std::string detail;
  std::optional<std::vector<double>> null_vector;
};

// Exactly one of the solution fields (coefficients/normal/objective...) and
// `error` is populated. singular_values is diagnostic and may accompany
// either.
struct FitReport {
  std::string mode;
  std::optional<std::vector<double>> coefficients;
  std::optional<std::vector<std::vector<double>>> coefficient_matrix;  // row-major
  std::optional<std::vector<double>> centroid;
  std::optional<std::vector<double>> normal;
  std::optional<double> objective;
  std::vector<double> singular_values;
  std::optional<bool> unique;
  std::optional<bool> expressible;
  std::optional<bool> rank_deficient;
  std::optional<ReportError> error;
  int exit_code = 0;
};

// Numeric CSV: optional single header row (detected when any cell of the
// first non-blank row is not a number), LF or CRLF line ends, blank lines
// ignored, cells may be wrapped in double quotes.
Matrix parse_csv_text(std::string_view text);
Matrix parse_csv(const std::string& path);

// Solves the request; never throws for input or solver failures, which are
// reported through `error` and exit_code (1 input error, 2 no TLS solution).
FitReport run(const FitRequest& request);
FitReport run_on_matrix(const FitRequest& request, const Matrix& data);

// Deterministic rendering; numbers carry 17 significant digits.
std::string to_json(const FitReport& report);
std::string to_text(const FitReport& report);

}  // namespace tlsq::cli
