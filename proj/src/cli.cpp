#include "tlsq/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tlsq/errors.hpp"
#include "tlsq/extensions.hpp"
#include "tlsq/geometry.hpp"
#include "tlsq/linalg.hpp"
#include "tlsq/ols.hpp"
#include "tlsq/system.hpp"

namespace tlsq::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::string_view kModeNames[] = {"ols",        "tls-line",  "tls-plane",
                                           "tls-system", "tls-multi", "tls-fixed"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view cell) {
  cell = trim(cell);
  if (cell.size() >= 2 && cell.front() == '"' && cell.back() == '"') {
    cell = trim(cell.substr(1, cell.size() - 2));
  }
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  if (cell.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == ',' && !quoted) {
      cells.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  cells.push_back(line.substr(start));
  return cells;
}

std::vector<double> to_std(const Vector& v) { return v.std_vector(); }

std::vector<std::vector<double>> to_rows(const Matrix& m) {
  std::vector<std::vector<double>> rows(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  }
  return rows;
}

void fail(FitReport& report, std::string kind, std::string detail, int code) {
  report.coefficients.reset();
  report.coefficient_matrix.reset();
  report.centroid.reset();
  report.normal.reset();
  report.objective.reset();
  report.unique.reset();
  report.expressible.reset();
  report.rank_deficient.reset();
  report.error = ReportError{std::move(kind), std::move(detail), std::nullopt};
  report.exit_code = code;
}

void run_ols(const FitRequest& req, const Matrix& data, FitReport& report) {
  const std::size_t n = data.cols();
  if (n < 2) throw DimensionError("ols: need at least one predictor column and one response column");
  Matrix design = data.cols_range(0, n - 1);
  if (req.intercept) design = hstack(Matrix::column(Vector(data.rows(), 1.0)), design);
  const Vector y = data.col_vector(n - 1);
  const OlsSolution sol = solve_ols(design, y, OlsMethod::Svd);
  report.coefficients = to_std(sol.coefficients);
  report.objective = sol.residual_norm * sol.residual_norm;
  report.singular_values = to_std(jacobi_svd(design, UFactor::Thin).sigma);
  report.rank_deficient = sol.rank_deficient;
}

void run_hyperplane(const FitRequest& req, const Matrix& data, FitReport& report) {
  if (req.mode == Mode::TlsLine && data.cols() != 2) {
    throw DimensionError("tls-line: expected 2 columns, got " + std::to_string(data.cols()));
  }
  const HyperplaneFit fit = fit_hyperplane_tls(PointCloud(data));
  if (fit.explicit_coeffs) report.coefficients = to_std(*fit.explicit_coeffs);
  report.centroid = to_std(fit.centroid);
  report.normal = to_std(fit.normal);
  report.objective = fit.objective;
  report.singular_values = to_std(fit.sigma);
  report.unique = fit.unique;
  report.expressible = fit.expressible;
}

void require_rhs_split(const FitRequest& req, const Matrix& data, std::size_t frozen) {
  if (req.rhs_cols < 1) throw DimensionError("--rhs-cols must be at least 1");
  if (frozen + req.rhs_cols >= data.cols()) {
    throw DimensionError("column split leaves no unknowns: " + std::to_string(frozen) +
                         " frozen + " + std::to_string(req.rhs_cols) + " rhs of " +
                         std::to_string(data.cols()) + " columns");
  }
}

void run_system(const FitRequest& req, const Matrix& data, FitReport& report) {
  require_rhs_split(req, data, 0);
  if (req.rhs_cols != 1) throw DimensionError("tls-system takes one rhs column; use tls-multi");
  const std::size_t n = data.cols() - 1;
  const TlsSystemSolution sol = solve_tls_system(data.cols_range(0, n), data.col_vector(n));
  report.coefficients = to_std(sol.coefficients);
  report.objective = sol.tls_residual * sol.tls_residual;
  report.singular_values = to_std(sol.sigma);
  report.unique = sol.unique;
}

void run_multi(const FitRequest& req, const Matrix& data, FitReport& report) {
  require_rhs_split(req, data, 0);
  const std::size_t n = data.cols() - req.rhs_cols;
  const MultiRhsSolution sol =
      solve_tls_multi(data.cols_range(0, n), data.cols_range(n, req.rhs_cols));
  double tail = 0.0;
  for (std::size_t i = n; i < sol.sigma.size(); ++i) tail += sol.sigma[i] * sol.sigma[i];
  report.coefficient_matrix = to_rows(sol.x);
  report.objective = tail;
  report.singular_values = to_std(sol.sigma);
  report.unique = sol.unique;
}

void run_fixed(const FitRequest& req, const Matrix& data, FitReport& report) {
  require_rhs_split(req, data, req.frozen_cols);
  const std::size_t j = req.frozen_cols;
  const std::size_t p = req.rhs_cols;
  const std::size_t k = data.cols() - j - p;
  const FixedColsSolution sol = solve_tls_fixed(data.cols_range(0, j), data.cols_range(j, k),
                                                data.cols_range(j + k, p));
  report.coefficient_matrix = to_rows(vstack(sol.x1, sol.x2));
  report.objective = sol.minimized_value;
  report.singular_values = to_std(sol.reduced_sigma);
  report.unique = sol.x1_unique && sol.x2_unique;
}

Json report_to_json(const FitReport& r) {
  Json j;
  j["mode"] = r.mode;
  if (r.coefficients) j["coefficients"] = *r.coefficients;
  if (r.coefficient_matrix) j["coefficients"] = *r.coefficient_matrix;
  if (r.centroid) j["centroid"] = *r.centroid;
  if (r.normal) j["normal"] = *r.normal;
  if (r.objective) j["objective"] = *r.objective;
  j["singular_values"] = r.singular_values;
  if (r.unique) j["unique"] = *r.unique;
  if (r.expressible) j["expressible"] = *r.expressible;
  if (r.rank_deficient) j["rank_deficient"] = *r.rank_deficient;
  if (r.error) {
    Json e;
    e["kind"] = r.error->kind;
    e["detail"] = r.error->detail;
    if (r.error->null_vector) e["null_vector"] = *r.error->null_vector;
    j["error"] = std::move(e);
  }
  return j;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);  // no "-0"
  return buf;
}

std::string format_scalar(const Json& j) {
  switch (j.type()) {
    case Json::value_t::number_float: return format_number(j.get<double>());
    case Json::value_t::string: return j.dump();
    default: return j.dump();
  }
}

void write_json(const Json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : j.items()) {
      out += pad + "  " + Json(key).dump() + ": ";
      write_json(value, out, indent + 1);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    out += pad + "}";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ", ";
      write_json(j[i], out, indent + 1);
    }
    out += "]";
  } else {
    out += format_scalar(j);
  }
}

void write_text(const Json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      write_text(value, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  if (j.is_array() && !j.empty() && j[0].is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      write_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
    return;
  }
  out += prefix + ":";
  if (j.is_array()) {
    for (const auto& v : j) out += " " + format_scalar(v);
  } else if (j.is_string()) {
    out += " " + j.get<std::string>();
  } else {
    out += " " + format_scalar(j);
  }
  out += "\n";
}

}  // namespace

std::string_view to_string(Mode mode) noexcept {
  return kModeNames[static_cast<std::size_t>(mode)];
}

std::optional<Mode> parse_mode(std::string_view name) noexcept {
  for (std::size_t i = 0; i < std::size(kModeNames); ++i) {
    if (kModeNames[i] == name) return static_cast<Mode>(i);
  }
  return std::nullopt;
}

Matrix parse_csv_text(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t width = 0;
  bool first_content = true;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) {
      if (end == text.size()) break;
      continue;
    }

    const auto cells = split_cells(line);
    std::vector<double> values;
    values.reserve(cells.size());
    std::size_t bad_col = 0;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const auto v = parse_number(cells[c]);
      if (!v) {
        bad_col = c + 1;
        break;
      }
      values.push_back(*v);
    }

    if (first_content) {
      first_content = false;
      width = cells.size();
      if (bad_col != 0) continue;  // header row
    }
    if (cells.size() != width) {
      throw FormatError("line " + std::to_string(line_no) + ": expected " + std::to_string(width) +
                            " columns, found " + std::to_string(cells.size()),
                        line_no);
    }
    if (bad_col != 0) {
      throw FormatError("line " + std::to_string(line_no) + ", column " +
                            std::to_string(bad_col) + ": not a finite number",
                        line_no, bad_col);
    }
    rows.push_back(std::move(values));
    if (end == text.size()) break;
  }
  if (rows.empty()) throw EmptyDataError("no data rows");
  return Matrix::from_rows(rows);
}

Matrix parse_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv_text(buf.str());
}

FitReport run_on_matrix(const FitRequest& request, const Matrix& data) {
  FitReport report;
  report.mode = std::string(to_string(request.mode));
  try {
    switch (request.mode) {
      case Mode::Ols: run_ols(request, data, report); break;
      case Mode::TlsLine:
      case Mode::TlsPlane: run_hyperplane(request, data, report); break;
      case Mode::TlsSystem: run_system(request, data, report); break;
      case Mode::TlsMulti: run_multi(request, data, report); break;
      case Mode::TlsFixed: run_fixed(request, data, report); break;
    }
  } catch (const NoTlsSolutionError& e) {
    fail(report, "no_tls_solution", e.what(), 2);
    report.error->null_vector = e.null_vector();
    report.singular_values = e.singular_values();
  } catch (const DimensionError& e) {
    fail(report, "dimension_error", e.what(), 1);
  } catch (const DegenerateAbscissaError& e) {
    fail(report, "degenerate_abscissa", e.what(), 1);
  } catch (const RankDeficiencyError& e) {
    fail(report, "rank_deficiency", e.what(), 1);
  } catch (const ConvergenceError& e) {
    fail(report, "convergence", e.what(), 1);
  } catch (const EmptyDataError& e) {
    fail(report, "empty_data", e.what(), 1);
  }
  return report;
}

FitReport run(const FitRequest& request) {
  Matrix data;
  try {
    data = parse_csv(request.input_path);
  } catch (const FormatError& e) {
    FitReport report;
    report.mode = std::string(to_string(request.mode));
    fail(report, "format_error", e.what(), 1);
    return report;
  } catch (const EmptyDataError& e) {
    FitReport report;
    report.mode = std::string(to_string(request.mode));
    fail(report, "empty_data", e.what(), 1);
    return report;
  } catch (const Error& e) {
    FitReport report;
    report.mode = std::string(to_string(request.mode));
    fail(report, "io_error", e.what(), 1);
    return report;
  }
  return run_on_matrix(request, data);
}

std::string to_json(const FitReport& report) {
  std::string out;
  write_json(report_to_json(report), out, 0);
  out += "\n";
  return out;
}

std::string to_text(const FitReport& report) {
  std::string out;
  write_text(report_to_json(report), "", out);
  return out;
}

}  // namespace tlsq::cli
