#pragma once

#include "eqadapt/adapt.hpp"
#include "eqadapt/problems.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace eqadapt {

enum class OutputFormat { csv, json };

struct RunConfig {
  BenchmarkSpec benchmark;
  std::vector<int> n_list{21, 41, 81, 161, 321, 641};
  /// Read n_list as mesh point counts (cells = n - 1) instead of cell counts.
  bool count_nodes = false;
  AdaptOptions options;
  std::filesystem::path summary_path;  // empty: caller decides (the CLI prints to stdout)
  std::filesystem::path trace_dir;     // used when options.record_trace is set
  OutputFormat format = OutputFormat::csv;
};

/// One table row. Numeric fields are empty when the run failed; `status`
/// then holds the error message.
struct SummaryRow {
  int n = 0;  // element count
  int iterations = 0;
  std::string converged_by;  // quality | mesh_diff | max_iter | failed
  std::optional<double> h1_error;
  std::optional<double> eta_tilde;
  std::optional<double> alpha_sqrt;
  std::optional<double> max_quality;
  std::optional<double> sigma;
  std::optional<double> order_h1;         // against the previous row
  std::optional<double> order_eta_tilde;
  std::string status = "ok";

  friend bool operator==(const SummaryRow&, const SummaryRow&) = default;
};

/// Throws invalid_argument on an empty or non-increasing N list or bad options.
void validate(const RunConfig& config);

/// Independent adaptive solve per N, run concurrently, rows in N order.
/// Per-run failures are recorded in the row. Writes one trace per N into
/// `trace_dir` when tracing is enabled and the directory is set.
std::vector<SummaryRow> run_sweep(const RunConfig& config);

/// Shortest decimal string that parses back to the same double.
std::string format_number(double value);

void write_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out);
void write_summary_json(const std::vector<SummaryRow>& rows, std::ostream& out);
void write_summary(const std::vector<SummaryRow>& rows, OutputFormat format, std::ostream& out);
std::vector<SummaryRow> read_summary_csv(std::istream& in);
std::vector<SummaryRow> read_summary_json(std::istream& in);

/// Trace CSV (k, mesh_diff, qmax_minus_1, h1_error) at `path`, and the final
/// mesh (i, x, u_h) next to it as <stem>_mesh.csv. Throws io_error.
void emit_trace(const AdaptiveResult& result, const std::filesystem::path& path);

/// RunConfig from a JSON file using the same keys as the CLI flags.
RunConfig load_config(const std::filesystem::path& path);

}  // namespace eqadapt
