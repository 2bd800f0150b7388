#include "eqadapt/sweep.hpp"

#include "eqadapt/error.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <future>
#include <sstream>

namespace eqadapt {

namespace {

using nlohmann::json;

const char* const summary_columns[] = {"n",           "iterations", "converged_by", "h1_error", "eta_tilde",
                                       "alpha_sqrt",  "max_quality", "sigma",       "order_h1"};

std::string format_optional(const std::optional<double>& value) {
  return value ? format_number(*value) : std::string();
}

std::optional<double> parse_optional(const std::string& field) {
  if (field.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw Error(ErrorKind::invalid_argument, "not a number: '" + field + "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) fields.push_back(field);
  if (!line.empty() && line.back() == sep) fields.emplace_back();
  return fields;
}

SummaryRow run_one(const Problem& problem, int n, const RunConfig& config) {
  SummaryRow row;
  row.n = n;
  try {
    const AdaptiveResult result = solve_adaptive(problem, Eigen::Index(n), config.options);
    row.iterations = result.iterations;
    row.converged_by = std::string(to_string(result.converged_by));
    row.h1_error = result.final_report->h1_semi;
    row.eta_tilde = result.final_report->eta_tilde;
    row.alpha_sqrt = result.final_report->alpha_sqrt;
    row.max_quality = result.max_quality;
    row.sigma = result.final_state.sigma;
    if (config.options.record_trace && !config.trace_dir.empty()) {
      emit_trace(result, config.trace_dir / ("trace_" + std::string(to_string(config.benchmark.name)) + "_N" +
                                             std::to_string(n) + ".csv"));
    }
  } catch (const std::exception& e) {
    row = SummaryRow{};
    row.n = n;
    row.converged_by = "failed";
    row.status = e.what();
  }
  return row;
}

json optional_json(const std::optional<double>& value) { return value ? json(*value) : json(nullptr); }

std::optional<double> json_optional(const json& value) {
  if (value.is_null()) return std::nullopt;
  return value.get<double>();
}

}  // namespace

void validate(const RunConfig& config) {
  if (config.n_list.empty()) throw Error(ErrorKind::invalid_argument, "N list is empty");
  for (std::size_t k = 0; k < config.n_list.size(); ++k) {
    if (config.n_list[k] < (config.count_nodes ? 3 : 2)) {
      throw Error(ErrorKind::invalid_argument, "every N must describe at least two cells");
    }
    if (k > 0 && config.n_list[k] <= config.n_list[k - 1]) {
      throw Error(ErrorKind::invalid_argument, "N list must be strictly increasing");
    }
  }
  if (!(config.options.kappa > 1.0)) throw Error(ErrorKind::invalid_argument, "kappa must exceed 1");
  if (config.options.max_iter < 1) throw Error(ErrorKind::invalid_argument, "max_iter must be at least 1");
  if (!(config.options.tol_mesh >= 0.0)) throw Error(ErrorKind::invalid_argument, "tol_mesh must be >= 0");
}

std::vector<SummaryRow> run_sweep(const RunConfig& config) {
  validate(config);
  const Problem problem = make_problem(config.benchmark);
  if (!problem.has_exact_solution()) {
    throw Error(ErrorKind::unsupported, "sweeps report true errors and need an exact solution");
  }
  if (config.options.record_trace && !config.trace_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(config.trace_dir, ec);
    if (ec) throw Error(ErrorKind::io_error, "cannot create " + config.trace_dir.string() + ": " + ec.message());
  }

  std::vector<std::future<SummaryRow>> pending;
  for (int entry : config.n_list) {
    const int n = config.count_nodes ? entry - 1 : entry;
    pending.push_back(std::async(std::launch::async, run_one, std::cref(problem), n, std::cref(config)));
  }
  std::vector<SummaryRow> rows;
  for (auto& f : pending) rows.push_back(f.get());

  for (std::size_t k = 1; k < rows.size(); ++k) {
    const SummaryRow& prev = rows[k - 1];
    SummaryRow& row = rows[k];
    const auto order = [&](const std::optional<double>& a, const std::optional<double>& b) -> std::optional<double> {
      if (!a || !b || !(*a > 0.0) || !(*b > 0.0)) return std::nullopt;
      return convergence_order({{double(prev.n), *a}, {double(row.n), *b}}).front();
    };
    row.order_h1 = order(prev.h1_error, row.h1_error);
    row.order_eta_tilde = order(prev.eta_tilde, row.eta_tilde);
  }
  return rows;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

void write_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out) {
  for (std::size_t c = 0; c < std::size(summary_columns); ++c) out << (c ? "," : "") << summary_columns[c];
  out << '\n';
  for (const SummaryRow& row : rows) {
    out << row.n << ',' << row.iterations << ',' << row.converged_by << ',' << format_optional(row.h1_error) << ','
        << format_optional(row.eta_tilde) << ',' << format_optional(row.alpha_sqrt) << ','
        << format_optional(row.max_quality) << ',' << format_optional(row.sigma) << ','
        << format_optional(row.order_h1) << '\n';
  }
}

void write_summary_json(const std::vector<SummaryRow>& rows, std::ostream& out) {
  json doc = json::array();
  for (const SummaryRow& row : rows) {
    doc.push_back({{"n", row.n},
                   {"iterations", row.iterations},
                   {"converged_by", row.converged_by},
                   {"h1_error", optional_json(row.h1_error)},
                   {"eta_tilde", optional_json(row.eta_tilde)},
                   {"alpha_sqrt", optional_json(row.alpha_sqrt)},
                   {"max_quality", optional_json(row.max_quality)},
                   {"sigma", optional_json(row.sigma)},
                   {"order_h1", optional_json(row.order_h1)},
                   {"order_eta_tilde", optional_json(row.order_eta_tilde)},
                   {"status", row.status}});
  }
  out << doc.dump(2) << '\n';
}

void write_summary(const std::vector<SummaryRow>& rows, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::json) {
    write_summary_json(rows, out);
  } else {
    write_summary_csv(rows, out);
  }
}

std::vector<SummaryRow> read_summary_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorKind::invalid_argument, "summary is empty");
  const auto header = split(line, ',');
  if (header.size() != std::size(summary_columns)) {
    throw Error(ErrorKind::invalid_argument, "unexpected summary header: " + line);
  }
  std::vector<SummaryRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != std::size(summary_columns)) {
      throw Error(ErrorKind::invalid_argument, "malformed summary row: " + line);
    }
    SummaryRow row;
    row.n = std::stoi(fields[0]);
    row.iterations = std::stoi(fields[1]);
    row.converged_by = fields[2];
    row.h1_error = parse_optional(fields[3]);
    row.eta_tilde = parse_optional(fields[4]);
    row.alpha_sqrt = parse_optional(fields[5]);
    row.max_quality = parse_optional(fields[6]);
    row.sigma = parse_optional(fields[7]);
    row.order_h1 = parse_optional(fields[8]);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<SummaryRow> read_summary_json(std::istream& in) {
  const json doc = json::parse(in);
  std::vector<SummaryRow> rows;
  for (const json& item : doc) {
    SummaryRow row;
    row.n = item.at("n").get<int>();
    row.iterations = item.at("iterations").get<int>();
    row.converged_by = item.at("converged_by").get<std::string>();
    row.h1_error = json_optional(item.at("h1_error"));
    row.eta_tilde = json_optional(item.at("eta_tilde"));
    row.alpha_sqrt = json_optional(item.at("alpha_sqrt"));
    row.max_quality = json_optional(item.at("max_quality"));
    row.sigma = json_optional(item.at("sigma"));
    row.order_h1 = json_optional(item.at("order_h1"));
    row.order_eta_tilde = json_optional(item.at("order_eta_tilde"));
    row.status = item.at("status").get<std::string>();
    rows.push_back(std::move(row));
  }
  return rows;
}

void emit_trace(const AdaptiveResult& result, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::io_error, "cannot open " + path.string() + " for writing");
  out << "k,mesh_diff,qmax_minus_1,h1_error\n";
  for (const TraceRecord& rec : result.trace) {
    out << rec.k << ',' << format_number(rec.mesh_diff) << ',' << format_number(rec.max_quality - 1.0) << ','
        << format_number(rec.h1_error) << '\n';
  }
  if (!out) throw Error(ErrorKind::io_error, "write failed for " + path.string());

  std::filesystem::path mesh_path = path;
  mesh_path.replace_filename(path.stem().string() + "_mesh" + path.extension().string());
  std::ofstream mesh_out(mesh_path);
  if (!mesh_out) throw Error(ErrorKind::io_error, "cannot open " + mesh_path.string() + " for writing");
  mesh_out << "i,x,u_h\n";
  const Mesh& mesh = result.final_mesh;
  for (Eigen::Index i = 0; i <= mesh.cells(); ++i) {
    mesh_out << i << ',' << format_number(mesh.node(i)) << ',' << format_number(result.final_solution.nodal[i])
             << '\n';
  }
  if (!mesh_out) throw Error(ErrorKind::io_error, "write failed for " + mesh_path.string());
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io_error, "cannot open config " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::invalid_argument, "config " + path.string() + ": " + e.what());
  }

  RunConfig config;
  try {
    if (doc.contains("problem")) config.benchmark.name = parse_benchmark(doc["problem"].get<std::string>());
    for (const char* key : {"epsilon", "p", "q", "r", "alpha"}) {
      if (doc.contains(key)) config.benchmark.params[key] = doc[key].get<double>();
    }
    if (doc.contains("n_list")) config.n_list = doc["n_list"].get<std::vector<int>>();
    if (doc.contains("kappa")) config.options.kappa = doc["kappa"].get<double>();
    if (doc.contains("tol_mesh")) config.options.tol_mesh = doc["tol_mesh"].get<double>();
    if (doc.contains("max_iter")) config.options.max_iter = doc["max_iter"].get<int>();
    if (doc.contains("nodes")) config.count_nodes = doc["nodes"].get<bool>();
    if (doc.contains("trace")) config.options.record_trace = doc["trace"].get<bool>();
    if (doc.contains("out")) config.summary_path = doc["out"].get<std::string>();
    if (doc.contains("trace_dir")) config.trace_dir = doc["trace_dir"].get<std::string>();
    if (doc.contains("format")) {
      const auto format = doc["format"].get<std::string>();
      if (format == "csv") {
        config.format = OutputFormat::csv;
      } else if (format == "json") {
        config.format = OutputFormat::json;
      } else {
        throw Error(ErrorKind::invalid_argument, "unknown format '" + format + "'");
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::invalid_argument, "config " + path.string() + ": " + e.what());
  }
  return config;
}

}  // namespace eqadapt
