// Batch driver for adaptive solves of the benchmark problems.
//
//   eqadapt solve --problem reaction_diffusion --n-list 81,161,321,641 --out table.csv

#include "eqadapt/error.hpp"
#include "eqadapt/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

int main(int argc, char** argv) {
  CLI::App app{"Adaptive linear finite elements on equidistributing meshes"};
  app.require_subcommand(1);

  CLI::App* solve = app.add_subcommand("solve", "Run an N sweep and write the summary table");

  std::string config_file;
  std::string problem_name = "reaction_diffusion";
  double epsilon = 0.0, p = 0.0, q = 0.0, r = 0.0, alpha = 0.0;
  std::vector<int> n_list;
  double kappa = 1.01, tol_mesh = 1e-8;
  int max_iter = 1000;
  bool trace = false;
  bool nodes = false;
  std::string out_path, trace_dir, format = "csv";

  solve->add_option("--config", config_file, "JSON config file; flags override its values")->check(CLI::ExistingFile);
  auto* problem_opt = solve->add_option("--problem", problem_name,
                                        "reaction_diffusion | convection_dominated | babuska_rheinboldt");
  auto* eps_opt = solve->add_option("--epsilon", epsilon, "Perturbation parameter of the layer problems");
  auto* p_opt = solve->add_option("--p", p, "Exponent of the diffusion coefficient (babuska_rheinboldt)");
  auto* q_opt = solve->add_option("--q", q, "Exponent of the reaction coefficient (babuska_rheinboldt)");
  auto* r_opt = solve->add_option("--r", r, "Exponent of the exact solution (babuska_rheinboldt)");
  auto* alpha_opt = solve->add_option("--alpha", alpha, "Shift of the singularity (babuska_rheinboldt)");
  auto* n_opt = solve->add_option("--n-list", n_list, "Element counts, e.g. 21,41,81")->delimiter(',');
  auto* nodes_opt = solve->add_flag("--nodes", nodes, "Read --n-list as mesh point counts (cells = N - 1)");
  auto* kappa_opt = solve->add_option("--kappa", kappa, "Quality threshold for stopping");
  auto* tol_opt = solve->add_option("--tol-mesh", tol_mesh, "Mesh-difference threshold for stopping");
  auto* iter_opt = solve->add_option("--max-iter", max_iter, "Iteration cap");
  auto* trace_opt = solve->add_flag("--trace", trace, "Write per-iteration traces");
  auto* out_opt = solve->add_option("--out", out_path, "Summary file (default: stdout)");
  auto* trace_dir_opt = solve->add_option("--trace-dir", trace_dir, "Directory for trace files (default: .)");
  auto* format_opt = solve->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    eqadapt::RunConfig config = config_file.empty() ? eqadapt::RunConfig{} : eqadapt::load_config(config_file);
    if (*problem_opt || config_file.empty()) {
      const auto name = eqadapt::parse_benchmark(problem_name);
      if (name != config.benchmark.name) config.benchmark.params.clear();
      config.benchmark.name = name;
    }
    const std::map<std::string, std::pair<CLI::Option*, double>> params{
        {"epsilon", {eps_opt, epsilon}}, {"p", {p_opt, p}}, {"q", {q_opt, q}}, {"r", {r_opt, r}},
        {"alpha", {alpha_opt, alpha}}};
    for (const auto& [key, entry] : params) {
      if (*entry.first) config.benchmark.params[key] = entry.second;
    }
    if (*n_opt) config.n_list = n_list;
    if (*nodes_opt) config.count_nodes = nodes;
    if (*kappa_opt) config.options.kappa = kappa;
    if (*tol_opt) config.options.tol_mesh = tol_mesh;
    if (*iter_opt) config.options.max_iter = max_iter;
    if (*trace_opt) config.options.record_trace = trace;
    if (*out_opt) config.summary_path = out_path;
    if (*trace_dir_opt) config.trace_dir = trace_dir;
    if (config.options.record_trace && config.trace_dir.empty()) config.trace_dir = ".";
    if (*format_opt) config.format = format == "json" ? eqadapt::OutputFormat::json : eqadapt::OutputFormat::csv;

    const auto rows = eqadapt::run_sweep(config);
    if (config.summary_path.empty()) {
      eqadapt::write_summary(rows, config.format, std::cout);
    } else {
      std::ofstream out(config.summary_path);
      if (!out) throw eqadapt::Error(eqadapt::ErrorKind::io_error, "cannot write " + config.summary_path.string());
      eqadapt::write_summary(rows, config.format, out);
    }
    for (const auto& row : rows) {
      if (row.status != "ok") std::cerr << "N=" << row.n << ": " << row.status << '\n';
    }
  } catch (const eqadapt::Error& e) {
    std::cerr << "eqadapt: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
