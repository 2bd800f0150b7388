#pragma once

#include "eqadapt/estimator.hpp"
#include "eqadapt/fem.hpp"
#include "eqadapt/mesh.hpp"

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace eqadapt {

struct AdaptOptions {
  double kappa = 1.01;     // stop once max_i Q_i <= kappa
  double tol_mesh = 1e-8;  // or once consecutive meshes differ by at most this
  int max_iter = 1000;
  bool record_trace = false;
};

enum class StopReason { quality, mesh_diff, max_iter };

std::string_view to_string(StopReason reason) noexcept;

/// One pass of the loop, on mesh pi^(k).
struct TraceRecord {
  int k = 0;
  double mesh_diff = 0.0;     // |pi^(k+1) - pi^(k)|_inf
  double max_quality = 0.0;   // max_i Q_i^(k)
  double h1_error = 0.0;      // NaN when the problem has no exact solution
};

struct AdaptStep {
  FemSolution solution;   // u_h on the input mesh
  AdaptationState state;  // computed from `solution`
  Mesh next_mesh;         // equidistributes state.rho
};

struct AdaptiveResult {
  Mesh final_mesh;
  FemSolution final_solution;
  AdaptationState final_state;
  std::optional<ErrorReport> final_report;
  /// Number of mesh updates applied to the initial mesh.
  int iterations = 0;
  StopReason converged_by = StopReason::max_iter;
  double max_quality = 0.0;
  std::vector<TraceRecord> trace;
};

/// Solve on `mesh`, estimate, equidistribute: one application of the
/// solve-then-equidistribute map.
AdaptStep adapt_step(const Problem& problem, const Mesh& mesh);

/// Fixed-point iteration from the uniform mesh with `n` cells.
AdaptiveResult solve_adaptive(const Problem& problem, Eigen::Index n, const AdaptOptions& options = {});

/// Same, starting from an arbitrary mesh.
AdaptiveResult solve_adaptive(const Problem& problem, const Mesh& initial, const AdaptOptions& options = {});

/// Pairwise observed orders log(v_k / v_{k+1}) / log(n_{k+1} / n_k).
std::vector<double> convergence_order(const std::vector<std::pair<double, double>>& results);

}  // namespace eqadapt
