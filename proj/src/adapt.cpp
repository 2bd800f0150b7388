#include "eqadapt/adapt.hpp"

#include "eqadapt/error.hpp"

#include <cmath>
#include <limits>

namespace eqadapt {

std::string_view to_string(StopReason reason) noexcept {
  switch (reason) {
    case StopReason::quality: return "quality";
    case StopReason::mesh_diff: return "mesh_diff";
    case StopReason::max_iter: return "max_iter";
  }
  return "unknown";
}

AdaptStep adapt_step(const Problem& problem, const Mesh& mesh) {
  FemSolution solution = solve(problem, mesh);
  AdaptationState state = adaptation_state(problem, solution);
  Mesh next = equidistribute(mesh, state.rho);
  return AdaptStep{std::move(solution), std::move(state), std::move(next)};
}

AdaptiveResult solve_adaptive(const Problem& problem, Eigen::Index n, const AdaptOptions& options) {
  return solve_adaptive(problem, uniform_mesh(n), options);
}

AdaptiveResult solve_adaptive(const Problem& problem, const Mesh& initial, const AdaptOptions& options) {
  if (!(options.kappa > 1.0)) throw Error(ErrorKind::invalid_argument, "kappa must exceed 1");
  if (options.max_iter < 1) throw Error(ErrorKind::invalid_argument, "max_iter must be at least 1");
  if (!(options.tol_mesh >= 0.0)) throw Error(ErrorKind::invalid_argument, "tol_mesh must be >= 0");

  const bool exact = problem.has_exact_solution();
  std::vector<TraceRecord> trace;
  Mesh mesh = initial;
  int iterations = 0;
  StopReason reason = StopReason::max_iter;

  for (int k = 0;; ++k) {
    AdaptStep step = adapt_step(problem, mesh);
    const double qmax = step.state.quality.maxCoeff();
    const double diff = mesh_distance(step.next_mesh, mesh);
    if (options.record_trace) {
      trace.push_back({k, diff, qmax,
                       exact ? h1_seminorm_error(problem, step.solution)
                             : std::numeric_limits<double>::quiet_NaN()});
    }
    if (qmax <= options.kappa) {
      reason = StopReason::quality;
      iterations = k;
      break;
    }
    mesh = std::move(step.next_mesh);
    if (diff <= options.tol_mesh) {
      reason = StopReason::mesh_diff;
      iterations = k + 1;
      break;
    }
    if (k + 1 >= options.max_iter) {
      iterations = k + 1;
      break;
    }
  }

  // Re-solve so the reported mesh, solution and state belong together.
  FemSolution solution = solve(problem, mesh);
  AdaptationState state = adaptation_state(problem, solution);
  std::optional<ErrorReport> report;
  if (exact) report = error_norms(problem, solution);
  const double qmax = state.quality.maxCoeff();
  return AdaptiveResult{std::move(mesh), std::move(solution), std::move(state), std::move(report),
                        iterations, reason, qmax, std::move(trace)};
}

std::vector<double> convergence_order(const std::vector<std::pair<double, double>>& results) {
  if (results.size() < 2) throw Error(ErrorKind::invalid_argument, "need at least two results");
  for (std::size_t k = 0; k < results.size(); ++k) {
    if (!(results[k].second > 0.0)) throw Error(ErrorKind::invalid_argument, "values must be positive");
    if (k > 0 && !(results[k].first > results[k - 1].first)) {
      throw Error(ErrorKind::invalid_argument, "element counts must increase");
    }
  }
  std::vector<double> slopes;
  for (std::size_t k = 0; k + 1 < results.size(); ++k) {
    slopes.push_back(std::log(results[k].second / results[k + 1].second) /
                     std::log(results[k + 1].first / results[k].first));
  }
  return slopes;
}

}  // namespace eqadapt
