#include "eqadapt/estimator.hpp"

#include "eqadapt/error.hpp"
#include "eqadapt/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace eqadapt {

namespace {

constexpr int linf_samples_per_cell = 17;

void require_exact(const Problem& problem) {
  if (!problem.has_exact_solution()) {
    throw Error(ErrorKind::unsupported, "problem '" + problem.label + "' has no exact solution");
  }
}

}  // namespace

double discrete_residual(const Problem& problem, const FemSolution& solution, Eigen::Index cell, double x) {
  const double left = solution.mesh.node(cell);
  const double h = solution.mesh.width(cell);
  const double slope = (solution.nodal[cell + 1] - solution.nodal[cell]) / h;
  const double value = solution.nodal[cell] + slope * (x - left);
  return problem.f(x) + problem.da(x) * slope - problem.b(x) * slope - problem.c(x) * value;
}

CellField residual_averages(const Problem& problem, const FemSolution& solution) {
  const Mesh& mesh = solution.mesh;
  CellField averages(mesh.cells());
  for (Eigen::Index i = 0; i < mesh.cells(); ++i) {
    const double left = mesh.node(i);
    const double right = mesh.node(i + 1);
    const double integral = integrate_cell(
        [&](double x) {
          const double r = discrete_residual(problem, solution, i, x);
          return r * r;
        },
        left, right);
    averages[i] = std::sqrt(integral / (right - left));
    if (!std::isfinite(averages[i])) {
      std::ostringstream msg;
      msg << "residual is not finite on cell [" << left << ", " << right << "]";
      throw Error(ErrorKind::numeric_error, msg.str());
    }
  }
  return averages;
}

double intensity(const Mesh& mesh, const CellField& averages) {
  const double sum = mesh.widths().dot(averages.array().pow(2.0 / 3.0).matrix());
  return sum * sum * sum;
}

CellField adaptation_function(const CellField& averages, double alpha) {
  const double denom = std::max(alpha, alpha_floor);
  return (1.0 + averages.array().square() / denom).pow(1.0 / 3.0).matrix();
}

AdaptationState adaptation_state(const Mesh& mesh, const CellField& averages) {
  AdaptationState state;
  state.averages = averages;
  state.alpha = intensity(mesh, averages);
  state.rho = adaptation_function(averages, state.alpha);
  state.sigma = state.rho.dot(mesh.widths());
  state.quality = quality_measure(mesh, state.rho);
  return state;
}

AdaptationState adaptation_state(const Problem& problem, const FemSolution& solution) {
  return adaptation_state(solution.mesh, residual_averages(problem, solution));
}

Estimators estimators(const Mesh& mesh, const CellField& averages, double alpha, const CellField& rho) {
  const Eigen::ArrayXd h = mesh.widths().array();
  Estimators out;
  out.eta = std::sqrt((h.cube() * averages.array().square()).sum());
  out.eta_tilde = std::sqrt(alpha * (h * rho.array()).cube().sum());
  return out;
}

double reliability_constant(const Problem& problem, const Mesh& mesh) {
  using Rule = GaussLegendre5<double>;
  double a_min = problem.a(mesh.node(0));
  for (Eigen::Index i = 0; i < mesh.cells(); ++i) {
    const double left = mesh.node(i);
    const double h = mesh.width(i);
    a_min = std::min(a_min, problem.a(left + h));
    for (int q = 0; q < Rule::size; ++q) a_min = std::min(a_min, problem.a(left + 0.5 * h * (1.0 + Rule::points[q])));
  }
  if (!(a_min > 0.0)) throw Error(ErrorKind::ill_posed_problem, "diffusion coefficient is not positive");
  return 0.5 / a_min;
}

double quasi_norm_two_thirds(const ScalarFunction& g, int panels) {
  if (panels < 1) throw Error(ErrorKind::invalid_argument, "need at least one panel");
  double sum = 0.0;
  for (int k = 0; k < panels; ++k) {
    sum += integrate_cell([&](double x) { return std::pow(std::abs(g(x)), 2.0 / 3.0); },
                          double(k) / panels, double(k + 1) / panels);
  }
  return std::pow(sum, 1.5);
}

double h1_seminorm_error(const Problem& problem, const FemSolution& solution) {
  require_exact(problem);
  const Mesh& mesh = solution.mesh;
  const Eigen::VectorXd slopes = solution.slopes();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < mesh.cells(); ++i) {
    sum += integrate_cell(
        [&](double x) {
          const double e = problem.exact_du(x) - slopes[i];
          return e * e;
        },
        mesh.node(i), mesh.node(i + 1));
  }
  return std::sqrt(sum);
}

ErrorReport error_norms(const Problem& problem, const FemSolution& solution) {
  require_exact(problem);
  const Mesh& mesh = solution.mesh;
  const Eigen::VectorXd slopes = solution.slopes();

  ErrorReport report;
  report.h1_semi = h1_seminorm_error(problem, solution);
  double l2 = 0.0;
  for (Eigen::Index i = 0; i < mesh.cells(); ++i) {
    const double left = mesh.node(i);
    const double right = mesh.node(i + 1);
    const auto error = [&](double x) { return problem.exact_u(x) - (solution.nodal[i] + slopes[i] * (x - left)); };
    l2 += integrate_cell([&](double x) { return error(x) * error(x); }, left, right);
    for (int s = 0; s < linf_samples_per_cell; ++s) {
      const double x = left + (right - left) * double(s) / double(linf_samples_per_cell - 1);
      report.linf = std::max(report.linf, std::abs(error(x)));
    }
  }
  report.l2 = std::sqrt(l2);

  const AdaptationState state = adaptation_state(problem, solution);
  const Estimators est = estimators(mesh, state.averages, state.alpha, state.rho);
  report.reliability_constant = reliability_constant(problem, mesh);
  report.eta = report.reliability_constant * est.eta;
  report.eta_tilde = report.reliability_constant * est.eta_tilde;
  report.alpha_sqrt = std::sqrt(state.alpha);
  if (problem.exact_residual) report.r_quasi_norm = quasi_norm_two_thirds(problem.exact_residual);
  return report;
}

}  // namespace eqadapt
