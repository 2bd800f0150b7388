#include "eqadapt/fem.hpp"

#include "eqadapt/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace eqadapt {

namespace {

constexpr double coercivity_slack = 1e-12;

double checked(const ScalarFunction& fn, double x, const char* name) {
  const double value = fn(x);
  if (!std::isfinite(value)) {
    std::ostringstream msg;
    msg << "coefficient " << name << " is not finite at x = " << x;
    throw Error(ErrorKind::numeric_error, msg.str());
  }
  return value;
}

}  // namespace

TridiagonalSystem assemble(const Problem& problem, const Mesh& mesh) {
  using Rule = GaussLegendre5<double>;
  const Eigen::Index n = mesh.cells();
  const Eigen::Index unknowns = n - 1;

  TridiagonalSystem system;
  system.sub = Eigen::VectorXd::Zero(unknowns - 1);
  system.diag = Eigen::VectorXd::Zero(unknowns);
  system.super = Eigen::VectorXd::Zero(unknowns - 1);
  system.rhs = Eigen::VectorXd::Zero(unknowns);

  for (Eigen::Index cell = 0; cell < n; ++cell) {
    const double left = mesh.node(cell);
    const double right = mesh.node(cell + 1);
    const double h = right - left;
    const double mid = 0.5 * (left + right);
    const std::array<double, 2> grad{-1.0 / h, 1.0 / h};

    // local[test][trial] = B(phi_trial, phi_test), load[test] = (f, phi_test)
    double local[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
    double load[2] = {0.0, 0.0};
    for (int q = 0; q < Rule::size; ++q) {
      const double x = mid + 0.5 * h * Rule::points[q];
      const double w = 0.5 * h * Rule::weights[q];
      const double a = checked(problem.a, x, "a");
      const double b = checked(problem.b, x, "b");
      const double db = checked(problem.db, x, "b'");
      const double c = checked(problem.c, x, "c");
      const double f = checked(problem.f, x, "f");
      if (!(a > 0.0)) {
        std::ostringstream msg;
        msg << "diffusion coefficient a = " << a << " is not positive at x = " << x;
        throw Error(ErrorKind::ill_posed_problem, msg.str());
      }
      if (c - 0.5 * db < -coercivity_slack) {
        std::ostringstream msg;
        msg << "c - b'/2 = " << c - 0.5 * db << " < 0 at x = " << x;
        throw Error(ErrorKind::ill_posed_problem, msg.str());
      }
      const std::array<double, 2> phi{(right - x) / h, (x - left) / h};
      for (int t = 0; t < 2; ++t) {
        load[t] += w * f * phi[t];
        for (int s = 0; s < 2; ++s) {
          local[t][s] += w * (a * grad[s] * grad[t] + b * grad[s] * phi[t] + c * phi[s] * phi[t]);
        }
      }
    }

    // Interior unknown k-1 belongs to node k; boundary nodes are eliminated.
    const Eigen::Index li = cell - 1;  // unknown of the left node
    const Eigen::Index ri = cell;      // unknown of the right node
    const bool has_left = cell >= 1;
    const bool has_right = cell + 1 <= n - 1;
    if (has_left) {
      system.diag[li] += local[0][0];
      system.rhs[li] += load[0];
    }
    if (has_right) {
      system.diag[ri] += local[1][1];
      system.rhs[ri] += load[1];
    }
    if (has_left && has_right) {
      system.super[li] += local[0][1];
      system.sub[li] += local[1][0];
    }
  }
  return system;
}

FemSolution solve(const Problem& problem, const Mesh& mesh) {
  const Eigen::VectorXd interior = solve_tridiagonal(assemble(problem, mesh));
  Eigen::VectorXd nodal = Eigen::VectorXd::Zero(mesh.cells() + 1);
  nodal.segment(1, interior.size()) = interior;
  return FemSolution{mesh, std::move(nodal)};
}

Eigen::Index locate_cell(const Mesh& mesh, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream msg;
    msg << "x = " << x << " lies outside [0, 1]";
    throw Error(ErrorKind::out_of_domain, msg.str());
  }
  const Eigen::VectorXd& nodes = mesh.nodes();
  const double* begin = nodes.data();
  const double* end = begin + nodes.size();
  const Eigen::Index upper = std::lower_bound(begin, end, x) - begin;
  return std::max<Eigen::Index>(upper, 1) - 1;
}

std::pair<double, double> evaluate(const FemSolution& solution, double x) {
  const Eigen::Index cell = locate_cell(solution.mesh, x);
  const double left = solution.mesh.node(cell);
  const double h = solution.mesh.width(cell);
  const double slope = (solution.nodal[cell + 1] - solution.nodal[cell]) / h;
  return {solution.nodal[cell] + slope * (x - left), slope};
}

}  // namespace eqadapt
