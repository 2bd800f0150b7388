#pragma once

#include "eqadapt/error.hpp"
#include "eqadapt/mesh.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <string>
#include <utility>

namespace eqadapt {

using ScalarFunction = std::function<double(double)>;

/// -(a u')' + b u' + c u = f on (0, 1), u(0) = u(1) = 0.
///
/// `da` and `db` are the derivatives of `a` and `b`; they are supplied, not
/// differenced. The exact solution and exact residual r = f + a'u' - bu' - cu
/// are optional and only needed for error reporting.
struct Problem {
  std::string label;
  ScalarFunction a, da, b, db, c, f;
  ScalarFunction exact_u, exact_du, exact_residual;

  bool has_exact_solution() const { return exact_u && exact_du; }
};

/// Interior system A U = F for the nodal values at x_1..x_{N-1}.
template <typename Scalar>
struct BasicTridiagonalSystem {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  Vector sub;    // A(i, i-1), i = 1..n-1
  Vector diag;   // A(i, i)
  Vector super;  // A(i, i+1), i = 0..n-2
  Vector rhs;

  Eigen::Index size() const noexcept { return diag.size(); }
};

using TridiagonalSystem = BasicTridiagonalSystem<double>;

/// A * v for a tridiagonal system.
template <typename Scalar>
typename BasicTridiagonalSystem<Scalar>::Vector multiply(
    const BasicTridiagonalSystem<Scalar>& system,
    const typename BasicTridiagonalSystem<Scalar>::Vector& v) {
  const Eigen::Index n = system.size();
  typename BasicTridiagonalSystem<Scalar>::Vector out = system.diag.cwiseProduct(v);
  if (n > 1) {
    out.tail(n - 1) += system.sub.cwiseProduct(v.head(n - 1));
    out.head(n - 1) += system.super.cwiseProduct(v.tail(n - 1));
  }
  return out;
}

/// Thomas algorithm. Throws singular_system on a (near) zero pivot.
template <typename Scalar>
typename BasicTridiagonalSystem<Scalar>::Vector solve_tridiagonal(const BasicTridiagonalSystem<Scalar>& system) {
  using std::abs;
  using Vector = typename BasicTridiagonalSystem<Scalar>::Vector;
  const Eigen::Index n = system.size();
  if (n < 1 || system.rhs.size() != n || system.sub.size() != n - 1 || system.super.size() != n - 1) {
    throw Error(ErrorKind::invalid_argument, "inconsistent tridiagonal system dimensions");
  }
  constexpr double min_pivot = 1e-300;

  Vector upper(n > 1 ? n - 1 : 0);
  Vector y(n);
  Scalar pivot = system.diag[0];
  if (!(abs(pivot) >= Scalar(min_pivot))) throw Error(ErrorKind::singular_system, "zero pivot in row 0");
  y[0] = system.rhs[0] / pivot;
  for (Eigen::Index i = 1; i < n; ++i) {
    upper[i - 1] = system.super[i - 1] / pivot;
    pivot = system.diag[i] - system.sub[i - 1] * upper[i - 1];
    if (!(abs(pivot) >= Scalar(min_pivot))) {
      throw Error(ErrorKind::singular_system, "zero pivot in row " + std::to_string(i));
    }
    y[i] = (system.rhs[i] - system.sub[i - 1] * y[i - 1]) / pivot;
  }
  for (Eigen::Index i = n - 2; i >= 0; --i) y[i] -= upper[i] * y[i + 1];
  return y;
}

/// Piecewise-linear Galerkin solution; nodal values include the zero
/// boundary values at both ends.
struct FemSolution {
  Mesh mesh;
  Eigen::VectorXd nodal;

  /// Constant slope of u_h on each cell.
  Eigen::VectorXd slopes() const {
    const Eigen::Index n = mesh.cells();
    return (nodal.tail(n) - nodal.head(n)).cwiseQuotient(mesh.widths());
  }
};

/// Stiffness matrix and load vector, integrated with the 5-point rule per
/// cell. Checks a > 0 and c - b'/2 >= 0 at every quadrature point.
TridiagonalSystem assemble(const Problem& problem, const Mesh& mesh);

FemSolution solve(const Problem& problem, const Mesh& mesh);

/// (u_h(x), u_h'(x)). At interior nodes the slope of the left cell is used.
std::pair<double, double> evaluate(const FemSolution& solution, double x);

/// Index of the cell containing x, left cell at interior nodes.
Eigen::Index locate_cell(const Mesh& mesh, double x);

}  // namespace eqadapt
