#pragma once

#include "eqadapt/fem.hpp"
#include "eqadapt/mesh.hpp"

#include <optional>

namespace eqadapt {

/// Lower limit applied to the intensity before dividing by it; reached
/// only when the residual vanishes identically.
inline constexpr double alpha_floor = 1e-30;

/// Everything the mesh update consumes, computed from one discrete solution.
struct AdaptationState {
  CellField averages;  // L2 cell averages of the residual
  double alpha = 0.0;  // intensity
  CellField rho;       // adaptation function, >= 1
  double sigma = 0.0;  // sum rho_i h_i
  CellField quality;   // N rho_i h_i / sigma
};

struct Estimators {
  double eta = 0.0;
  double eta_tilde = 0.0;
};

/// True errors and estimator bounds. `eta` and `eta_tilde` here are bounds
/// on the H1 seminorm error: the raw sums from `estimators` multiplied by
/// `reliability_constant` = 1/(2 a_0), where a_0 is the smallest diffusion
/// coefficient seen on the mesh. The constant combines coercivity with the
/// interpolation bound |v - I_h v|_K <= (h_i / 2) |v'|_K.
struct ErrorReport {
  double h1_semi = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
  double eta = 0.0;
  double eta_tilde = 0.0;
  double reliability_constant = 0.0;
  double alpha_sqrt = 0.0;
  std::optional<double> r_quasi_norm;  // (int |r|^{2/3})^{3/2}, needs the exact residual
};

/// Residual r_h = f + a'u_h' - b u_h' - c u_h evaluated pointwise on `cell`.
double discrete_residual(const Problem& problem, const FemSolution& solution, Eigen::Index cell, double x);

/// (h_i^{-1} int_{K_i} |r_h|^2)^{1/2} for every cell.
CellField residual_averages(const Problem& problem, const FemSolution& solution);

/// [sum_i h_i <r_h>_i^{2/3}]^3
double intensity(const Mesh& mesh, const CellField& averages);

/// rho_i = (1 + <r_h>_i^2 / max(alpha, alpha_floor))^{1/3}
CellField adaptation_function(const CellField& averages, double alpha);

/// Averages, intensity, density, sigma and quality in one pass.
AdaptationState adaptation_state(const Mesh& mesh, const CellField& averages);
AdaptationState adaptation_state(const Problem& problem, const FemSolution& solution);

/// eta^2 = sum h_i^3 <r_h>_i^2 and eta_tilde^2 = alpha sum (h_i rho_i)^3.
Estimators estimators(const Mesh& mesh, const CellField& averages, double alpha, const CellField& rho);

/// 1 / (2 min a) over the nodes and quadrature points of `mesh`.
double reliability_constant(const Problem& problem, const Mesh& mesh);

/// (int_0^1 |g|^{2/3} dx)^{3/2} by the 5-point rule on `panels` uniform panels.
double quasi_norm_two_thirds(const ScalarFunction& g, int panels = 4096);

/// True error norms plus the estimator quantities. Throws unsupported when
/// the problem carries no exact solution.
ErrorReport error_norms(const Problem& problem, const FemSolution& solution);

/// Only the H1 seminorm of u - u_h.
double h1_seminorm_error(const Problem& problem, const FemSolution& solution);

}  // namespace eqadapt
