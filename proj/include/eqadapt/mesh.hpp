#pragma once

#include <Eigen/Dense>

#include <vector>

namespace eqadapt {

/// Piecewise-constant function on a mesh, one value per cell.
using CellField = Eigen::VectorXd;

/// Partition 0 = x_0 < x_1 < ... < x_N = 1 of the unit interval, N >= 2.
///
/// Construction validates the invariants; a Mesh value is always valid.
class Mesh {
 public:
  explicit Mesh(Eigen::VectorXd nodes);
  explicit Mesh(const std::vector<double>& nodes);

  /// Element count N.
  Eigen::Index cells() const noexcept { return nodes_.size() - 1; }
  const Eigen::VectorXd& nodes() const noexcept { return nodes_; }
  double node(Eigen::Index i) const { return nodes_[i]; }

  /// Cell widths h_1..h_N (stored 0-based).
  Eigen::VectorXd widths() const { return nodes_.tail(cells()) - nodes_.head(cells()); }
  double width(Eigen::Index cell) const { return nodes_[cell + 1] - nodes_[cell]; }
  double max_width() const { return widths().maxCoeff(); }

  friend bool operator==(const Mesh& a, const Mesh& b) { return a.nodes_ == b.nodes_; }

 private:
  Eigen::VectorXd nodes_;
};

/// Bounds 1/(rho0 N) <= h_i <= 2/N defining the admissible mesh set.
struct SNParams {
  double rho0 = 10.0;
};

struct SNReport {
  bool pass = true;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  std::vector<Eigen::Index> below_lower;  // 0-based cell indices
  std::vector<Eigen::Index> above_upper;
};

Mesh uniform_mesh(Eigen::Index n);

/// New mesh carrying equal mass sigma/N of the piecewise-constant density
/// `rho` in every cell. The cumulative integral is piecewise linear, so
/// the inversion is exact.
Mesh equidistribute(const Mesh& mesh, const CellField& rho);

/// Q_i = N rho_i h_i / sigma with sigma = sum rho_i h_i.
CellField quality_measure(const Mesh& mesh, const CellField& rho);

/// Max-norm distance between node vectors of two meshes with equal N.
double mesh_distance(const Mesh& a, const Mesh& b);

SNReport validate_in_sn(const Mesh& mesh, const SNParams& params);

}  // namespace eqadapt
