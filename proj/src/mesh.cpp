#include "eqadapt/mesh.hpp"

#include "eqadapt/error.hpp"

#include <cmath>
#include <string>

namespace eqadapt {

namespace {

// Widths are differences of rounded nodes; bounds are checked up to this
// relative slack.
constexpr double bound_slack = 1e-12;

void check_density(const Mesh& mesh, const CellField& rho) {
  if (rho.size() != mesh.cells()) {
    throw Error(ErrorKind::invalid_argument,
                "adaptation function has " + std::to_string(rho.size()) + " values for " +
                    std::to_string(mesh.cells()) + " cells");
  }
  for (Eigen::Index i = 0; i < rho.size(); ++i) {
    if (!std::isfinite(rho[i])) {
      throw Error(ErrorKind::numeric_error, "non-finite adaptation function in cell " + std::to_string(i));
    }
    if (rho[i] <= 0.0) {
      throw Error(ErrorKind::invalid_adaptation_function,
                  "adaptation function must be positive, cell " + std::to_string(i));
    }
  }
}

}  // namespace

Mesh::Mesh(Eigen::VectorXd nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 3) {
    throw Error(ErrorKind::invalid_argument, "a mesh needs at least two cells");
  }
  if (nodes_[0] != 0.0 || nodes_[nodes_.size() - 1] != 1.0) {
    throw Error(ErrorKind::invalid_argument, "mesh endpoints must be exactly 0 and 1");
  }
  for (Eigen::Index i = 1; i < nodes_.size(); ++i) {
    if (!(nodes_[i - 1] < nodes_[i])) {
      throw Error(ErrorKind::invalid_argument,
                  "mesh nodes must be strictly increasing (node " + std::to_string(i) + ")");
    }
  }
}

Mesh::Mesh(const std::vector<double>& nodes)
    : Mesh(Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(nodes.data(), Eigen::Index(nodes.size())))) {}

Mesh uniform_mesh(Eigen::Index n) {
  if (n < 2) {
    throw Error(ErrorKind::invalid_argument, "uniform mesh needs n >= 2, got " + std::to_string(n));
  }
  Eigen::VectorXd x(n + 1);
  for (Eigen::Index i = 0; i <= n; ++i) x[i] = double(i) / double(n);
  x[n] = 1.0;
  return Mesh(std::move(x));
}

Mesh equidistribute(const Mesh& mesh, const CellField& rho) {
  check_density(mesh, rho);
  const Eigen::Index n = mesh.cells();
  const Eigen::VectorXd& x = mesh.nodes();

  // masses[j] = integral of rho over [x_0, x_j]
  Eigen::VectorXd masses(n + 1);
  masses[0] = 0.0;
  for (Eigen::Index j = 1; j <= n; ++j) masses[j] = masses[j - 1] + rho[j - 1] * mesh.width(j - 1);
  const double sigma = masses[n];

  Eigen::VectorXd y(n + 1);
  y[0] = 0.0;
  y[n] = 1.0;
  Eigen::Index j = 1;
  for (Eigen::Index i = 1; i < n; ++i) {
    const double target = double(i) * sigma / double(n);
    // masses[j-1] < target <= masses[j]; ties go to the left cell.
    while (j < n && masses[j] < target) ++j;
    double yi = x[j - 1] + (target - masses[j - 1]) / rho[j - 1];
    // Roundoff in the cumulative sums can push a node onto its neighbour.
    if (yi > x[j]) yi = x[j];
    y[i] = yi;
  }
  for (Eigen::Index i = 1; i <= n; ++i) {
    if (!(y[i - 1] < y[i])) {
      throw Error(ErrorKind::numeric_error, "equidistributed mesh collapsed at node " + std::to_string(i));
    }
  }
  return Mesh(std::move(y));
}

CellField quality_measure(const Mesh& mesh, const CellField& rho) {
  check_density(mesh, rho);
  const CellField mass = rho.cwiseProduct(mesh.widths());
  const double sigma = mass.sum();
  return double(mesh.cells()) * mass / sigma;
}

double mesh_distance(const Mesh& a, const Mesh& b) {
  if (a.cells() != b.cells()) {
    throw Error(ErrorKind::invalid_argument, "mesh_distance needs meshes with equal cell counts");
  }
  return (a.nodes() - b.nodes()).cwiseAbs().maxCoeff();
}

SNReport validate_in_sn(const Mesh& mesh, const SNParams& params) {
  if (!(params.rho0 >= 1.0)) {
    throw Error(ErrorKind::invalid_argument, "rho0 must be >= 1");
  }
  const double n = double(mesh.cells());
  SNReport report;
  report.lower_bound = 1.0 / (params.rho0 * n);
  report.upper_bound = 2.0 / n;
  for (Eigen::Index i = 0; i < mesh.cells(); ++i) {
    const double h = mesh.width(i);
    if (h < report.lower_bound * (1.0 - bound_slack)) report.below_lower.push_back(i);
    if (h > report.upper_bound * (1.0 + bound_slack)) report.above_upper.push_back(i);
  }
  report.pass = report.below_lower.empty() && report.above_upper.empty();
  return report;
}

}  // namespace eqadapt
