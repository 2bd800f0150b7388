#pragma once

#include "eqadapt/fem.hpp"
#include "eqadapt/mesh.hpp"

#include <doctest.h>

#include <random>

namespace eqadapt::testing {

/// Random mesh with n cells; widths drawn from [1, spread] before scaling.
inline Mesh random_mesh(std::mt19937& gen, Eigen::Index n, double spread = 20.0) {
  std::uniform_real_distribution<double> width(1.0, spread);
  Eigen::VectorXd w(n);
  for (Eigen::Index i = 0; i < n; ++i) w[i] = width(gen);
  Eigen::VectorXd x(n + 1);
  x[0] = 0.0;
  double acc = 0.0;
  const double total = w.sum();
  for (Eigen::Index i = 1; i < n; ++i) {
    acc += w[i - 1];
    x[i] = acc / total;
  }
  x[n] = 1.0;
  return Mesh(std::move(x));
}

inline ScalarFunction constant(double v) {
  return [v](double) { return v; };
}

/// -(a u')' + b u' + c u = f with constant coefficients.
inline Problem constant_problem(double a, double b, double c, ScalarFunction f) {
  Problem p;
  p.label = "constant";
  p.a = constant(a);
  p.da = constant(0.0);
  p.b = constant(b);
  p.db = constant(0.0);
  p.c = constant(c);
  p.f = std::move(f);
  return p;
}

inline double relative(double value, double reference) { return std::abs(value - reference) / std::abs(reference); }

}  // namespace eqadapt::testing
