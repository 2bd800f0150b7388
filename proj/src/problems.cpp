#include "eqadapt/problems.hpp"

#include "eqadapt/error.hpp"

#include <cmath>
#include <set>

namespace eqadapt {

namespace {

// All exponentials below are written with non-positive arguments, so the
// layer terms underflow to zero instead of overflowing.
double decay(double argument) { return std::exp(std::min(argument, 0.0)); }

ScalarFunction constant(double value) {
  return [value](double) { return value; };
}

double param(const BenchmarkSpec& spec, const char* key, double fallback) {
  const auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

}  // namespace

std::string_view to_string(Benchmark benchmark) noexcept {
  switch (benchmark) {
    case Benchmark::reaction_diffusion: return "reaction_diffusion";
    case Benchmark::convection_dominated: return "convection_dominated";
    case Benchmark::babuska_rheinboldt: return "babuska_rheinboldt";
  }
  return "unknown";
}

Benchmark parse_benchmark(std::string_view name) {
  for (Benchmark b : {Benchmark::reaction_diffusion, Benchmark::convection_dominated,
                      Benchmark::babuska_rheinboldt}) {
    if (name == to_string(b)) return b;
  }
  throw Error(ErrorKind::invalid_argument, "unknown benchmark '" + std::string(name) + "'");
}

Problem reaction_diffusion(double epsilon) {
  if (!(epsilon > 0.0)) throw Error(ErrorKind::invalid_argument, "epsilon must be positive");
  const double s = std::sqrt(epsilon);
  const double denom = 1.0 - decay(-2.0 / s);
  // Layer part E with E'' = E / eps, E(0) = E(1) = 1.
  const auto layer = [=](double x) {
    return (decay(-(1.0 - x) / s) - decay(-(1.0 + x) / s) + decay(-x / s) - decay(-(2.0 - x) / s)) / denom;
  };
  const auto dlayer = [=](double x) {
    return (decay(-(1.0 - x) / s) + decay(-(1.0 + x) / s) - decay(-x / s) - decay(-(2.0 - x) / s)) / (s * denom);
  };

  Problem p;
  p.label = "reaction_diffusion";
  p.a = constant(epsilon);
  p.da = constant(0.0);
  p.b = constant(0.0);
  p.db = constant(0.0);
  p.c = constant(1.0);
  p.f = [=](double x) { return -2.0 * epsilon - x * (1.0 - x) - 1.0; };
  p.exact_u = [=](double x) { return layer(x) - x * (1.0 - x) - 1.0; };
  p.exact_du = [=](double x) { return dlayer(x) - 1.0 + 2.0 * x; };
  // r = -eps u'' with u'' = E/eps + 2
  p.exact_residual = [=](double x) { return -layer(x) - 2.0 * epsilon; };
  return p;
}

Problem convection_dominated(double epsilon) {
  if (!(epsilon > 0.0)) throw Error(ErrorKind::invalid_argument, "epsilon must be positive");
  const double denom = 1.0 - decay(-1.0 / epsilon);
  // u = exp(-x/4) g(x)
  const auto g = [=](double x) { return x - (decay(-(1.0 - x) / epsilon) - decay(-1.0 / epsilon)) / denom; };
  const auto dg = [=](double x) { return 1.0 - decay(-(1.0 - x) / epsilon) / (epsilon * denom); };
  const auto d2g = [=](double x) { return -decay(-(1.0 - x) / epsilon) / (epsilon * epsilon * denom); };

  Problem p;
  p.label = "convection_dominated";
  p.a = constant(epsilon);
  p.da = constant(0.0);
  p.b = constant(1.0 - 0.5 * epsilon);
  p.db = constant(0.0);
  p.c = constant(0.25 * (1.0 - 0.25 * epsilon));
  p.f = [](double x) { return std::exp(-0.25 * x); };
  p.exact_u = [=](double x) { return std::exp(-0.25 * x) * g(x); };
  p.exact_du = [=](double x) { return std::exp(-0.25 * x) * (dg(x) - 0.25 * g(x)); };
  p.exact_residual = [=](double x) {
    const double d2u = std::exp(-0.25 * x) * (d2g(x) - 0.5 * dg(x) + g(x) / 16.0);
    return -epsilon * d2u;
  };
  return p;
}

Problem babuska_rheinboldt(double p_exp, double q_exp, double r_exp, double alpha) {
  if (!(alpha > 0.0)) throw Error(ErrorKind::invalid_argument, "alpha must be positive");
  const double chord = std::pow(1.0 + alpha, r_exp) - std::pow(alpha, r_exp);
  const double base = std::pow(alpha, r_exp);

  const auto u = [=](double x) { return std::pow(x + alpha, r_exp) - (base * (1.0 - x) + std::pow(1.0 + alpha, r_exp) * x); };
  const auto du = [=](double x) { return r_exp * std::pow(x + alpha, r_exp - 1.0) - chord; };
  const auto d2u = [=](double x) { return r_exp * (r_exp - 1.0) * std::pow(x + alpha, r_exp - 2.0); };
  const auto a = [=](double x) { return std::pow(x + alpha, p_exp); };
  const auto da = [=](double x) { return p_exp * std::pow(x + alpha, p_exp - 1.0); };
  const auto c = [=](double x) { return std::pow(x + alpha, q_exp); };

  Problem p;
  p.label = "babuska_rheinboldt";
  p.a = a;
  p.da = da;
  p.b = constant(0.0);
  p.db = constant(0.0);
  p.c = c;
  p.f = [=](double x) { return -da(x) * du(x) - a(x) * d2u(x) + c(x) * u(x); };
  p.exact_u = u;
  p.exact_du = du;
  p.exact_residual = [=](double x) { return -a(x) * d2u(x); };
  return p;
}

Problem make_problem(const BenchmarkSpec& spec) {
  static const std::set<std::string> layer_keys{"epsilon"};
  static const std::set<std::string> br_keys{"p", "q", "r", "alpha"};
  const auto& allowed = spec.name == Benchmark::babuska_rheinboldt ? br_keys : layer_keys;
  for (const auto& [key, value] : spec.params) {
    if (!allowed.count(key)) {
      throw Error(ErrorKind::invalid_argument,
                  "parameter '" + key + "' does not apply to " + std::string(to_string(spec.name)));
    }
  }
  switch (spec.name) {
    case Benchmark::reaction_diffusion:
      return reaction_diffusion(param(spec, "epsilon", default_epsilon_reaction));
    case Benchmark::convection_dominated:
      return convection_dominated(param(spec, "epsilon", default_epsilon_convection));
    case Benchmark::babuska_rheinboldt:
      return babuska_rheinboldt(param(spec, "p", default_p), param(spec, "q", default_q),
                                param(spec, "r", default_r), param(spec, "alpha", default_alpha));
  }
  throw Error(ErrorKind::invalid_argument, "unknown benchmark");
}

}  // namespace eqadapt
