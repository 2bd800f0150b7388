#pragma once

#include "eqadapt/fem.hpp"

#include <map>
#include <string>
#include <string_view>

namespace eqadapt {

enum class Benchmark { reaction_diffusion, convection_dominated, babuska_rheinboldt };

std::string_view to_string(Benchmark benchmark) noexcept;
/// Accepts the canonical names above; throws invalid_argument otherwise.
Benchmark parse_benchmark(std::string_view name);

/// Benchmark selector plus parameter overrides. Recognized keys:
/// "epsilon" for the two layer problems; "p", "q", "r", "alpha" for
/// babuska_rheinboldt. Missing keys take the defaults below.
struct BenchmarkSpec {
  Benchmark name = Benchmark::reaction_diffusion;
  std::map<std::string, double> params;
};

inline constexpr double default_epsilon_reaction = 1e-5;
inline constexpr double default_epsilon_convection = 2e-3;
inline constexpr double default_p = 2.0;
inline constexpr double default_q = 1.0;
inline constexpr double default_r = -1.0;
inline constexpr double default_alpha = 0.01;

/// -eps u'' + u = -2 eps - x(1-x) - 1; layers at both ends.
Problem reaction_diffusion(double epsilon = default_epsilon_reaction);

/// -eps u'' + (1 - eps/2) u' + (1 - eps/4)/4 u = exp(-x/4); layer at x = 1.
Problem convection_dominated(double epsilon = default_epsilon_convection);

/// -((x+alpha)^p u')' + (x+alpha)^q u = f with f manufactured from
/// u = (x+alpha)^r - (alpha^r (1-x) + (1+alpha)^r x).
Problem babuska_rheinboldt(double p = default_p, double q = default_q, double r = default_r,
                           double alpha = default_alpha);

Problem make_problem(const BenchmarkSpec& spec);

}  // namespace eqadapt
