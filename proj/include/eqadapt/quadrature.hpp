#pragma once

#include <array>

namespace eqadapt {

/// 5-point Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree 9.
template <typename Scalar = double>
struct GaussLegendre5 {
  static constexpr int size = 5;
  static constexpr std::array<Scalar, 5> points{
      Scalar(-0.9061798459386639927976269), Scalar(-0.5384693101056830910363144), Scalar(0),
      Scalar(0.5384693101056830910363144), Scalar(0.9061798459386639927976269)};
  static constexpr std::array<Scalar, 5> weights{
      Scalar(0.2369268850561890875142640), Scalar(0.4786286704993664680412915),
      Scalar(0.5688888888888888888888889), Scalar(0.4786286704993664680412915),
      Scalar(0.2369268850561890875142640)};
};

/// Integral of `f` over [a, b] with the 5-point rule.
template <typename Scalar, typename F>
Scalar integrate_cell(F&& f, Scalar a, Scalar b) {
  using Rule = GaussLegendre5<Scalar>;
  const Scalar mid = Scalar(0.5) * (a + b);
  const Scalar half = Scalar(0.5) * (b - a);
  Scalar sum(0);
  for (int q = 0; q < Rule::size; ++q) sum += Rule::weights[q] * f(mid + half * Rule::points[q]);
  return half * sum;
}

}  // namespace eqadapt
