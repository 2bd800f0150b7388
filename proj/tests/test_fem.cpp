#include "eqadapt/error.hpp"
#include "eqadapt/estimator.hpp"
#include "eqadapt/fem.hpp"
#include "eqadapt/problems.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace eqadapt;
using namespace eqadapt::testing;

namespace {

Eigen::MatrixXd dense(const TridiagonalSystem& s) {
  const Eigen::Index n = s.size();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    a(i, i) = s.diag[i];
    if (i > 0) a(i, i - 1) = s.sub[i - 1];
    if (i + 1 < n) a(i, i + 1) = s.super[i];
  }
  return a;
}

TridiagonalSystem random_dominant_system(std::mt19937& gen, Eigen::Index n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  TridiagonalSystem s;
  s.sub.resize(n - 1);
  s.super.resize(n - 1);
  s.diag.resize(n);
  s.rhs.resize(n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    s.sub[i] = u(gen);
    s.super[i] = u(gen);
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    const double off = (i > 0 ? std::abs(s.sub[i - 1]) : 0.0) + (i + 1 < n ? std::abs(s.super[i]) : 0.0);
    s.diag[i] = (u(gen) < 0 ? -1.0 : 1.0) * (off + 0.5 + std::abs(u(gen)));
    s.rhs[i] = 10.0 * u(gen);
  }
  return s;
}

double derivative_norm(const FemSolution& s) {
  return std::sqrt(s.slopes().array().square().matrix().dot(s.mesh.widths()));
}

}  // namespace

TEST_CASE("assemble: Laplacian on a uniform mesh") {
  const TridiagonalSystem s = assemble(constant_problem(1.0, 0.0, 0.0, constant(1.0)), uniform_mesh(4));
  REQUIRE(s.size() == 3);
  for (Eigen::Index i = 0; i < 3; ++i) {
    CHECK(s.diag[i] == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(s.rhs[i] == doctest::Approx(0.25).epsilon(1e-14));
  }
  for (Eigen::Index i = 0; i < 2; ++i) {
    CHECK(s.sub[i] == doctest::Approx(-4.0).epsilon(1e-14));
    CHECK(s.super[i] == doctest::Approx(-4.0).epsilon(1e-14));
  }
}

TEST_CASE("assemble: convection entries follow the closed forms") {
  const double h = 0.125;
  const TridiagonalSystem s = assemble(constant_problem(1.0, 1.0, 0.0, constant(0.0)), uniform_mesh(8));
  for (Eigen::Index i = 0; i + 1 < s.size(); ++i) {
    CHECK(s.sub[i] == doctest::Approx(-1.0 / h - 0.5).epsilon(1e-13));
    CHECK(s.super[i] == doctest::Approx(-1.0 / h + 0.5).epsilon(1e-13));
  }
}

TEST_CASE("assemble: constant coefficients on random meshes match the closed-form entries") {
  std::mt19937 gen(5);
  const double a = 0.3, b = -1.7, c = 2.5;
  for (int trial = 0; trial < 20; ++trial) {
    const Mesh mesh = random_mesh(gen, 3 + trial);
    const TridiagonalSystem s = assemble(constant_problem(a, b, c, constant(1.0)), mesh);
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      const double hl = mesh.width(i);      // cell left of node i+1
      const double hr = mesh.width(i + 1);  // cell right of node i+1
      CHECK(s.diag[i] == doctest::Approx(a / hl + a / hr + c * (hl + hr) / 3.0).epsilon(1e-12));
      CHECK(s.rhs[i] == doctest::Approx(0.5 * (hl + hr)).epsilon(1e-12));
      if (i > 0) CHECK(s.sub[i - 1] == doctest::Approx(-a / hl - 0.5 * b + c * hl / 6.0).epsilon(1e-12));
      if (i + 1 < s.size()) CHECK(s.super[i] == doctest::Approx(-a / hr + 0.5 * b + c * hr / 6.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("assemble: symmetric when b = 0") {
  std::mt19937 gen(11);
  const Mesh mesh = random_mesh(gen, 40);
  const TridiagonalSystem s = assemble(babuska_rheinboldt(), mesh);
  for (Eigen::Index i = 0; i + 1 < s.size(); ++i) {
    CHECK(std::abs(s.sub[i] - s.super[i]) <= 1e-12 * std::abs(s.super[i]));
  }
}

TEST_CASE("assemble: error paths") {
  const Mesh mesh = uniform_mesh(4);
  const auto kind_of = [&](const Problem& p) {
    try {
      assemble(p, mesh);
    } catch (const Error& e) {
      return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::unsupported;
  };
  CHECK(kind_of(constant_problem(-1.0, 0.0, 0.0, constant(1.0))) == ErrorKind::ill_posed_problem);
  CHECK(kind_of(constant_problem(1.0, 0.0, -1.0, constant(1.0))) == ErrorKind::ill_posed_problem);
  Problem growing = constant_problem(1.0, 0.0, 0.0, constant(1.0));
  growing.db = constant(1.0);  // c - b'/2 = -1/2
  CHECK(kind_of(growing) == ErrorKind::ill_posed_problem);
  CHECK(kind_of(constant_problem(1.0, 0.0, 0.0, constant(std::nan("")))) == ErrorKind::numeric_error);
}

TEST_CASE("solve_tridiagonal examples") {
  TridiagonalSystem id;
  id.diag = Eigen::VectorXd::Ones(4);
  id.sub = id.super = Eigen::VectorXd::Zero(3);
  id.rhs = Eigen::Vector4d(1.0, -2.0, 3.0, 0.5);
  CHECK(solve_tridiagonal(id) == id.rhs);

  TridiagonalSystem two;
  two.diag = Eigen::Vector2d(2.0, 2.0);
  two.sub = two.super = Eigen::VectorXd::Constant(1, -1.0);
  two.rhs = Eigen::Vector2d(1.0, 1.0);
  const Eigen::VectorXd u = solve_tridiagonal(two);
  CHECK(u[0] == doctest::Approx(1.0));
  CHECK(u[1] == doctest::Approx(1.0));

  TridiagonalSystem singular = two;
  singular.diag = Eigen::Vector2d(1.0, 1.0);
  singular.sub = singular.super = Eigen::VectorXd::Constant(1, 1.0);
  try {
    solve_tridiagonal(singular);
    FAIL("expected singular-system");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::singular_system);
  }
}

TEST_CASE("solve_tridiagonal matches dense elimination on random dominant systems") {
  std::mt19937 gen(8);
  for (Eigen::Index n = 2; n <= 64; n += 3) {
    const TridiagonalSystem s = random_dominant_system(gen, n);
    const Eigen::VectorXd u = solve_tridiagonal(s);
    const Eigen::VectorXd oracle = dense(s).partialPivLu().solve(s.rhs);
    CHECK((u - oracle).lpNorm<Eigen::Infinity>() <= 1e-10);
    CHECK((multiply(s, u) - s.rhs).lpNorm<Eigen::Infinity>() <= 1e-10 * (1.0 + s.rhs.lpNorm<Eigen::Infinity>()));
  }
}

TEST_CASE("solve: zero data gives the zero solution") {
  const FemSolution s = solve(constant_problem(1.0, 0.5, 1.0, constant(0.0)), uniform_mesh(9));
  CHECK(s.nodal.lpNorm<Eigen::Infinity>() == 0.0);
  CHECK(s.nodal.size() == 10);
}

TEST_CASE("solve: nodally exact for -u'' = 2") {
  std::mt19937 gen(3);
  for (int trial = 0; trial < 10; ++trial) {
    const FemSolution s = solve(constant_problem(1.0, 0.0, 0.0, constant(2.0)), random_mesh(gen, 5 + 7 * trial));
    CHECK(s.nodal[0] == 0.0);
    CHECK(s.nodal[s.nodal.size() - 1] == 0.0);
    for (Eigen::Index i = 0; i < s.nodal.size(); ++i) {
      const double x = s.mesh.node(i);
      CHECK(std::abs(s.nodal[i] - x * (1.0 - x)) <= 1e-12);
    }
  }
}

TEST_CASE("solve: Galerkin orthogonality of the computed solution") {
  std::mt19937 gen(17);
  const Problem p = convection_dominated();
  const Mesh mesh = random_mesh(gen, 50);
  const TridiagonalSystem s = assemble(p, mesh);
  const FemSolution sol = solve(p, mesh);
  const Eigen::VectorXd defect = s.rhs - multiply(s, Eigen::VectorXd(sol.nodal.segment(1, s.size())));
  const double scale = s.rhs.lpNorm<Eigen::Infinity>() + s.diag.lpNorm<Eigen::Infinity>();
  CHECK(defect.lpNorm<Eigen::Infinity>() <= 1e-9 * scale);
}

TEST_CASE("solve: first-order H1 convergence on uniform meshes for a smooth problem") {
  const double pi = std::numbers::pi;
  Problem p = constant_problem(1.0, 0.0, 0.0, [pi](double x) { return pi * pi * std::sin(pi * x); });
  p.exact_u = [pi](double x) { return std::sin(pi * x); };
  p.exact_du = [pi](double x) { return pi * std::cos(pi * x); };
  std::vector<std::pair<double, double>> errors;
  for (int n : {16, 32, 64, 128}) errors.emplace_back(n, h1_seminorm_error(p, solve(p, uniform_mesh(n))));
  for (std::size_t k = 0; k + 1 < errors.size(); ++k) {
    const double slope = std::log(errors[k].second / errors[k + 1].second) / std::log(2.0);
    CHECK(slope == doctest::Approx(1.0).epsilon(0.05));
  }
}

TEST_CASE("solve: derivative stays bounded under refinement") {
  for (const Problem& p : {convection_dominated(), babuska_rheinboldt()}) {
    std::vector<double> norms;
    for (int n : {16, 32, 64, 128, 256, 512}) norms.push_back(derivative_norm(solve(p, uniform_mesh(n))));
    const double finest = norms.back();
    for (double v : norms) CHECK(v <= 2.0 * finest);
  }
}

TEST_CASE("solve: uniform mesh leaves the reaction-diffusion layers unresolved") {
  const Problem p = reaction_diffusion();
  const double uniform_error = h1_seminorm_error(p, solve(p, uniform_mesh(160)));
  CHECK(uniform_error > 10.0 * 3.39e-1);
}

TEST_CASE("evaluate") {
  const FemSolution s{Mesh(std::vector<double>{0.0, 0.5, 1.0}), Eigen::Vector3d(0.0, 1.0, 0.0)};
  auto [v, d] = evaluate(s, 0.25);
  CHECK(v == doctest::Approx(0.5));
  CHECK(d == doctest::Approx(2.0));
  std::tie(v, d) = evaluate(s, 0.0);
  CHECK(v == 0.0);
  CHECK(d == doctest::Approx(2.0));
  std::tie(v, d) = evaluate(s, 0.5);
  CHECK(v == doctest::Approx(1.0));
  CHECK(d == doctest::Approx(2.0));
  std::tie(v, d) = evaluate(s, 1.0);
  CHECK(v == doctest::Approx(0.0));
  CHECK(d == doctest::Approx(-2.0));
  try {
    evaluate(s, 1.5);
    FAIL("expected out-of-domain");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::out_of_domain);
  }
  CHECK_THROWS_AS(evaluate(s, -1e-9), Error);
}
