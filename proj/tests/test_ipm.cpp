#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "lcplab/generate.hpp"
#include "lcplab/ipm.hpp"
#include "lcplab/spd.hpp"
#include "oracles.hpp"

using namespace lcplab;

namespace {

RationalMatrix mk(const std::vector<std::vector<long>>& rows) {
  std::vector<RationalVector> r;
  for (const auto& row : rows) {
    RationalVector v;
    for (long x : row) v.push_back(Rational(x));
    r.push_back(std::move(v));
  }
  return RationalMatrix::from_rows(r);
}

RationalVector vec(const std::vector<long>& xs) {
  RationalVector v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

LcpInstance worked() {
  return LcpInstance(mk({{0, 1, 1}, {2, 0, 2}, {-2, -5, 0}}),
                     vec({-4, -7, 10}));
}

double rnd01(Rng& rng) {
  return static_cast<double>(rng.next() >> 11) * 0x1.0p-53;
}

}  // namespace

TEST_CASE("cholesky solve with backward-error bound") {
  MatrixD a = {{4, 2}, {2, 3}};
  VectorD x = spd_solve(a, {10, 8});
  CHECK(x[0] == doctest::Approx(7.0 / 4).epsilon(1e-14));
  CHECK(x[1] == doctest::Approx(3.0 / 2).epsilon(1e-14));

  Rng rng(1001);
  for (int t = 0; t < 1000; ++t) {
    int n = 1 + static_cast<int>(rng.range(0, 19));
    // well-conditioned by construction: B B^T + n I
    MatrixD b(n, VectorD(n));
    for (auto& row : b)
      for (auto& v : row) v = 2 * rnd01(rng) - 1;
    MatrixD m(n, VectorD(n, 0.0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) m[i][j] += b[i][k] * b[j][k];
        if (i == j) m[i][j] += n;
      }
    VectorD r(n);
    for (auto& v : r) v = 4 * rnd01(rng) - 2;
    VectorD sol = spd_solve(m, r);
    double rnorm = 0, err = 0;
    for (int i = 0; i < n; ++i) {
      double ri = -r[i];
      for (int j = 0; j < n; ++j) ri += m[i][j] * sol[j];
      err = std::max(err, std::fabs(ri));
      rnorm = std::max(rnorm, std::fabs(r[i]));
    }
    CHECK(err <= 1e-10 * (1 + rnorm));
  }
}

TEST_CASE("cholesky breakdown names the pivot") {
  MatrixD indef = {{1, 2}, {2, 1}};
  try {
    spd_solve(indef, {1, 1});
    FAIL("expected breakdown");
  } catch (const NumericalBreakdown& e) {
    CHECK(e.pivot_index == 1);
  }
}

TEST_CASE("merit function values") {
  // z = w = ones, kappa = n: psi = n log n - 0
  for (int n = 1; n <= 5; ++n) {
    VectorD ones(n, 1.0);
    CHECK(merit_psi(ones, ones, n) ==
          doctest::Approx(n * std::log(static_cast<double>(n)))
              .epsilon(1e-14));
  }
  CHECK(std::isinf(merit_psi({1.0, 0.0}, {1.0, 1.0}, 2.0)));
  CHECK(std::isinf(merit_psi({1.0}, {-2.0}, 1.0)));
}

TEST_CASE("direction matches the scalar closed form for n = 1") {
  // A = [1], z = 2, w = 3: every quantity collapses to arithmetic
  double kappa = 1.1;  // (1+slack)*max(1, 6/6)
  IpmDirection d = ipm_direction({2.0}, {3.0}, {{1.0}}, kappa, 0.5);
  double gz = 3 * (kappa / 6 - 1.0 / 6);
  double gw = 2 * (kappa / 6 - 1.0 / 6);
  double r = gz + gw;
  double h = 1.0 / 4 + 1.0 / 9;
  double tau = std::sqrt(r * r / h) / 0.5;
  CHECK(d.grad_z[0] == doctest::Approx(gz).epsilon(1e-14));
  CHECK(d.grad_w[0] == doctest::Approx(gw).epsilon(1e-14));
  CHECK(d.r[0] == doctest::Approx(r).epsilon(1e-14));
  CHECK(d.tau == doctest::Approx(tau).epsilon(1e-14));
  CHECK(d.dz[0] == doctest::Approx(-(r / h) / tau).epsilon(1e-14));
  CHECK(d.dw[0] == doctest::Approx(d.dz[0]).epsilon(1e-14));  // A = [1]
}

TEST_CASE("analytic gradients match central differences") {
  Rng rng(555);
  MatrixD a = {{0, 1, 1}, {2, 0, 2}, {-2, -5, 0}};
  for (int t = 0; t < 50; ++t) {
    VectorD z(3), w(3);
    for (auto& v : z) v = 0.5 + 2.5 * rnd01(rng);
    for (auto& v : w) v = 0.5 + 2.5 * rnd01(rng);
    double ztw = 0, rho = 1e300;
    for (int i = 0; i < 3; ++i) {
      ztw += z[i] * w[i];
      rho = std::min(rho, z[i] * w[i]);
    }
    double kappa = 1.1 * std::max(3.0, ztw / rho);
    IpmDirection d = ipm_direction(z, w, a, kappa, 0.5);
    VectorD gz, gw;
    oracle::fd_merit_gradient(z, w, kappa, gz, gw);
    for (int i = 0; i < 3; ++i) {
      CHECK(oracle::close_rel(d.grad_z[i], gz[i], 1e-6));
      CHECK(oracle::close_rel(d.grad_w[i], gw[i], 1e-6));
    }
  }
}

TEST_CASE("trust ellipse and directional derivative identities") {
  Rng rng(777);
  MatrixD a = {{0, 1, 1}, {2, 0, 2}, {-2, -5, 0}};
  for (int t = 0; t < 50; ++t) {
    VectorD z(3), w(3);
    for (auto& v : z) v = 0.25 + 3 * rnd01(rng);
    for (auto& v : w) v = 0.25 + 3 * rnd01(rng);
    double ztw = 0, rho = 1e300;
    for (int i = 0; i < 3; ++i) {
      ztw += z[i] * w[i];
      rho = std::min(rho, z[i] * w[i]);
    }
    double beta = 0.4;
    double kappa = 1.05 * std::max(3.0, ztw / rho);
    IpmDirection d = ipm_direction(z, w, a, kappa, beta);

    // ||Z^-1 dz||^2 + ||W^-1 dw||^2 = beta^2
    double ell = 0;
    for (int i = 0; i < 3; ++i) {
      ell += (d.dz[i] / z[i]) * (d.dz[i] / z[i]);
      ell += (d.dw[i] / w[i]) * (d.dw[i] / w[i]);
    }
    CHECK(oracle::close_rel(ell, beta * beta, 1e-8));

    // grad . d = -tau beta^2
    double dir = 0;
    for (int i = 0; i < 3; ++i)
      dir += d.grad_z[i] * d.dz[i] + d.grad_w[i] * d.dw[i];
    CHECK(oracle::close_rel(dir, -d.tau * beta * beta, 1e-8));

    // dw is consistent: dw = A dz
    for (int i = 0; i < 3; ++i) {
      double adz = 0;
      for (int j = 0; j < 3; ++j) adz += a[i][j] * d.dz[j];
      CHECK(d.dw[i] == doctest::Approx(adz).epsilon(1e-12));
    }
  }
}

TEST_CASE("direction validates its inputs") {
  MatrixD a = {{1.0}};
  CHECK_THROWS_AS(ipm_direction({0.0}, {1.0}, a, 2.0, 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(ipm_direction({1.0}, {1.0}, a, 0.5, 0.5),
                  std::invalid_argument);  // kappa below max(n, ztw/rho)
  // perfectly centered point with kappa at the bound: r = 0
  CHECK_THROWS_AS(ipm_direction({1.0}, {1.0}, a, 1.0, 0.5), std::logic_error);
}

TEST_CASE("the worked instance converges like the published run") {
  IpmParams p;
  p.z0 = VectorD{1, 1, 5};
  IpmResult r = solve_ipm(worked(), p);
  REQUIRE(r.status == IpmStatus::Converged);
  REQUIRE(!r.trace.empty());

  // start slacks
  CHECK(r.trace[0].z == VectorD{1, 1, 5});
  CHECK(r.trace[0].w == VectorD{2, 5, 3});

  CHECK(r.trace.back().k <= 500);
  CHECK(r.trace.back().ztw <= 1e-5);
  VectorD want = {15.0 / 14, 11.0 / 7, 17.0 / 7};
  for (int i = 0; i < 3; ++i)
    CHECK(std::fabs(r.z[i] - want[i]) <= 1e-3);

  // psi decreases through every accepted step, measured at the step's kappa
  for (size_t k = 0; k + 1 < r.trace.size(); ++k) {
    const IpmIterate& it = r.trace[k];
    const IpmIterate& next = r.trace[k + 1];
    double psi_next = merit_psi(next.z, next.w, it.kappa);
    CHECK(psi_next < it.psi);

    // and the Armijo inequality holds at the recorded halving count
    IpmDirection d = ipm_direction(it.z, it.w,
                                   matrix_to_double(worked().a), it.kappa,
                                   0.5);
    double dir = 0;
    for (int i = 0; i < 3; ++i)
      dir += d.grad_z[i] * d.dz[i] + d.grad_w[i] * d.dw[i];
    double step = std::ldexp(1.0, -it.m);
    CHECK(psi_next - it.psi <= 0.2 * step * dir + 1e-12);
  }
}

TEST_CASE("stall statuses are reported, not papered over") {
  IpmParams cap;
  cap.z0 = VectorD{1, 1, 5};
  cap.max_iter = 1;
  CHECK(solve_ipm(worked(), cap).status == IpmStatus::StalledMaxIter);

  LcpInstance infeasible(mk({{0, -1}, {-1, 0}}), vec({-1, -1}));
  IpmResult r = solve_ipm(infeasible, IpmParams{});
  CHECK(r.status == IpmStatus::NoStrictFeasiblePoint);
  CHECK(r.detail == "no z > 0 with q + Az > 0 exists");

  IpmParams bad_start;
  bad_start.z0 = VectorD{1, -1, 1};
  CHECK(solve_ipm(worked(), bad_start).status ==
        IpmStatus::NoStrictFeasiblePoint);
}

TEST_CASE("adaptive kappa runaway is stopped while still verifiable") {
  // From ones this instance walks onto the boundary away from its unique
  // solution (0, 7/2, 0). The adaptive kappa then feeds back on itself
  // (smaller min product -> larger kappa -> stronger pull off center), so
  // the run must stop with a clean status before binary64 degrades.
  LcpInstance inst(mk({{3, 2, 2}, {3, 2, 3}, {-3, -1, 0}}), vec({-6, -7, 5}));
  IpmParams p;
  p.z0 = VectorD{1, 1, 1};
  IpmResult r = solve_ipm(inst, p);
  REQUIRE(r.status == IpmStatus::StalledNumerics);
  REQUIRE(!r.trace.empty());
  CHECK(r.detail.find("kappa runaway") != std::string::npos);

  // every accepted step happened at a representable kappa; only the
  // terminal snapshot exceeds the cutoff
  for (size_t t = 0; t + 1 < r.trace.size(); ++t)
    CHECK(r.trace[t].kappa <= 300.0);
  CHECK(r.trace.back().kappa > 300.0);

  EnumerateResult e = solve_enumerate(inst);
  REQUIRE(e.solutions.size() == 1);
  CHECK(e.solutions[0].z == RationalVector({Rational(0), Rational(7, 2),
                                            Rational(0)}));
}

TEST_CASE("parameters are validated") {
  IpmParams p;
  p.beta = 1.0;
  CHECK_THROWS_AS(solve_ipm(worked(), p), std::invalid_argument);
  p = IpmParams{};
  p.sigma = 0.5;
  CHECK_THROWS_AS(solve_ipm(worked(), p), std::invalid_argument);
  p = IpmParams{};
  p.eps = 0;
  CHECK_THROWS_AS(solve_ipm(worked(), p), std::invalid_argument);
  p = IpmParams{};
  p.z0 = VectorD{1, 1};
  CHECK_THROWS_AS(solve_ipm(worked(), p), std::invalid_argument);
}

TEST_CASE("auto start point via the feasibility lp") {
  IpmResult r = solve_ipm(worked(), IpmParams{});
  CHECK(r.status == IpmStatus::Converged);
  VectorD want = {15.0 / 14, 11.0 / 7, 17.0 / 7};
  for (int i = 0; i < 3; ++i)
    CHECK(std::fabs(r.z[i] - want[i]) <= 1e-3);
}

TEST_CASE("trace csv layout is pinned") {
  IpmParams p;
  p.z0 = VectorD{1, 1, 5};
  p.max_iter = 2;
  IpmResult r = solve_ipm(worked(), p);
  std::ostringstream os;
  write_trace_csv(os, r.trace);
  std::istringstream is(os.str());
  std::string header;
  std::getline(is, header);
  CHECK(header == "k,z1,z2,z3,w1,w2,w3,kappa,tau,m,psi,ztw");
  std::string row;
  size_t rows = 0;
  while (std::getline(is, row))
    if (!row.empty()) ++rows;
  CHECK(rows == r.trace.size());
  // first row starts at the published start point
  std::istringstream is2(os.str());
  std::getline(is2, row);
  std::getline(is2, row);
  CHECK(row.substr(0, 8) == "0,1,1,5,");
}
