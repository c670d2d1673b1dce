#include "lcplab/ipm.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <stdexcept>

namespace lcplab {

namespace {

double dot_d(const VectorD& a, const VectorD& b) {
  double acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double norm2(const VectorD& a) { return std::sqrt(dot_d(a, a)); }

VectorD mat_apply(const MatrixD& a, const VectorD& x) {
  VectorD y(a.size(), 0.0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

}  // namespace

std::string ipm_status_name(IpmStatus s) {
  switch (s) {
    case IpmStatus::Converged: return "converged";
    case IpmStatus::StalledLineSearch: return "stalled-line-search";
    case IpmStatus::StalledMaxIter: return "stalled-max-iter";
    case IpmStatus::StalledNumerics: return "stalled-numerics";
    case IpmStatus::NoStrictFeasiblePoint: return "no-strictly-feasible-point";
  }
  return "?";
}

MatrixD matrix_to_double(const RationalMatrix& a) {
  MatrixD m(a.n(), VectorD(a.n()));
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) m[i][j] = to_double(a.at(i, j));
  return m;
}

VectorD vector_to_double(const RationalVector& v) {
  VectorD out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
  return out;
}

double merit_psi(const VectorD& z, const VectorD& w, double kappa) {
  double ztw = 0, logsum = 0;
  for (size_t i = 0; i < z.size(); ++i) {
    if (z[i] <= 0 || w[i] <= 0)
      return std::numeric_limits<double>::infinity();
    ztw += z[i] * w[i];
    logsum += std::log(z[i] * w[i]);
  }
  return kappa * std::log(ztw) - logsum;
}

IpmDirection ipm_direction(const VectorD& z, const VectorD& w,
                           const MatrixD& a, double kappa, double beta) {
  const int n = static_cast<int>(z.size());
  if (static_cast<int>(w.size()) != n || static_cast<int>(a.size()) != n)
    throw std::invalid_argument("ipm_direction: dimension mismatch");
  double ztw = 0, rho = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    if (z[i] <= 0 || w[i] <= 0)
      throw std::invalid_argument("ipm_direction: iterate not interior");
    ztw += z[i] * w[i];
    rho = std::min(rho, z[i] * w[i]);
  }
  if (kappa < std::max(static_cast<double>(n), ztw / rho))
    throw std::invalid_argument("ipm_direction: kappa below its lower bound");

  IpmDirection d;
  d.grad_z.resize(n);
  d.grad_w.resize(n);
  for (int i = 0; i < n; ++i) {
    double common = kappa / ztw - 1.0 / (z[i] * w[i]);
    d.grad_z[i] = w[i] * common;
    d.grad_w[i] = z[i] * common;
  }
  d.r.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    d.r[i] = d.grad_z[i];
    for (int k = 0; k < n; ++k) d.r[i] += a[k][i] * d.grad_w[k];
  }
  if (norm2(d.r) == 0)
    throw std::logic_error("ipm_direction: vanishing reduced gradient");

  MatrixD h(n, VectorD(n, 0.0));
  for (int i = 0; i < n; ++i) {
    h[i][i] = 1.0 / (z[i] * z[i]);
    for (int j = 0; j < n; ++j) {
      double acc = 0;
      for (int k = 0; k < n; ++k) acc += a[k][i] * a[k][j] / (w[k] * w[k]);
      h[i][j] += acc;
    }
  }
  VectorD s = spd_solve(h, d.r);
  double rs = dot_d(d.r, s);
  if (!(rs > 0))
    throw std::logic_error("ipm_direction: quadratic form not positive");
  d.tau = std::sqrt(rs) / beta;
  d.dz.resize(n);
  for (int i = 0; i < n; ++i) d.dz[i] = -s[i] / d.tau;
  d.dw = mat_apply(a, d.dz);
  return d;
}

IpmResult solve_ipm(const LcpInstance& inst, const IpmParams& p) {
  if (!(p.beta > 0 && p.beta < 1))
    throw std::invalid_argument("solve_ipm: beta must lie in (0,1)");
  if (!(p.sigma > 0 && p.sigma < 0.5))
    throw std::invalid_argument("solve_ipm: sigma must lie in (0,1/2)");
  if (!(p.eps > 0)) throw std::invalid_argument("solve_ipm: eps must be > 0");
  if (!(p.kappa_slack >= 0))
    throw std::invalid_argument("solve_ipm: kappa_slack must be >= 0");

  const int n = inst.n();
  MatrixD a = matrix_to_double(inst.a);
  VectorD q = vector_to_double(inst.q);
  IpmResult res;

  VectorD z;
  if (p.z0) {
    if (static_cast<int>(p.z0->size()) != n)
      throw std::invalid_argument("solve_ipm: z0 dimension mismatch");
    z = *p.z0;
  } else {
    auto zr = strict_feasible_point(inst);
    if (!zr) {
      res.status = IpmStatus::NoStrictFeasiblePoint;
      res.detail = "no z > 0 with q + Az > 0 exists";
      return res;
    }
    z = vector_to_double(*zr);
  }
  VectorD w = q;
  {
    VectorD az = mat_apply(a, z);
    for (int i = 0; i < n; ++i) w[i] += az[i];
  }
  for (int i = 0; i < n; ++i)
    if (z[i] <= 0 || w[i] <= 0) {
      res.status = IpmStatus::NoStrictFeasiblePoint;
      res.detail = "start is not strictly feasible at component " +
                   std::to_string(i + 1);
      return res;
    }

  auto kappa_of = [&](double ztw, double rho) {
    return (1 + p.kappa_slack) * std::max(static_cast<double>(n), ztw / rho);
  };
  auto stats = [&](const VectorD& zz, const VectorD& ww, double& ztw,
                   double& rho) {
    ztw = 0;
    rho = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      ztw += zz[i] * ww[i];
      rho = std::min(rho, zz[i] * ww[i]);
    }
  };
  auto terminal_row = [&](int k) {
    double ztw, rho;
    stats(z, w, ztw, rho);
    IpmIterate it;
    it.k = k;
    it.z = z;
    it.w = w;
    it.dz.assign(n, 0.0);
    it.dw.assign(n, 0.0);
    it.kappa = kappa_of(ztw, rho);
    it.rho = rho;
    it.psi = merit_psi(z, w, it.kappa);
    it.ztw = ztw;
    return it;
  };

  for (int k = 0;; ++k) {
    double ztw, rho;
    stats(z, w, ztw, rho);
    if (ztw <= p.eps) {
      res.trace.push_back(terminal_row(k));
      res.status = IpmStatus::Converged;
      res.z = z;
      res.w = w;
      return res;
    }
    if (k >= p.max_iter) {
      res.trace.push_back(terminal_row(k));
      res.status = IpmStatus::StalledMaxIter;
      res.z = z;
      res.w = w;
      res.detail = "iteration cap reached with z^T w = " + std::to_string(ztw);
      return res;
    }
    double kappa = kappa_of(ztw, rho);
    // The adaptive kappa can run away on instances where the merit function
    // is unbounded below off the solution set (kappa log(z^T w) < 0 grows
    // faster than the barrier once z^T w < 1 and a single product collapses).
    // A centered iterate has kappa ~ 1.1 n; two orders of magnitude above
    // that the iterate has effectively hit the boundary, the merit's
    // floating-point granularity starts to drown the per-component barrier
    // signal, and eventually the normal-equation matrix degenerates. Stop
    // while every accepted step is still verifiable in binary64.
    if (kappa > 300.0) {
      res.trace.push_back(terminal_row(k));
      res.status = IpmStatus::StalledNumerics;
      res.z = z;
      res.w = w;
      res.detail = "kappa runaway: iterate collapsed onto the boundary away "
                   "from the solution set";
      return res;
    }
    IpmDirection dir;
    try {
      dir = ipm_direction(z, w, a, kappa, p.beta);
    } catch (const std::exception& e) {
      res.trace.push_back(terminal_row(k));
      res.status = IpmStatus::StalledNumerics;
      res.z = z;
      res.w = w;
      res.detail = e.what();
      return res;
    }
    double psi0 = merit_psi(z, w, kappa);
    double dirderiv = dot_d(dir.grad_z, dir.dz) + dot_d(dir.grad_w, dir.dw);

    int m = 0;
    bool accepted = false;
    double step = 1.0;
    VectorD zn(n), wn(n);
    for (; m <= p.max_halvings; ++m, step *= 0.5) {
      for (int i = 0; i < n; ++i) {
        zn[i] = z[i] + step * dir.dz[i];
        wn[i] = w[i] + step * dir.dw[i];
      }
      if (merit_psi(zn, wn, kappa) - psi0 <= p.sigma * step * dirderiv) {
        accepted = true;
        break;
      }
    }

    IpmIterate it;
    it.k = k;
    it.z = z;
    it.w = w;
    it.dz = dir.dz;
    it.dw = dir.dw;
    it.kappa = kappa;
    it.rho = rho;
    it.r_norm = norm2(dir.r);
    it.tau = dir.tau;
    it.m = m;
    it.psi = psi0;
    it.ztw = ztw;
    res.trace.push_back(std::move(it));

    if (!accepted) {
      res.status = IpmStatus::StalledLineSearch;
      res.z = z;
      res.w = w;
      res.detail = "no acceptable step within " +
                   std::to_string(p.max_halvings) + " halvings";
      return res;
    }
    z = zn;
    w = wn;
  }
}

void write_trace_csv(std::ostream& os, const std::vector<IpmIterate>& trace) {
  if (trace.empty()) return;
  const size_t n = trace.front().z.size();
  os << "k";
  for (size_t i = 1; i <= n; ++i) os << ",z" << i;
  for (size_t i = 1; i <= n; ++i) os << ",w" << i;
  os << ",kappa,tau,m,psi,ztw\n";
  os << std::setprecision(17);
  for (const IpmIterate& it : trace) {
    os << it.k;
    for (double v : it.z) os << "," << v;
    for (double v : it.w) os << "," << v;
    os << "," << it.kappa << "," << it.tau << "," << it.m << "," << it.psi
       << "," << it.ztw << "\n";
  }
}

}  // namespace lcplab
