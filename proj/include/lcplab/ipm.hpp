#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lcplab/lcp.hpp"
#include "lcplab/spd.hpp"

namespace lcplab {

struct IpmParams {
  double beta = 0.5;        // trust-ellipse radius, in (0,1)
  double sigma = 0.2;       // Armijo slope fraction, in (0,1/2)
  double eps = 1e-5;        // stop when z^T w <= eps
  double kappa_slack = 0.1; // kappa = (1+slack)*max(n, z^T w / min z_i w_i)
  int max_iter = 10000;
  int max_halvings = 60;
  std::optional<VectorD> z0;  // strictly feasible start; auto when absent
};

// Rows of the trace. Row k holds the accepted iterate plus the step data
// that produced iterate k+1; the final row carries zero direction data.
struct IpmIterate {
  int k = 0;
  VectorD z, w, dz, dw;
  double kappa = 0, rho = 0, r_norm = 0, tau = 0;
  int m = 0;
  double psi = 0, ztw = 0;
};

enum class IpmStatus {
  Converged,
  StalledLineSearch,
  StalledMaxIter,
  StalledNumerics,  // direction solve broke down in binary64
  NoStrictFeasiblePoint,
};

std::string ipm_status_name(IpmStatus s);

struct IpmResult {
  IpmStatus status = IpmStatus::NoStrictFeasiblePoint;
  VectorD z, w;
  std::vector<IpmIterate> trace;
  std::string detail;
};

// kappa*log(z^T w) - sum_i log(z_i w_i); +infinity when any component is
// nonpositive (which is what makes the line search reject such steps).
double merit_psi(const VectorD& z, const VectorD& w, double kappa);

struct IpmDirection {
  VectorD dz, dw, grad_z, grad_w, r;
  double tau = 0;
};

// Scaled Newton-like step of the potential reduction scheme:
//   grad_z[i] = w_i (kappa/(z^T w) - 1/(z_i w_i)), grad_w likewise with z_i,
//   r = grad_z + A^T grad_w,
//   H = Z^-2 + A^T W^-2 A   (SPD while z, w > 0),
//   tau = sqrt(r^T H^-1 r)/beta,  dz = -H^-1 r / tau,  dw = A dz.
// By construction ||Z^-1 dz||^2 + ||W^-1 dw||^2 = beta^2 and the
// directional derivative of psi equals -tau*beta^2.
// Requires z, w > 0 and kappa >= max(n, z^T w / min z_i w_i); throws
// std::logic_error when r vanishes (cannot happen for semimonotone A with
// a noncentered kappa choice).
IpmDirection ipm_direction(const VectorD& z, const VectorD& w,
                           const MatrixD& a, double kappa, double beta);

IpmResult solve_ipm(const LcpInstance& inst, const IpmParams& p);

MatrixD matrix_to_double(const RationalMatrix& a);
VectorD vector_to_double(const RationalVector& v);

// CSV with header k,z1..zn,w1..wn,kappa,tau,m,psi,ztw; one row per trace
// entry, 17 significant digits.
void write_trace_csv(std::ostream& os, const std::vector<IpmIterate>& trace);

}  // namespace lcplab
