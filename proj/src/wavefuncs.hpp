#pragma once

#include <functional>

#include "potentials.hpp"

namespace rxpot {

// Closed-form bound state.  psi and psi_deriv are analytic (chain rule over
// the closed form), not finite differences.
struct Eigenpair {
  int nu;
  double energy;
  std::function<double(double)> psi;
  std::function<double(double)> psi_deriv;
};

// Largest integer strictly below A; highest bound-state index of the
// hyperbolic well.
int nu_max(double A);

// -(A - nu)^2 for integer 0 <= nu <= nu_max(A).
double gpt_energy(double A, int nu);

// ln of the (positive) normalization constant of the conventional well.
double gpt_norm_log(double A, double B, int nu);

// Signed normalization constant of the extension; carries a leading minus.
double ext_norm(double A, double B, int nu);

// nu-th bound state of the conventional hyperbolic well:
//   psi = N (cosh x - 1)^{(B-A)/2} (cosh x + 1)^{-(B+A)/2} P_nu(cosh x)
// with Jacobi parameters (B-A-1/2, -B-A-1/2).
Eigenpair gpt_wavefunction(double A, double B, int nu);

// nu-th bound state of the rational extension, same energy as the
// conventional well (isospectral):
//   psi = N^- (cosh x - 1)^{(B-A)/2} (cosh x + 1)^{-(B+A)/2}
//         Phat_{nu+1}(cosh x) / (2B cosh x - 2A - 1).
Eigenpair ext_wavefunction(double A, double B, int nu);

// E_nu - E(path) for the hyperbolic scheme; throws unless strictly positive.
double epsilon(double A, double B, int nu, Path path);

}  // namespace rxpot
