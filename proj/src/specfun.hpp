#pragma once

namespace rxpot::specfun {

// Jacobi polynomial P_n^(alpha,beta)(z), arbitrary real parameters, forward
// three-term recurrence in the degree.  Degrees where the recurrence
// coefficient 2k(k+alpha+beta)(2k+alpha+beta-2) vanishes (alpha+beta a
// negative integer <= -2) are filled in from the explicit finite sum; the
// polynomial itself stays well defined there, only the recurrence degenerates.
double jacobi_eval(int n, double alpha, double beta, double z);

// d/dz P_n^(alpha,beta)(z) = (n+alpha+beta+1)/2 * P_{n-1}^(alpha+1,beta+1)(z).
double jacobi_deriv(int n, double alpha, double beta, double z);

// Degree-(nu+1) polynomial
//   -(z-b)/2 * P_nu^(alpha,beta)(z) + [b P_nu - P_{nu-1}]/(alpha+beta+2 nu),
// b = (beta+alpha)/(beta-alpha), with the convention P_{-1} == 0.
// Requires alpha != beta and alpha+beta+2 nu != 0.
double phat_eval(int nu, double alpha, double beta, double z);

// z-derivative of phat_eval(nu, alpha, beta, .).
double phat_deriv(int nu, double alpha, double beta, double z);

// log Gamma(x) for x > 0.
double ln_gamma(double x);

}  // namespace rxpot::specfun
