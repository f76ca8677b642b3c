#include "specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace rxpot::specfun {

namespace {

// binomial(r, k) for real r as a k-term product; total in r.
double binom(double r, int k) {
  double out = 1.0;
  for (int j = 0; j < k; ++j) out *= (r - j) / (j + 1);
  return out;
}

// Explicit finite sum
//   P_n = 2^-n sum_m binom(n+a, m) binom(n+b, n-m) (z-1)^(n-m) (z+1)^m,
// defined for every real (a, b).  Used only for degrees where the recurrence
// coefficient vanishes.
double jacobi_sum(int n, double a, double b, double z) {
  double tot = 0.0;
  for (int m = 0; m <= n; ++m)
    tot += binom(n + a, m) * binom(n + b, n - m) *
           std::pow(z - 1.0, n - m) * std::pow(z + 1.0, m);
  return std::ldexp(tot, -n);
}

}  // namespace

double jacobi_eval(int n, double alpha, double beta, double z) {
  if (n < 0) return 0.0;
  if (n == 0) return 1.0;
  const double ab = alpha + beta;
  double pm1 = 1.0;
  double p = (alpha + 1.0) + 0.5 * (ab + 2.0) * (z - 1.0);
  for (int k = 2; k <= n; ++k) {
    const double s = ab + 2.0 * k;  // 2k + alpha + beta
    if (std::abs(k + ab) < 1e-9 || std::abs(s - 2.0) < 1e-9) {
      const double pk = jacobi_sum(k, alpha, beta, z);
      pm1 = p;
      p = pk;
      continue;
    }
    const double c0 = 2.0 * k * (k + ab) * (s - 2.0);
    const double c1 = (s - 1.0) * (alpha * alpha - beta * beta);
    const double cz = (s - 2.0) * (s - 1.0) * s;
    const double c3 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * s;
    const double pk = ((cz * z + c1) * p - c3 * pm1) / c0;
    pm1 = p;
    p = pk;
  }
  return p;
}

double jacobi_deriv(int n, double alpha, double beta, double z) {
  if (n <= 0) return 0.0;
  return 0.5 * (n + alpha + beta + 1.0) *
         jacobi_eval(n - 1, alpha + 1.0, beta + 1.0, z);
}

double phat_eval(int nu, double alpha, double beta, double z) {
  if (nu < 0) throw std::invalid_argument("phat_eval: nu must be >= 0");
  if (alpha == beta)
    throw std::invalid_argument("phat_eval: alpha == beta leaves b undefined");
  const double den = alpha + beta + 2.0 * nu;
  if (den == 0.0)
    throw std::invalid_argument("phat_eval: alpha + beta + 2*nu == 0");
  const double b = (beta + alpha) / (beta - alpha);
  const double pn = jacobi_eval(nu, alpha, beta, z);
  const double pm = (nu == 0) ? 0.0 : jacobi_eval(nu - 1, alpha, beta, z);
  return -0.5 * (z - b) * pn + (b * pn - pm) / den;
}

double phat_deriv(int nu, double alpha, double beta, double z) {
  if (nu < 0) throw std::invalid_argument("phat_deriv: nu must be >= 0");
  if (alpha == beta)
    throw std::invalid_argument("phat_deriv: alpha == beta leaves b undefined");
  const double den = alpha + beta + 2.0 * nu;
  if (den == 0.0)
    throw std::invalid_argument("phat_deriv: alpha + beta + 2*nu == 0");
  const double b = (beta + alpha) / (beta - alpha);
  const double pn = jacobi_eval(nu, alpha, beta, z);
  const double dn = jacobi_deriv(nu, alpha, beta, z);
  const double dm = (nu == 0) ? 0.0 : jacobi_deriv(nu - 1, alpha, beta, z);
  return -0.5 * pn - 0.5 * (z - b) * dn + (b * dn - dm) / den;
}

double ln_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("ln_gamma: requires x > 0");
  return std::lgamma(x);
}

}  // namespace rxpot::specfun
