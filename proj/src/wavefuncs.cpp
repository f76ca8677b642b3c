#include "wavefuncs.hpp"

#include <cmath>
#include <stdexcept>

#include "specfun.hpp"

namespace rxpot {

namespace {

constexpr double kLn2 = 0.6931471805599453;

void check_level(double A, double B, int nu, bool ext, const char* who) {
  const FamilyParams fp{ext ? Family::GptExt : Family::Gpt, A, B};
  if (validate_params(fp).cls == ParamClass::Invalid)
    throw std::invalid_argument(std::string(who) +
                                ": parameters outside the admissible ranges");
  if (nu < 0 || nu > nu_max(A))
    throw std::invalid_argument(std::string(who) + ": nu out of range");
}

void check_x(double x, const char* who) {
  if (!std::isfinite(x) || !(x > 0.0))
    throw std::domain_error(std::string(who) + ": x outside (0, inf)");
}

}  // namespace

int nu_max(double A) {
  if (!std::isfinite(A) || !(A > 0.0))
    throw std::invalid_argument("nu_max: requires A > 0");
  return static_cast<int>(std::ceil(A)) - 1;
}

double gpt_energy(double A, int nu) {
  if (nu < 0 || nu > nu_max(A))
    throw std::invalid_argument("gpt_energy: nu out of range");
  return -(A - nu) * (A - nu);
}

double gpt_norm_log(double A, double B, int nu) {
  if (!std::isfinite(A) || !std::isfinite(B) || nu < 0 || nu > nu_max(A))
    throw std::invalid_argument("gpt_norm_log: bad arguments");
  using specfun::ln_gamma;
  return A * kLn2 +
         0.5 * (ln_gamma(nu + 1.0) + std::log(2.0 * A - 2.0 * nu) +
                ln_gamma(B + A - nu + 0.5) - ln_gamma(B - A + nu + 0.5) -
                ln_gamma(2.0 * A - nu + 1.0));
}

double ext_norm(double A, double B, int nu) {
  check_level(A, B, nu, true, "ext_norm");
  return -4.0 * B *
         std::sqrt((B - A + nu - 0.5) / (B + A - nu - 0.5)) *
         std::exp(gpt_norm_log(A, B + 1.0, nu));
}

Eigenpair gpt_wavefunction(double A, double B, int nu) {
  check_level(A, B, nu, false, "gpt_wavefunction");
  const double N = std::exp(gpt_norm_log(A, B, nu));
  const double alpha = B - A - 0.5;
  const double beta = -B - A - 0.5;
  const double e1 = 0.5 * (B - A);
  const double e2 = -0.5 * (B + A);
  Eigenpair ep;
  ep.nu = nu;
  ep.energy = gpt_energy(A, nu);
  // cosh x - 1 = 2 sinh^2(x/2), cosh x + 1 = 2 cosh^2(x/2): exact near zero
  ep.psi = [=](double x) {
    check_x(x, "gpt_wavefunction");
    const double sh = std::sinh(0.5 * x), ch = std::cosh(0.5 * x);
    const double u = 2.0 * sh * sh, v = 2.0 * ch * ch;
    return N * std::pow(u, e1) * std::pow(v, e2) *
           specfun::jacobi_eval(nu, alpha, beta, std::cosh(x));
  };
  ep.psi_deriv = [=](double x) {
    check_x(x, "gpt_wavefunction");
    const double sh = std::sinh(0.5 * x), ch = std::cosh(0.5 * x);
    const double u = 2.0 * sh * sh, v = 2.0 * ch * ch;
    const double z = std::cosh(x);
    const double p = specfun::jacobi_eval(nu, alpha, beta, z);
    const double dp = specfun::jacobi_deriv(nu, alpha, beta, z);
    return N * std::sinh(x) *
           ((e1 * v + e2 * u) * std::pow(u, e1 - 1.0) * std::pow(v, e2 - 1.0) * p +
            std::pow(u, e1) * std::pow(v, e2) * dp);
  };
  return ep;
}

Eigenpair ext_wavefunction(double A, double B, int nu) {
  check_level(A, B, nu, true, "ext_wavefunction");
  const double N = ext_norm(A, B, nu);
  const double alpha = B - A - 0.5;
  const double beta = -B - A - 0.5;
  const double e1 = 0.5 * (B - A);
  const double e2 = -0.5 * (B + A);
  Eigenpair ep;
  ep.nu = nu;
  ep.energy = gpt_energy(A, nu);
  ep.psi = [=](double x) {
    check_x(x, "ext_wavefunction");
    const double sh = std::sinh(0.5 * x), ch = std::cosh(0.5 * x);
    const double u = 2.0 * sh * sh, v = 2.0 * ch * ch;
    return N * std::pow(u, e1) * std::pow(v, e2) *
           specfun::phat_eval(nu, alpha, beta, std::cosh(x)) /
           gpt_denominator(A, B, x);
  };
  ep.psi_deriv = [=](double x) {
    check_x(x, "ext_wavefunction");
    const double sh = std::sinh(0.5 * x), ch = std::cosh(0.5 * x);
    const double u = 2.0 * sh * sh, v = 2.0 * ch * ch;
    const double z = std::cosh(x);
    const double d = gpt_denominator(A, B, x);
    const double p = specfun::phat_eval(nu, alpha, beta, z);
    const double dp = specfun::phat_deriv(nu, alpha, beta, z);
    return N * std::sinh(x) *
           ((e1 * v + e2 * u) * std::pow(u, e1 - 1.0) * std::pow(v, e2 - 1.0) *
                p / d +
            std::pow(u, e1) * std::pow(v, e2) *
                (dp / d - 2.0 * B * p / (d * d)));
  };
  return ep;
}

double epsilon(double A, double B, int nu, Path path) {
  const double sig = (path == Path::Upper) ? 1.0 : -1.0;
  const double E = -(sig * B - 0.5) * (sig * B - 0.5);
  const double eps = gpt_energy(A, nu) - E;
  if (!(eps > 0.0))
    throw std::invalid_argument(
        "epsilon: E_nu - E not positive; factorization energy must sit below "
        "the spectrum");
  return eps;
}

}  // namespace rxpot
