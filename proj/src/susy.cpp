#include "susy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "specfun.hpp"

namespace rxpot {

namespace {

constexpr double kPMin = 1e-6;

void check_p_regular(double p, const char* who) {
  if (std::abs(p) <= kPMin)
    throw std::domain_error(std::string(who) +
                            ": p(x) vanishes here, expression is singular");
}

}  // namespace

double apply_first_order(const FirstOrderOp& op, const C1Function& f,
                         double x) {
  const double d = f.df(x);
  return (op.direction == OpDirection::Annihilate ? d : -d) + op.W(x) * f.f(x);
}

double apply_O(double alpha, double beta, int nu, double z) {
  const double p = specfun::jacobi_eval(nu, alpha + 1.0, beta - 1.0, z);
  const double dp = specfun::jacobi_deriv(nu, alpha + 1.0, beta - 1.0, z);
  return (beta + alpha - (beta - alpha) * z) *
             ((z - 1.0) * dp + (alpha + 1.0) * p) +
         (beta - alpha) * (z - 1.0) * p;
}

SSUSYData ssusy_data(const FamilyParams& params, Path path) {
  if (params.family != Family::Gpt && params.family != Family::GptExt)
    throw std::invalid_argument("ssusy_data: defined for the hyperbolic chain");
  if (validate_params({Family::Gpt, params.A, params.B}).cls ==
      ParamClass::Invalid)
    throw std::invalid_argument("ssusy_data: parameters outside the admissible "
                                "ranges");
  if (!(params.B >= params.A + 0.5))
    throw std::invalid_argument(
        "ssusy_data: requires B >= A+1/2 (2B cosh x - 2A - 1 must not vanish)");
  const double A = params.A, B = params.B;
  SSUSYData d;
  d.cbar = (path == Path::Upper) ? -2.0 * B : 2.0 * B;
  d.p = [A, B](double x) {
    return -B * std::sinh(x) / gpt_denominator(A, B, x);
  };
  d.pprime = [A, B](double x) {
    const double den = gpt_denominator(A, B, x);
    return -B * (2.0 * B - (2.0 * A + 1.0) * std::cosh(x)) / (den * den);
  };
  d.psecond = [A, B](double x) {
    const double den = gpt_denominator(A, B, x);
    const double num = 8.0 * B * B - (2.0 * A + 1.0) * (2.0 * A + 1.0) -
                       2.0 * B * (2.0 * A + 1.0) * std::cosh(x);
    return B * std::sinh(x) * num / (den * den * den);
  };
  const double cbar = d.cbar;
  d.q = [p = d.p, pp = d.pprime, ps = d.psecond, cbar](double x) {
    const double pv = p(x);
    check_p_regular(pv, "ssusy q");
    const double pd = pp(x);
    const double r = pd / (2.0 * pv);
    return -pd + pv * pv - ps(x) / (2.0 * pv) + r * r -
           cbar * cbar / (16.0 * pv * pv);
  };
  return d;
}

double apply_second_order(const SSUSYData& data, const C2Function& f, double x,
                          bool adjoint) {
  const double qv = data.q(x);
  if (adjoint)
    return f.d2f(x) - 2.0 * data.p(x) * f.df(x) + qv * f.f(x);
  return f.d2f(x) + 2.0 * data.p(x) * f.df(x) +
         (2.0 * data.pprime(x) + qv) * f.f(x);
}

double second_order_potential(const SSUSYData& data, int which, double x) {
  if (which != 1 && which != 2)
    throw std::invalid_argument("second_order_potential: which must be 1 or 2");
  const double pv = data.p(x);
  check_p_regular(pv, "second_order_potential");
  const double pd = data.pprime(x);
  const double r = pd / (2.0 * pv);
  const double sign = (which == 1) ? -1.0 : 1.0;
  return sign * 2.0 * pd + pv * pv + data.psecond(x) / (2.0 * pv) - r * r +
         data.cbar * data.cbar / (16.0 * pv * pv);
}

}  // namespace rxpot
