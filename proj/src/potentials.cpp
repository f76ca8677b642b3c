#include "potentials.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "errors.hpp"

namespace rxpot {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kHalfPi = 1.5707963267948966;

using Cplx = std::complex<double>;

void require_finite(const FamilyParams& p, const char* who) {
  if (!std::isfinite(p.A) || !std::isfinite(p.B))
    throw std::invalid_argument(std::string(who) + ": non-finite parameters");
}

void require_in_domain(const DomainDescriptor& d, double x, const char* who) {
  if (!std::isfinite(x) || !d.contains(x))
    throw std::domain_error(std::string(who) + ": x outside the open domain");
}

// --- generalized Poschl-Teller -------------------------------------------

double gpt_value_impl(double A, double B, double x) {
  const double s = std::sinh(x);
  return ((B * B + A * (A + 1.0)) - B * (2.0 * A + 1.0) * std::cosh(x)) /
         (s * s);
}

double gpt_ext_value_impl(double A, double B, double x) {
  const double d = gpt_denominator(A, B, x);
  const double t1 = 2.0 * (2.0 * A + 1.0) / d;
  const double t2 =
      2.0 * (4.0 * B * B - (2.0 * A + 1.0) * (2.0 * A + 1.0)) / (d * d);
  return gpt_value_impl(A, B, x) + t1 - t2;
}

// Scheme constants for the hyperbolic chain; sig = +1 upper, -1 lower.
struct GptConsts {
  double a, b, E, Etil;
};

GptConsts gpt_consts(double A, double B, Path path) {
  const double sig = (path == Path::Upper) ? 1.0 : -1.0;
  GptConsts c;
  c.a = sig * B + 0.5;
  c.b = -sig * (A + 0.5);
  c.E = -(sig * B - 0.5) * (sig * B - 0.5);
  c.Etil = -c.a * c.a;
  return c;
}

double gpt_W_impl(double A, double B, const GptConsts& c, double x) {
  const double s = std::sinh(x);
  return (c.a * std::cosh(x) + c.b) / s -
         2.0 * B * s / gpt_denominator(A, B, x);
}

double gpt_Wp_impl(double A, double B, const GptConsts& c, double x) {
  const double s = std::sinh(x);
  const double d = gpt_denominator(A, B, x);
  return -(c.a + c.b * std::cosh(x)) / (s * s) -
         (4.0 * B * B - 2.0 * B * (2.0 * A + 1.0) * std::cosh(x)) / (d * d);
}

// --- trigonometric Scarf --------------------------------------------------

double scarf1_value_impl(double A, double B, double x) {
  const double sec = 1.0 / std::cos(x);
  return sec * sec * (A * (A - 1.0) + B * B - B * (2.0 * A - 1.0) * std::sin(x));
}

struct Scarf1Consts {
  double a, b, c, E;
};

Scarf1Consts scarf1_consts(double A, double B, Path path) {
  const double sig = (path == Path::Upper) ? 1.0 : -1.0;
  Scarf1Consts k;
  k.a = -sig * B - 0.5;
  k.b = sig * (A - 0.5);
  k.c = -(2.0 * A - 1.0) / (2.0 * B);
  k.E = (sig * B - 0.5) * (sig * B - 0.5);
  return k;
}

double scarf1_W_impl(const Scarf1Consts& k, double x) {
  const double cs = std::cos(x);
  return k.a * std::tan(x) + k.b / cs - cs / (std::sin(x) + k.c);
}

double scarf1_Wp_impl(const Scarf1Consts& k, double x) {
  const double cs = std::cos(x);
  const double sn = std::sin(x);
  return (k.a + k.b * sn) / (cs * cs) +
         (1.0 + k.c * sn) / ((sn + k.c) * (sn + k.c));
}

// --- hyperbolic Scarf and its PT-symmetric version -----------------------

double scarf2_value_impl(double A, double B, double x) {
  const double sech = 1.0 / std::cosh(x);
  return sech * sech * (B * B - A * (A + 1.0) + B * (2.0 * A + 1.0) * std::sinh(x));
}

Cplx pt_value_impl(double A, double B, double x) {
  const double sech = 1.0 / std::cosh(x);
  return sech * sech *
         Cplx(-(B * B + A * (A + 1.0)), B * (2.0 * A + 1.0) * std::sinh(x));
}

// Both PT extensions share one shape; branch I is (s, t) = (A+1/2, B) and
// branch II the permuted (B, A+1/2):
//   -(t^2+s^2-1/4) sech^2 x + 2ist sech x tanh x - 4s/d + 2(4s^2-4t^2)/d^2,
//   d = 2s - 2it sinh x.
Cplx pt_ext_value_impl(double s, double t, double x) {
  const double sech = 1.0 / std::cosh(x);
  const double sh = std::sinh(x);
  const Cplx d(2.0 * s, -2.0 * t * sh);
  const Cplx sq = sech * sech *
                  Cplx(-(t * t + s * s - 0.25), 2.0 * t * s * sh);
  return sq - 4.0 * s / d + 2.0 * (4.0 * s * s - 4.0 * t * t) / (d * d);
}

struct PtConsts {
  Cplx a, b;
  double c, E;
};

// Branch I: paths shift B; branch II is the A+1/2 <-> B permutation and its
// paths shift A.
PtConsts pt_consts(double A, double B, Path path, bool branch2) {
  const double sig = (path == Path::Upper) ? 1.0 : -1.0;
  PtConsts k;
  if (!branch2) {
    k.a = Cplx(sig * B + 0.5, 0.0);
    k.b = Cplx(0.0, sig * (A + 0.5));
    k.c = -(2.0 * A + 1.0) / (2.0 * B);
  } else {
    k.a = Cplx((sig > 0) ? A + 1.0 : -A, 0.0);
    k.b = Cplx(0.0, sig * B);
    k.c = -2.0 * B / (2.0 * A + 1.0);
  }
  const Cplx am1 = k.a - 1.0;
  k.E = -(am1 * am1).real();
  return k;
}

Cplx pt_W_impl(const PtConsts& k, double x) {
  const double ch = std::cosh(x);
  const Cplx den(k.c, std::sinh(x));
  return k.a * std::tanh(x) + k.b / ch - Cplx(0.0, ch) / den;
}

Cplx pt_Wp_impl(const PtConsts& k, double x) {
  const double ch = std::cosh(x);
  const double sh = std::sinh(x);
  const Cplx den(k.c, sh);
  return k.a / (ch * ch) - k.b * sh / (ch * ch) -
         Cplx(1.0, k.c * sh) / (den * den);
}

void check_gpt_scheme_params(const FamilyParams& p, const char* who) {
  if (!(p.A > 0.0) || !(p.B >= p.A + 0.5))
    throw std::invalid_argument(
        std::string(who) +
        ": hyperbolic scheme requires A > 0 and B >= A+1/2 (pole-free tail)");
}

void check_scarf1_scheme_params(const FamilyParams& p, const char* who) {
  if (!(p.B > 0.0) || !(p.B < p.A - 0.5))
    throw std::invalid_argument(
        std::string(who) +
        ": trigonometric scheme requires 0 < B < A-1/2 (pole-free tail)");
}

void check_pt_scheme_params(const FamilyParams& p, const char* who) {
  if (!(p.A > 0.0) || p.B == 0.0)
    throw std::invalid_argument(std::string(who) +
                                ": PT scheme requires A > 0 and B != 0");
}

int highest_index_below(double bound) {
  // largest integer strictly below `bound`
  return static_cast<int>(std::ceil(bound)) - 1;
}

}  // namespace

double gpt_denominator(double A, double B, double x) {
  const double sh = std::sinh(0.5 * x);
  return 4.0 * B * sh * sh + (2.0 * B - 2.0 * A - 1.0);
}

DomainDescriptor domain_of(Family f) {
  switch (f) {
    case Family::Gpt:
    case Family::GptExt:
      return {DomainKind::HalfLine, 0.0, kInf, false};
    case Family::Scarf1:
    case Family::Scarf1Ext:
      return {DomainKind::OpenInterval, -kHalfPi, kHalfPi, false};
    case Family::Scarf2:
      return {DomainKind::RealLine, -kInf, kInf, false};
    case Family::PtScarf2:
    case Family::PtScarf2ExtI:
    case Family::PtScarf2ExtII:
      return {DomainKind::RealLine, -kInf, kInf, true};
  }
  throw std::invalid_argument("domain_of: unknown family");
}

bool is_complex_family(Family f) { return domain_of(f).complex_valued; }

const char* family_name(Family f) {
  switch (f) {
    case Family::Gpt: return "gpt";
    case Family::GptExt: return "gpt-ext";
    case Family::Scarf1: return "scarf1";
    case Family::Scarf1Ext: return "scarf1-ext";
    case Family::Scarf2: return "scarf2";
    case Family::PtScarf2: return "pt-scarf2";
    case Family::PtScarf2ExtI: return "pt-scarf2-ext-i";
    case Family::PtScarf2ExtII: return "pt-scarf2-ext-ii";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f : {Family::Gpt, Family::GptExt, Family::Scarf1,
                   Family::Scarf1Ext, Family::Scarf2, Family::PtScarf2,
                   Family::PtScarf2ExtI, Family::PtScarf2ExtII})
    if (name == family_name(f)) return f;
  return std::nullopt;
}

std::complex<double> potential_eval(const FamilyParams& params, double x) {
  require_finite(params, "potential_eval");
  require_in_domain(domain_of(params.family), x, "potential_eval");
  const double A = params.A, B = params.B;
  switch (params.family) {
    case Family::Gpt:
      return gpt_value_impl(A, B, x);
    case Family::GptExt:
      if (!(B >= A + 0.5))
        throw std::invalid_argument(
            "potential_eval: extension requires B >= A+1/2, otherwise "
            "2B cosh x - 2A - 1 vanishes inside the domain");
      return gpt_ext_value_impl(A, B, x);
    case Family::Scarf1:
      return scarf1_value_impl(A, B, x);
    case Family::Scarf1Ext: {
      // defined through the factorization engine, no separate closed form
      check_scarf1_scheme_params(params, "potential_eval");
      const Scarf1Consts k = scarf1_consts(A, B, Path::Upper);
      const double w = scarf1_W_impl(k, x);
      return w * w + scarf1_Wp_impl(k, x) + k.E;
    }
    case Family::Scarf2:
      return scarf2_value_impl(A, B, x);
    case Family::PtScarf2:
      return pt_value_impl(A, B, x);
    case Family::PtScarf2ExtI:
      if (params.B == 0.0)
        throw std::invalid_argument("potential_eval: PT extension needs B != 0");
      return pt_ext_value_impl(A + 0.5, B, x);
    case Family::PtScarf2ExtII:
      if (params.B == 0.0)
        throw std::invalid_argument("potential_eval: PT extension needs B != 0");
      return pt_ext_value_impl(B, A + 0.5, x);
  }
  throw std::invalid_argument("potential_eval: unknown family");
}

double potential_eval_real(const FamilyParams& params, double x) {
  if (is_complex_family(params.family))
    throw Unsupported(std::string("potential_eval_real: ") +
                      family_name(params.family) + " is complex valued");
  return potential_eval(params, x).real();
}

FactorizationScheme superpotential(const FamilyParams& params, Path path) {
  require_finite(params, "superpotential");
  const double A = params.A, B = params.B;
  switch (params.family) {
    case Family::Gpt:
    case Family::GptExt: {
      check_gpt_scheme_params(params, "superpotential");
      const GptConsts c = gpt_consts(A, B, path);
      return {[A, B, c](double x) { return gpt_W_impl(A, B, c, x); },
              [A, B, c](double x) { return gpt_Wp_impl(A, B, c, x); },
              c.E, path, domain_of(Family::Gpt)};
    }
    case Family::Scarf1:
    case Family::Scarf1Ext: {
      check_scarf1_scheme_params(params, "superpotential");
      const Scarf1Consts k = scarf1_consts(A, B, path);
      return {[k](double x) { return scarf1_W_impl(k, x); },
              [k](double x) { return scarf1_Wp_impl(k, x); },
              k.E, path, domain_of(Family::Scarf1)};
    }
    case Family::Scarf2:
      throw Unsupported(
          "superpotential: the real hyperbolic Scarf extension keeps a "
          "real-axis pole for both pole-parameter solutions; only the "
          "PT-symmetric branches are constructed");
    default:
      throw Unsupported(
          "superpotential: complex-valued scheme; use superpotential_complex");
  }
}

ComplexFactorizationScheme superpotential_complex(const FamilyParams& params,
                                                  Path path) {
  switch (params.family) {
    case Family::PtScarf2:
    case Family::PtScarf2ExtI:
    case Family::PtScarf2ExtII: {
      require_finite(params, "superpotential_complex");
      check_pt_scheme_params(params, "superpotential_complex");
      const bool branch2 = params.family == Family::PtScarf2ExtII;
      const PtConsts k = pt_consts(params.A, params.B, path, branch2);
      return {[k](double x) { return pt_W_impl(k, x); },
              [k](double x) { return pt_Wp_impl(k, x); },
              k.E, path, domain_of(params.family), Cplx(k.c, 0.0)};
    }
    default: {
      const FactorizationScheme s = superpotential(params, path);
      // pole parameter of the real tails: hyperbolic -(2A+1)/(2B),
      // trigonometric -(2A-1)/(2B)
      const double c = (params.family == Family::Scarf1 ||
                        params.family == Family::Scarf1Ext)
                           ? -(2.0 * params.A - 1.0) / (2.0 * params.B)
                           : -(2.0 * params.A + 1.0) / (2.0 * params.B);
      return {[W = s.W](double x) { return Cplx(W(x), 0.0); },
              [Wp = s.Wprime](double x) { return Cplx(Wp(x), 0.0); },
              s.E, path, s.domain, Cplx(c, 0.0)};
    }
  }
}

FactorizationScheme tilde_superpotential(const FamilyParams& params,
                                         Path path) {
  require_finite(params, "tilde_superpotential");
  if (params.family != Family::Gpt && params.family != Family::GptExt)
    throw Unsupported("tilde_superpotential: defined for the hyperbolic chain");
  if (!(params.A > 0.0) || !(params.B > 0.0))
    throw std::invalid_argument("tilde_superpotential: requires A > 0, B > 0");
  const GptConsts c = gpt_consts(params.A, params.B, path);
  return {[c](double x) {
            const double s = std::sinh(x);
            return -(c.a * std::cosh(x) + c.b) / s;
          },
          [c](double x) {
            const double s = std::sinh(x);
            return (c.a + c.b * std::cosh(x)) / (s * s);
          },
          c.Etil, path, domain_of(Family::Gpt)};
}

PotentialEvaluator make_evaluator(const FamilyParams& params) {
  if (is_complex_family(params.family))
    throw Unsupported(std::string("make_evaluator: ") +
                      family_name(params.family) + " is complex valued");
  require_finite(params, "make_evaluator");
  return {domain_of(params.family),
          [params](double x) { return potential_eval_real(params, x); }};
}

ComplexPotentialEvaluator make_evaluator_complex(const FamilyParams& params) {
  require_finite(params, "make_evaluator_complex");
  return {domain_of(params.family),
          [params](double x) { return potential_eval(params, x); }};
}

PotentialEvaluator partner_from_scheme(const FactorizationScheme& scheme,
                                       Sign sign) {
  const double sgn = (sign == Sign::Minus) ? 1.0 : -1.0;
  return {scheme.domain,
          [W = scheme.W, Wp = scheme.Wprime, E = scheme.E, sgn](double x) {
            const double w = W(x);
            return w * w + sgn * Wp(x) + E;
          }};
}

ComplexPotentialEvaluator partner_from_scheme(
    const ComplexFactorizationScheme& scheme, Sign sign) {
  const double sgn = (sign == Sign::Minus) ? 1.0 : -1.0;
  return {scheme.domain,
          [W = scheme.W, Wp = scheme.Wprime, E = scheme.E, sgn](double x) {
            const Cplx w = W(x);
            return w * w + sgn * Wp(x) + E;
          }};
}

double factorization_function(const FamilyParams& params, Path path,
                              double x) {
  require_finite(params, "factorization_function");
  if (params.family != Family::Gpt && params.family != Family::GptExt)
    throw Unsupported("factorization_function: defined for the hyperbolic chain");
  check_gpt_scheme_params(params, "factorization_function");
  require_in_domain(domain_of(Family::Gpt), x, "factorization_function");
  const double A = params.A, B = params.B;
  double e1, e2;
  if (path == Path::Upper) {
    e1 = -0.5 * (B - A);
    e2 = -0.5 * (B + A + 1.0);
  } else {
    e1 = 0.5 * (B - A - 1.0);
    e2 = 0.5 * (B + A);
  }
  const double sh = std::sinh(0.5 * x);
  const double ch = std::cosh(0.5 * x);
  return std::pow(2.0 * sh * sh, e1) * std::pow(2.0 * ch * ch, e2) *
         gpt_denominator(A, B, x);
}

ValidityReport validate_params(const FamilyParams& params) {
  ValidityReport r;
  if (!std::isfinite(params.A) || !std::isfinite(params.B)) {
    r.detail = "non-finite parameters";
    return r;
  }
  const double A = params.A, B = params.B;
  switch (params.family) {
    case Family::Gpt:
    case Family::GptExt: {
      const bool ext = params.family == Family::GptExt;
      if (B > A + 1.0 && A > 0.0) {
        r.cls = ParamClass::Primary;
        r.detail = "primary range: B > A+1 > 1";
      } else if (A > 0.0 && B > A && B < A + 1.0 && B != A + 0.5) {
        if (ext && B < A + 0.5) {
          r.detail =
              "extension requires B >= A+1/2: 2B cosh x - 2A - 1 vanishes "
              "inside the domain";
          return r;
        }
        r.cls = ParamClass::WeakAttraction;
        r.detail = "weak attraction range: A < B < A+1, B != A+1/2";
      } else if (ext && A > 0.0 && B == A + 0.5) {
        r.detail =
            "degenerate B = A+1/2: the extension coincides with the "
            "conventional well at (A-1, A+3/2)";
        return r;
      } else {
        r.detail =
            "need B > A+1 > 1 (primary) or A < B < A+1, B != A+1/2 (weak "
            "attraction)";
        return r;
      }
      r.nu_max = highest_index_below(A);
      return r;
    }
    case Family::Scarf1:
    case Family::Scarf1Ext:
      if (B > 0.0 && B < A - 1.0) {
        r.cls = ParamClass::Primary;
        r.detail = "primary range: 0 < B < A-1";
        // infinitely many bound states on the finite interval: no nu_max
      } else {
        r.detail = "requires 0 < B < A-1";
      }
      return r;
    case Family::Scarf2:
      if (A > 0.0) {
        r.cls = ParamClass::Primary;
        r.detail = "primary range: A > 0";
        r.nu_max = highest_index_below(A);
      } else {
        r.detail = "requires A > 0";
      }
      return r;
    case Family::PtScarf2:
    case Family::PtScarf2ExtI:
    case Family::PtScarf2ExtII: {
      const bool ext = params.family != Family::PtScarf2;
      if (!(A > 0.0) || (ext && B == 0.0)) {
        r.detail = ext ? "requires A > 0 and B != 0" : "requires A > 0";
        return r;
      }
      r.cls = ParamClass::Primary;
      r.nu_max = highest_index_below(A);
      if (B - 0.5 > 0.0) {
        r.nu_max_second = highest_index_below(B - 0.5);
        r.detail = "primary range: A > 0; both real energy series present";
      } else {
        r.detail =
            "primary range: A > 0; second real energy series absent (needs "
            "B - 1/2 > 0)";
      }
      return r;
    }
  }
  r.detail = "unknown family";
  return r;
}

double pt_scarf2_energy(int series, double A, double B, int nu) {
  if (nu < 0) throw std::invalid_argument("pt_scarf2_energy: nu must be >= 0");
  if (series == 1) {
    if (!(A > 0.0) || !(nu < A))
      throw std::invalid_argument("pt_scarf2_energy: series 1 needs 0 <= nu < A");
    return -(A - nu) * (A - nu);
  }
  if (series == 2) {
    const double s = B - 0.5;
    if (!(s > 0.0) || !(nu < s))
      throw std::invalid_argument(
          "pt_scarf2_energy: series 2 needs B > 1/2 and 0 <= nu < B - 1/2");
    return -(s - nu) * (s - nu);
  }
  throw std::invalid_argument("pt_scarf2_energy: series must be 1 or 2");
}

}  // namespace rxpot
