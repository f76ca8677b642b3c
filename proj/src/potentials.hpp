#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>

namespace rxpot {

// Couplings are written (A, B) throughout; each family fixes its own admissible
// ranges (see validate_params).
enum class Family {
  Gpt,            // generalized Poschl-Teller well on (0, inf)
  GptExt,         // its rationally extended isospectral partner
  Scarf1,         // trigonometric Scarf well on (-pi/2, pi/2)
  Scarf1Ext,      // extension of Scarf1, built through the factorization engine
  Scarf2,         // hyperbolic Scarf well on the real line
  PtScarf2,       // PT-symmetric hyperbolic Scarf (complex valued)
  PtScarf2ExtI,   // extension branch with denominator 2A+1 - 2iB sinh x
  PtScarf2ExtII,  // extension branch with denominator 2B - i(2A+1) sinh x
};

// Which way the one-step reparametrization runs.  Upper shifts the relevant
// coupling up by one (B+1 for Gpt/Scarf1 and PT branch I, A+1 for PT branch
// II), Lower shifts it down.
enum class Path { Upper, Lower };

// Partner selector: Plus builds W^2 - W' + E, Minus builds W^2 + W' + E.
enum class Sign { Plus, Minus };

struct FamilyParams {
  Family family;
  double A = 0.0;
  double B = 0.0;
};

enum class DomainKind { HalfLine, OpenInterval, RealLine };

struct DomainDescriptor {
  DomainKind kind;
  double lo, hi;  // open-interval endpoints; infinities for unbounded sides
  bool complex_valued;
  bool contains(double x) const { return x > lo && x < hi; }
};

DomainDescriptor domain_of(Family f);
bool is_complex_family(Family f);
const char* family_name(Family f);  // CLI spelling, e.g. "pt-scarf2-ext-i"
std::optional<Family> family_from_name(const std::string& name);

// 2B cosh x - 2A - 1, evaluated as 4B sinh^2(x/2) + (2B - 2A - 1) so the
// near-zero limit keeps full precision.  Shared denominator of every rational
// term in the hyperbolic chain.
double gpt_denominator(double A, double B, double x);

// Pointwise value of the family potential.  Real families come back with zero
// imaginary part; use potential_eval_real when a plain double is needed.
// Light validation only: the point must lie in the domain and the parameters
// must keep the expression pole free (GptExt needs B >= A+1/2, the PT
// extensions need B != 0).  Range classification is validate_params' job.
std::complex<double> potential_eval(const FamilyParams& params, double x);
double potential_eval_real(const FamilyParams& params, double x);

// First-order factorization data: V = W^2 - W' + E holds for the shifted well
// and V = W^2 + W' + E for the rational extension.  Wprime is analytic, not a
// finite difference.
struct FactorizationScheme {
  std::function<double(double)> W, Wprime;
  double E;
  Path path;
  DomainDescriptor domain;
};

struct ComplexFactorizationScheme {
  std::function<std::complex<double>(double)> W, Wprime;
  double E;
  Path path;
  DomainDescriptor domain;
  std::complex<double> pole_parameter;  // constant c in the rational tail of W
};

// Scheme whose Minus partner is the rational extension of the family.
// Real-valued families only (Gpt/GptExt share one scheme, likewise Scarf1).
// The real Scarf2 family is rejected: both pole-parameter solutions leave a
// real-axis pole in its extension, so only the PT version is constructed.
FactorizationScheme superpotential(const FamilyParams& params, Path path);

// Same contract including the complex (PT) branches.  PtScarf2 and
// PtScarf2ExtI select branch I (c = -(2A+1)/(2B)); PtScarf2ExtII selects
// branch II (c = -2B/(2A+1), couplings swapped by the A+1/2 <-> B
// permutation, so its paths shift A instead of B).
ComplexFactorizationScheme superpotential_complex(const FamilyParams& params,
                                                  Path path);

// First step of the two-step chain: converts the base well into the shifted
// well, W~ = -a coth x - b csch x.  Gpt only.
FactorizationScheme tilde_superpotential(const FamilyParams& params, Path path);

struct PotentialEvaluator {
  DomainDescriptor domain;
  std::function<double(double)> value;
};

struct ComplexPotentialEvaluator {
  DomainDescriptor domain;
  std::function<std::complex<double>(double)> value;
};

PotentialEvaluator make_evaluator(const FamilyParams& params);
ComplexPotentialEvaluator make_evaluator_complex(const FamilyParams& params);

PotentialEvaluator partner_from_scheme(const FactorizationScheme& scheme,
                                       Sign sign);
ComplexPotentialEvaluator partner_from_scheme(
    const ComplexFactorizationScheme& scheme, Sign sign);

// Nodeless zero mode of the scheme, -phi'' + (V - E) phi = 0, with the
// normalization constant fixed to 1:
//   phi = (cosh x - 1)^e1 (cosh x + 1)^e2 (2B cosh x - 2A - 1),
// e1 = -(B-A)/2, e2 = -(B+A+1)/2 on the upper path (phi ~ x^-(B-A) at 0),
// e1 = (B-A-1)/2, e2 = (B+A)/2 on the lower path (phi ~ x^(B-A-1)).
// Gpt only; W = -phi'/phi reproduces the scheme superpotential.
double factorization_function(const FamilyParams& params, Path path, double x);

enum class ParamClass { Primary, WeakAttraction, Invalid };

struct ValidityReport {
  ParamClass cls = ParamClass::Invalid;
  std::optional<int> nu_max;         // highest bound-state index, finite towers
  std::optional<int> nu_max_second;  // PT: highest index of the second series
  std::string detail;
};

// Range classification.
//   Gpt/GptExt  primary: B > A+1 > 1; weak attraction: A < B < A+1 with A > 0
//               and B != A+1/2 (two strict sub-ranges either side of A+1/2);
//               GptExt additionally needs B >= A+1/2 to stay pole free.
//   Scarf1/Ext  primary: 0 < B < A-1.
//   Scarf2      primary: A > 0.
//   PtScarf2*   primary: A > 0 (extensions: B != 0); the second real energy
//               series exists only when B > 1/2.
ValidityReport validate_params(const FamilyParams& params);

// Real energy series of the PT-symmetric Scarf spectrum:
//   series 1: -(A - nu)^2    for integer 0 <= nu < A
//   series 2: -(B-1/2-nu)^2  for integer 0 <= nu < B-1/2
double pt_scarf2_energy(int series, double A, double B, int nu);

}  // namespace rxpot
