#include "verify.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

#include "numerics.hpp"
#include "susy.hpp"
#include "wavefuncs.hpp"

namespace rxpot {

namespace {

using Cplx = std::complex<double>;

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = a + (b - a) * i / (n - 1);
  return xs;
}

void add_check(SuiteReport& r, const std::string& name, double value,
               double tol) {
  r.checks.push_back({name, value, tol, std::isfinite(value) && value <= tol});
}

double max_abs_diff(const std::function<double(double)>& f,
                    const std::function<double(double)>& g,
                    const std::vector<double>& xs) {
  double m = 0.0;
  for (double x : xs) m = std::max(m, std::abs(f(x) - g(x)));
  return m;
}

const char* path_tag(Path p) { return p == Path::Upper ? "upper" : "lower"; }

// Gaussian bump with derivatives through fourth order.
struct Bump {
  double x0, s;
  std::array<double, 5> jet(double x) const {
    const double u = (x - x0) / s;
    const double f = std::exp(-0.5 * u * u);
    const double i1 = 1.0 / s;
    return {f, -u * i1 * f, (u * u - 1.0) * i1 * i1 * f,
            (-u * u * u + 3.0 * u) * i1 * i1 * i1 * f,
            (u * u * u * u - 6.0 * u * u + 3.0) * i1 * i1 * i1 * i1 * f};
  }
};

// g = (+-d/dx + W) f as a jet one order lower; Wd holds W and derivatives.
std::array<double, 5> apply_jet(const std::array<double, 5>& f,
                                const std::array<double, 4>& Wd,
                                bool annihilate, int order_out) {
  static const double binom[4][4] = {
      {1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
  std::array<double, 5> g{};
  for (int n = 0; n <= order_out; ++n) {
    double acc = annihilate ? f[n + 1] : -f[n + 1];
    for (int j = 0; j <= n; ++j) acc += binom[n][j] * Wd[j] * f[n - j];
    g[n] = acc;
  }
  return g;
}

struct GptSchemeDerivs {
  double a, b, B, A;
  // W = (a cosh + b)/sinh - 2B sinh/D and its first two derivatives
  std::array<double, 4> main(double x) const {
    const double s = std::sinh(x), c = std::cosh(x);
    const double D = gpt_denominator(A, B, x);
    const double L = 2.0 * A + 1.0;
    std::array<double, 4> w{};
    w[0] = (a * c + b) / s - 2.0 * B * s / D;
    w[1] = -(a + b * c) / (s * s) -
           (4.0 * B * B - 2.0 * B * L * c) / (D * D);
    w[2] = (2.0 * c * (a + b * c) - b * s * s) / (s * s * s) +
           2.0 * B * s * (8.0 * B * B - 2.0 * B * L * c - L * L) / (D * D * D);
    return w;
  }
  // tilde W = -a coth - b csch and derivatives through third order
  std::array<double, 4> tilde(double x) const {
    const double ch = 1.0 / std::tanh(x), cs = 1.0 / std::sinh(x);
    std::array<double, 4> w{};
    w[0] = -a * ch - b * cs;
    w[1] = a * cs * cs + b * cs * ch;
    w[2] = -2.0 * a * cs * cs * ch - b * cs * (ch * ch + cs * cs);
    w[3] = 2.0 * a * (2.0 * cs * cs * ch * ch + cs * cs * cs * cs) +
           b * cs * ch * (ch * ch + 5.0 * cs * cs);
    return w;
  }
};

GptSchemeDerivs scheme_derivs(double A, double B, Path path) {
  const double sig = (path == Path::Upper) ? 1.0 : -1.0;
  return {sig * B + 0.5, -sig * (A + 0.5), B, A};
}

C2Function constant_jet(const std::array<double, 5>& j) {
  return {[v = j[0]](double) { return v; }, [v = j[1]](double) { return v; },
          [v = j[2]](double) { return v; }};
}

void suite_partner(SuiteReport& r, double A, double B) {
  const auto xs = linspace(0.1, 8.0, 60);
  for (Path path : {Path::Upper, Path::Lower}) {
    const double shift = (path == Path::Upper) ? 1.0 : -1.0;
    const FamilyParams base{Family::Gpt, A, B};
    const FamilyParams shifted{Family::Gpt, A, B + shift};
    const FamilyParams ext{Family::GptExt, A, B};
    const auto s = superpotential(base, path);
    const auto st = tilde_superpotential(base, path);
    const auto vplus = partner_from_scheme(s, Sign::Plus);
    const auto vminus = partner_from_scheme(s, Sign::Minus);
    const auto tplus = partner_from_scheme(st, Sign::Plus);
    const auto tminus = partner_from_scheme(st, Sign::Minus);
    const std::string tag = path_tag(path);
    add_check(r, tag + "/plus-matches-shifted-well",
              max_abs_diff(vplus.value,
                           [&](double x) { return potential_eval_real(shifted, x); },
                           xs),
              1e-9);
    add_check(r, tag + "/minus-matches-extension",
              max_abs_diff(vminus.value,
                           [&](double x) { return potential_eval_real(ext, x); },
                           xs),
              1e-9);
    add_check(r, tag + "/tilde-plus-matches-base",
              max_abs_diff(tplus.value,
                           [&](double x) { return potential_eval_real(base, x); },
                           xs),
              1e-9);
    add_check(r, tag + "/tilde-minus-matches-shifted-well",
              max_abs_diff(tminus.value,
                           [&](double x) { return potential_eval_real(shifted, x); },
                           xs),
              1e-9);
  }
}

void suite_intertwine(SuiteReport& r, double A, double B) {
  const auto xs = linspace(0.2, 10.0, 50);
  const auto scheme = superpotential({Family::Gpt, A, B}, Path::Upper);
  for (int nu = 0; nu <= nu_max(A); ++nu) {
    const Eigenpair up = gpt_wavefunction(A, B + 1.0, nu);
    const Eigenpair ext = ext_wavefunction(A, B, nu);
    const double root_eps = std::sqrt(epsilon(A, B, nu, Path::Upper));
    double m = 0.0;
    for (double x : xs) {
      const double built =
          (up.psi_deriv(x) + scheme.W(x) * up.psi(x)) / root_eps;
      m = std::max(m, std::abs(built - ext.psi(x)));
    }
    add_check(r, "reconstruct-nu" + std::to_string(nu), m, 1e-8);
  }
}

void suite_ssusy(SuiteReport& r, double A, double B, Path path) {
  const auto xs = linspace(0.3, 8.0, 50);
  const FamilyParams base{Family::Gpt, A, B};
  const auto data = ssusy_data(base, path);
  const auto s = superpotential(base, path);
  const auto st = tilde_superpotential(base, path);
  const double cbar_expect = (path == Path::Upper) ? -2.0 * B : 2.0 * B;

  add_check(r, "cbar-value", std::abs(data.cbar - cbar_expect), 1e-12);
  add_check(r, "p-matches-mean-superpotential",
            max_abs_diff(data.p,
                         [&](double x) { return 0.5 * (s.W(x) + st.W(x)); },
                         xs),
            1e-12);

  const Bump bump{3.0, 1.5};
  const auto derivs = scheme_derivs(A, B, path);

  // A f via p,q vs hat-A(hat-B f); adjoint likewise
  double mcomp = 0.0, madj = 0.0;
  for (double x : xs) {
    const auto f = bump.jet(x);
    const auto wt = derivs.tilde(x);
    const auto wm = derivs.main(x);
    const auto bf = apply_jet(f, wt, true, 3);
    const double lhs = apply_second_order(data, constant_jet(f), x);
    const double rhs = bf[1] + wm[0] * bf[0];
    mcomp = std::max(mcomp, std::abs(lhs - rhs));

    const auto adf = apply_jet(f, wm, false, 1);
    const double lhsa = apply_second_order(data, constant_jet(f), x, true);
    const double rhsa = -adf[1] + wt[0] * adf[0];
    madj = std::max(madj, std::abs(lhsa - rhsa));
  }
  add_check(r, "compose-annihilate", mcomp, 1e-7);
  add_check(r, "compose-adjoint", madj, 1e-7);

  // closed p-formula potentials against the first-order constructions
  add_check(
      r, "first-potential-consistency",
      max_abs_diff([&](double x) { return second_order_potential(data, 1, x); },
                   [&](double x) {
                     return potential_eval_real(base, x) - st.E + 0.5 * data.cbar;
                   },
                   xs),
      1e-7);
  add_check(
      r, "second-potential-consistency",
      max_abs_diff([&](double x) { return second_order_potential(data, 2, x); },
                   [&](double x) {
                     return potential_eval_real({Family::GptExt, A, B}, x) -
                            s.E - 0.5 * data.cbar;
                   },
                   xs),
      1e-7);
  add_check(
      r, "intermediate-hamiltonian",
      max_abs_diff([&](double x) {
                     return partner_from_scheme(st, Sign::Minus).value(x) -
                            st.E + 0.5 * data.cbar;
                   },
                   [&](double x) {
                     return partner_from_scheme(s, Sign::Plus).value(x) - s.E -
                            0.5 * data.cbar;
                   },
                   xs),
      1e-10);

  // both decompositions produce the same pair of glued potentials
  const auto data_up = ssusy_data(base, Path::Upper);
  const auto data_lo = ssusy_data(base, Path::Lower);
  add_check(r, "two-path-first-potential",
            max_abs_diff(
                [&](double x) { return second_order_potential(data_up, 1, x); },
                [&](double x) { return second_order_potential(data_lo, 1, x); },
                xs),
            1e-9);
  add_check(r, "two-path-second-potential",
            max_abs_diff(
                [&](double x) { return second_order_potential(data_up, 2, x); },
                [&](double x) { return second_order_potential(data_lo, 2, x); },
                xs),
            1e-9);

  // strong intertwining: A(h1 f) against -(A f)'' + V2 (A f), the former
  // through p,q, the latter through ladder compositions
  double mint = 0.0;
  for (double x : xs) {
    const auto f = bump.jet(x);
    const auto wt = derivs.tilde(x);
    const auto wm = derivs.main(x);
    const auto bf = apply_jet(f, wt, true, 3);
    auto h1f = apply_jet(bf, wt, false, 2);
    for (int n = 0; n <= 2; ++n) h1f[n] += 0.5 * data.cbar * f[n];
    const double lhs = apply_second_order(data, constant_jet(h1f), x);
    const auto af = apply_jet(bf, wm, true, 2);
    const double v2 = potential_eval_real({Family::GptExt, A, B}, x) - s.E -
                      0.5 * data.cbar;
    const double rhs = -af[2] + v2 * af[0];
    mint = std::max(mint, std::abs(lhs - rhs));
  }
  add_check(r, "hamiltonian-intertwine", mint, 1e-6);
}

void suite_ortho(SuiteReport& r, double A, double B) {
  const int levels = nu_max(A) + 1;
  const double x_lo = 1e-9;
  const double x_hi = 25.0 / (A - nu_max(A));
  std::vector<Eigenpair> ext, base;
  for (int nu = 0; nu < levels; ++nu) {
    ext.push_back(ext_wavefunction(A, B, nu));
    base.push_back(gpt_wavefunction(A, B, nu));
  }
  auto inner = [&](const Eigenpair& a, const Eigenpair& b) {
    return integrate([&](double x) { return a.psi(x) * b.psi(x); }, x_lo, x_hi,
                     1e-10);
  };
  double diag = 0.0, off = 0.0, bdiag = 0.0, boff = 0.0;
  for (int i = 0; i < levels; ++i) {
    diag = std::max(diag, std::abs(inner(ext[i], ext[i]) - 1.0));
    bdiag = std::max(bdiag, std::abs(inner(base[i], base[i]) - 1.0));
    for (int j = 0; j < i; ++j) {
      off = std::max(off, std::abs(inner(ext[i], ext[j])));
      boff = std::max(boff, std::abs(inner(base[i], base[j])));
    }
  }
  add_check(r, "extension-norms", diag, 1e-8);
  add_check(r, "base-norms", bdiag, 1e-8);
  if (levels > 1) {
    add_check(r, "extension-orthogonality", off, 1e-8);
    add_check(r, "base-orthogonality", boff, 1e-8);
  }
  // Sturm oscillation: nu sign changes in the interior
  const auto xs = linspace(0.05, x_hi, 4000);
  for (int nu = 0; nu < levels; ++nu) {
    int changes = 0;
    double prev = ext[nu].psi(xs[0]);
    for (size_t i = 1; i < xs.size(); ++i) {
      const double cur = ext[nu].psi(xs[i]);
      if (prev * cur < 0.0) ++changes;
      prev = cur;
    }
    add_check(r, "node-count-nu" + std::to_string(nu),
              std::abs(changes - nu), 0.5);
  }
}

void suite_pt_polefree(SuiteReport& r, double A, double B) {
  const auto xs = linspace(-10.0, 10.0, 81);
  const struct {
    Family fam;
    const char* tag;
    FamilyParams plus_target;
  } branches[] = {
      {Family::PtScarf2ExtI, "ext-i", {Family::PtScarf2, A, B + 1.0}},
      {Family::PtScarf2ExtII, "ext-ii", {Family::PtScarf2, A + 1.0, B}},
  };
  for (const auto& br : branches) {
    const FamilyParams fp{br.fam, A, B};
    // finite everywhere sampled, including x = 0
    double worst = 0.0;
    double ptsym = 0.0;
    for (double x : xs) {
      const Cplx v = potential_eval(fp, x);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) worst = 1.0;
      ptsym = std::max(ptsym,
                       std::abs(potential_eval(fp, -x) - std::conj(v)));
    }
    add_check(r, std::string(br.tag) + "/finite-on-axis", worst, 0.5);
    add_check(r, std::string(br.tag) + "/pt-symmetry", ptsym, 1e-10);

    const auto scheme = superpotential_complex(fp, Path::Upper);
    const auto vm = partner_from_scheme(scheme, Sign::Minus);
    const auto vp = partner_from_scheme(scheme, Sign::Plus);
    double mminus = 0.0, mplus = 0.0;
    for (double x : xs) {
      mminus = std::max(mminus, std::abs(vm.value(x) - potential_eval(fp, x)));
      mplus = std::max(
          mplus, std::abs(vp.value(x) - potential_eval(br.plus_target, x)));
    }
    add_check(r, std::string(br.tag) + "/minus-matches-extension", mminus,
              1e-9);
    add_check(r, std::string(br.tag) + "/plus-matches-shifted-well", mplus,
              1e-9);
  }
  double base_sym = 0.0;
  for (double x : xs)
    base_sym = std::max(
        base_sym, std::abs(potential_eval({Family::PtScarf2, A, B}, -x) -
                           std::conj(potential_eval({Family::PtScarf2, A, B}, x))));
  add_check(r, "base/pt-symmetry", base_sym, 1e-10);
}

void run_one(SuiteReport& out, const std::string& suite, double A, double B,
             Path path) {
  if (suite == "partner")
    suite_partner(out, A, B);
  else if (suite == "intertwine")
    suite_intertwine(out, A, B);
  else if (suite == "ssusy")
    suite_ssusy(out, A, B, path);
  else if (suite == "ortho")
    suite_ortho(out, A, B);
  else if (suite == "pt-polefree")
    suite_pt_polefree(out, A, B);
  else
    throw std::invalid_argument("run_suite: unknown suite '" + suite + "'");
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"partner", "intertwine", "ssusy", "ortho", "pt-polefree", "all"};
}

SuiteReport run_suite(const std::string& suite, double A, double B, Path path) {
  SuiteReport report;
  report.suite = suite;
  report.A = A;
  report.B = B;
  report.path = path;
  if (suite == "all") {
    for (const auto& name :
         {"partner", "intertwine", "ssusy", "ortho", "pt-polefree"}) {
      SuiteReport sub;
      sub.path = path;
      run_one(sub, name, A, B, path);
      for (auto& c : sub.checks) {
        c.name = std::string(name) + "/" + c.name;
        report.checks.push_back(std::move(c));
      }
    }
  } else {
    run_one(report, suite, A, B, path);
  }
  report.pass = true;
  for (const auto& c : report.checks) report.pass = report.pass && c.pass;
  return report;
}

}  // namespace rxpot
