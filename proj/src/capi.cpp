#include "rxpot.h"

#include <cmath>
#include <complex>
#include <cstring>
#include <stdexcept>
#include <string>

#include "errors.hpp"
#include "numerics.hpp"
#include "potentials.hpp"
#include "verify.hpp"
#include "wavefuncs.hpp"

namespace {

thread_local std::string g_last_error;

template <typename Fn>
rxpot_status guarded(Fn&& fn) {
  try {
    fn();
    return RXPOT_OK;
  } catch (const rxpot::Unsupported& e) {
    g_last_error = e.what();
    return RXPOT_ERR_UNSUPPORTED;
  } catch (const rxpot::NoConvergence& e) {
    g_last_error = e.what();
    return RXPOT_ERR_NO_CONVERGENCE;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return RXPOT_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return RXPOT_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RXPOT_ERR_INTERNAL;
  }
}

rxpot::Family parse_family(const char* name) {
  if (!name) throw std::invalid_argument("family name is null");
  const auto f = rxpot::family_from_name(name);
  if (!f)
    throw std::invalid_argument(std::string("unknown family '") + name + "'");
  return *f;
}

rxpot::FamilyParams checked_params(const char* family, double A, double B) {
  const rxpot::FamilyParams fp{parse_family(family), A, B};
  const rxpot::ValidityReport v = rxpot::validate_params(fp);
  if (v.cls == rxpot::ParamClass::Invalid)
    throw std::invalid_argument(std::string(rxpot::family_name(fp.family)) +
                                ": " + v.detail);
  return fp;
}

}  // namespace

struct rxpot_potential {
  rxpot::ComplexPotentialEvaluator eval;
  bool complex_valued;
};

struct rxpot_wavefunction {
  rxpot::Eigenpair pair;
};

struct rxpot_report {
  rxpot::SuiteReport report;
};

extern "C" {

const char* rxpot_last_error(void) { return g_last_error.c_str(); }

rxpot_status rxpot_potential_create(const char* family, double A, double B,
                                    rxpot_potential** out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("out pointer is null");
    const auto fp = checked_params(family, A, B);
    *out = new rxpot_potential{rxpot::make_evaluator_complex(fp),
                               rxpot::is_complex_family(fp.family)};
  });
}

void rxpot_potential_free(rxpot_potential* p) { delete p; }

int rxpot_potential_is_complex(const rxpot_potential* p) {
  return p && p->complex_valued ? 1 : 0;
}

rxpot_status rxpot_potential_domain(const rxpot_potential* p, double* lo,
                                    double* hi) {
  return guarded([&] {
    if (!p || !lo || !hi) throw std::invalid_argument("null argument");
    *lo = p->eval.domain.lo;
    *hi = p->eval.domain.hi;
  });
}

rxpot_status rxpot_potential_eval(const rxpot_potential* p, double x,
                                  double* re, double* im) {
  return guarded([&] {
    if (!p || !re || !im) throw std::invalid_argument("null argument");
    const std::complex<double> v = p->eval.value(x);
    *re = v.real();
    *im = v.imag();
  });
}

rxpot_status rxpot_wavefunction_create(const char* family, double A, double B,
                                       int nu, rxpot_wavefunction** out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("out pointer is null");
    const rxpot::Family f = parse_family(family);
    if (f == rxpot::Family::Gpt)
      *out = new rxpot_wavefunction{rxpot::gpt_wavefunction(A, B, nu)};
    else if (f == rxpot::Family::GptExt)
      *out = new rxpot_wavefunction{rxpot::ext_wavefunction(A, B, nu)};
    else
      throw rxpot::Unsupported(
          "closed-form wavefunctions exist for gpt and gpt-ext only");
  });
}

void rxpot_wavefunction_free(rxpot_wavefunction* w) { delete w; }

rxpot_status rxpot_wavefunction_energy(const rxpot_wavefunction* w,
                                       double* energy) {
  return guarded([&] {
    if (!w || !energy) throw std::invalid_argument("null argument");
    *energy = w->pair.energy;
  });
}

rxpot_status rxpot_wavefunction_eval(const rxpot_wavefunction* w, double x,
                                     double* psi) {
  return guarded([&] {
    if (!w || !psi) throw std::invalid_argument("null argument");
    *psi = w->pair.psi(x);
  });
}

rxpot_status rxpot_gpt_energy(double A, int nu, double* energy) {
  return guarded([&] {
    if (!energy) throw std::invalid_argument("null argument");
    *energy = rxpot::gpt_energy(A, nu);
  });
}

rxpot_status rxpot_nu_max(double A, int* out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null argument");
    *out = rxpot::nu_max(A);
  });
}

rxpot_status rxpot_spectrum(const char* family, double A, double B, int grid_n,
                            int k, double* values) {
  return guarded([&] {
    if (!values) throw std::invalid_argument("null argument");
    const rxpot::FamilyParams fp{parse_family(family), A, B};
    const auto vals = rxpot::family_spectrum(fp, grid_n, k);
    for (int i = 0; i < k; ++i) values[i] = vals[i];
  });
}

rxpot_status rxpot_verify_run(const char* suite, double A, double B,
                              const char* path, rxpot_report** out) {
  return guarded([&] {
    if (!suite || !path || !out) throw std::invalid_argument("null argument");
    rxpot::Path p;
    if (std::strcmp(path, "upper") == 0)
      p = rxpot::Path::Upper;
    else if (std::strcmp(path, "lower") == 0)
      p = rxpot::Path::Lower;
    else
      throw std::invalid_argument(std::string("unknown path '") + path +
                                  "', expected upper or lower");
    *out = new rxpot_report{rxpot::run_suite(suite, A, B, p)};
  });
}

void rxpot_report_free(rxpot_report* r) { delete r; }

int rxpot_report_pass(const rxpot_report* r) {
  return r && r->report.pass ? 1 : 0;
}

int rxpot_report_check_count(const rxpot_report* r) {
  return r ? static_cast<int>(r->report.checks.size()) : 0;
}

const char* rxpot_report_check_name(const rxpot_report* r, int i) {
  if (!r || i < 0 || i >= rxpot_report_check_count(r)) return nullptr;
  return r->report.checks[i].name.c_str();
}

rxpot_status rxpot_report_check_value(const rxpot_report* r, int i,
                                      double* value) {
  return guarded([&] {
    if (!r || !value || i < 0 || i >= rxpot_report_check_count(r))
      throw std::invalid_argument("bad report index");
    *value = r->report.checks[i].value;
  });
}

rxpot_status rxpot_report_check_tol(const rxpot_report* r, int i, double* tol) {
  return guarded([&] {
    if (!r || !tol || i < 0 || i >= rxpot_report_check_count(r))
      throw std::invalid_argument("bad report index");
    *tol = r->report.checks[i].tol;
  });
}

int rxpot_report_check_pass(const rxpot_report* r, int i) {
  if (!r || i < 0 || i >= rxpot_report_check_count(r)) return 0;
  return r->report.checks[i].pass ? 1 : 0;
}

}  // extern "C"
