#ifndef RXPOT_H
#define RXPOT_H

/* C interface to the rational-extension potential library.  All entry points
 * return rxpot_status; rxpot_last_error() describes the most recent failure
 * on the calling thread.  Handles are opaque and freed with the matching
 * *_free function. */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define RXPOT_API __declspec(dllexport)
#else
#define RXPOT_API __attribute__((visibility("default")))
#endif

typedef enum rxpot_status {
  RXPOT_OK = 0,
  RXPOT_ERR_INVALID_ARGUMENT = 1, /* bad parameters, ranges, names, nu */
  RXPOT_ERR_DOMAIN = 2,           /* x outside the potential's domain */
  RXPOT_ERR_UNSUPPORTED = 3,      /* operation undefined for the family */
  RXPOT_ERR_NO_CONVERGENCE = 4,   /* iterative solver hit its cap */
  RXPOT_ERR_INTERNAL = 5
} rxpot_status;

RXPOT_API const char* rxpot_last_error(void);

typedef struct rxpot_potential rxpot_potential;
typedef struct rxpot_wavefunction rxpot_wavefunction;
typedef struct rxpot_report rxpot_report;

/* Families: gpt, gpt-ext, scarf1, scarf1-ext, scarf2, pt-scarf2,
 * pt-scarf2-ext-i, pt-scarf2-ext-ii.  Creation validates the coupling
 * ranges and reports the violated range in rxpot_last_error(). */
RXPOT_API rxpot_status rxpot_potential_create(const char* family, double A,
                                              double B, rxpot_potential** out);
RXPOT_API void rxpot_potential_free(rxpot_potential* p);

/* 1 when the family takes complex values (PT-symmetric families). */
RXPOT_API int rxpot_potential_is_complex(const rxpot_potential* p);

/* Open-domain endpoints; infinite sides come back as +-HUGE_VAL. */
RXPOT_API rxpot_status rxpot_potential_domain(const rxpot_potential* p,
                                              double* lo, double* hi);

/* Pointwise value; *im is 0 for real families. */
RXPOT_API rxpot_status rxpot_potential_eval(const rxpot_potential* p, double x,
                                            double* re, double* im);

/* Closed-form bound states of the hyperbolic well and its extension;
 * family is gpt or gpt-ext. */
RXPOT_API rxpot_status rxpot_wavefunction_create(const char* family, double A,
                                                 double B, int nu,
                                                 rxpot_wavefunction** out);
RXPOT_API void rxpot_wavefunction_free(rxpot_wavefunction* w);
RXPOT_API rxpot_status rxpot_wavefunction_energy(const rxpot_wavefunction* w,
                                                 double* energy);
RXPOT_API rxpot_status rxpot_wavefunction_eval(const rxpot_wavefunction* w,
                                               double x, double* psi);

/* Exact energy -(A-nu)^2 and the highest bound-state index. */
RXPOT_API rxpot_status rxpot_gpt_energy(double A, int nu, double* energy);
RXPOT_API rxpot_status rxpot_nu_max(double A, int* out);

/* k lowest eigenvalues of the 3-point finite-difference Hamiltonian on the
 * default verification grid with grid_n nodes.  Real families only; values
 * must hold k doubles. */
RXPOT_API rxpot_status rxpot_spectrum(const char* family, double A, double B,
                                      int grid_n, int k, double* values);

/* Verification suites: partner, intertwine, ssusy, ortho, pt-polefree, all.
 * path is "upper" or "lower". */
RXPOT_API rxpot_status rxpot_verify_run(const char* suite, double A, double B,
                                        const char* path, rxpot_report** out);
RXPOT_API void rxpot_report_free(rxpot_report* r);
RXPOT_API int rxpot_report_pass(const rxpot_report* r);
RXPOT_API int rxpot_report_check_count(const rxpot_report* r);
RXPOT_API const char* rxpot_report_check_name(const rxpot_report* r, int i);
RXPOT_API rxpot_status rxpot_report_check_value(const rxpot_report* r, int i,
                                                double* value);
RXPOT_API rxpot_status rxpot_report_check_tol(const rxpot_report* r, int i,
                                              double* tol);
RXPOT_API int rxpot_report_check_pass(const rxpot_report* r, int i);

#ifdef __cplusplus
}
#endif

#endif /* RXPOT_H */
