#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rxpot.h"

namespace {

using nlohmann::ordered_json;

// exit codes: 0 ok/pass, 1 check failure, 2 usage or validation,
// 3 solver non-convergence
int fail_with(rxpot_status st) {
  std::fprintf(stderr, "error: %s\n", rxpot_last_error());
  switch (st) {
    case RXPOT_ERR_NO_CONVERGENCE:
      return 3;
    case RXPOT_ERR_INVALID_ARGUMENT:
    case RXPOT_ERR_DOMAIN:
    case RXPOT_ERR_UNSUPPORTED:
      return 2;
    default:
      return 4;
  }
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct PotentialArgs {
  std::string family;
  double A = 0.0, B = 0.0;
  double xmin = 0.0, xmax = 0.0;
  int n = 0;
  std::string format = "csv";
};

int run_potential(const PotentialArgs& a) {
  if (a.n < 1) {
    std::fprintf(stderr, "error: --n must be >= 1\n");
    return 2;
  }
  if (a.n > 1 && !(a.xmax > a.xmin)) {
    std::fprintf(stderr, "error: --xmax must exceed --xmin when n > 1\n");
    return 2;
  }
  rxpot_potential* pot = nullptr;
  rxpot_status st = rxpot_potential_create(a.family.c_str(), a.A, a.B, &pot);
  if (st != RXPOT_OK) return fail_with(st);
  const bool complex_valued = rxpot_potential_is_complex(pot) != 0;

  std::vector<double> xs(a.n);
  for (int i = 0; i < a.n; ++i)
    xs[i] = (a.n == 1) ? a.xmin : a.xmin + (a.xmax - a.xmin) * i / (a.n - 1);

  std::vector<double> re(a.n), im(a.n);
  for (int i = 0; i < a.n; ++i) {
    st = rxpot_potential_eval(pot, xs[i], &re[i], &im[i]);
    if (st != RXPOT_OK) {
      rxpot_potential_free(pot);
      return fail_with(st);
    }
  }
  rxpot_potential_free(pot);

  if (a.format == "json") {
    ordered_json j;
    j["family"] = a.family;
    j["A"] = a.A;
    j["B"] = a.B;
    j["samples"] = ordered_json::array();
    for (int i = 0; i < a.n; ++i) {
      ordered_json row;
      row["x"] = xs[i];
      if (complex_valued) {
        row["re"] = re[i];
        row["im"] = im[i];
      } else {
        row["V"] = re[i];
      }
      j["samples"].push_back(row);
    }
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf(complex_valued ? "x,re,im\n" : "x,V\n");
    for (int i = 0; i < a.n; ++i) {
      if (complex_valued)
        std::printf("%s,%s,%s\n", num(xs[i]).c_str(), num(re[i]).c_str(),
                    num(im[i]).c_str());
      else
        std::printf("%s,%s\n", num(xs[i]).c_str(), num(re[i]).c_str());
    }
  }
  return 0;
}

struct SpectrumArgs {
  std::string family;
  double A = 0.0, B = 0.0;
  int grid_n = 4097;
  int k = 1;
  double tol = 1e-4;
  std::string versus;
};

int run_spectrum(const SpectrumArgs& a) {
  if (a.k < 1) {
    std::fprintf(stderr, "error: --k must be >= 1\n");
    return 2;
  }
  std::vector<double> values(a.k);
  rxpot_status st =
      rxpot_spectrum(a.family.c_str(), a.A, a.B, a.grid_n, a.k, values.data());
  if (st != RXPOT_OK) return fail_with(st);

  std::vector<double> reference(a.k, NAN);
  bool has_reference = false;
  if (!a.versus.empty()) {
    st = rxpot_spectrum(a.versus.c_str(), a.A, a.B, a.grid_n, a.k,
                        reference.data());
    if (st != RXPOT_OK) return fail_with(st);
    has_reference = true;
  } else if (a.family == "gpt" || a.family == "gpt-ext") {
    int top = 0;
    st = rxpot_nu_max(a.A, &top);
    if (st != RXPOT_OK) return fail_with(st);
    for (int nu = 0; nu < a.k && nu <= top; ++nu) {
      st = rxpot_gpt_energy(a.A, nu, &reference[nu]);
      if (st != RXPOT_OK) return fail_with(st);
    }
    has_reference = true;
  }

  bool all_within = true;
  if (has_reference) {
    std::printf("index,value,reference,absdiff\n");
    for (int i = 0; i < a.k; ++i) {
      if (std::isnan(reference[i])) {
        std::printf("%d,%s,,\n", i, num(values[i]).c_str());
        continue;
      }
      const double diff = std::fabs(values[i] - reference[i]);
      all_within = all_within && diff < a.tol;
      std::printf("%d,%s,%s,%s\n", i, num(values[i]).c_str(),
                  num(reference[i]).c_str(), num(diff).c_str());
    }
  } else {
    std::printf("index,value\n");
    for (int i = 0; i < a.k; ++i)
      std::printf("%d,%s\n", i, num(values[i]).c_str());
  }
  return all_within ? 0 : 1;
}

struct VerifyArgs {
  std::string suite = "all";
  double A = 1.5, B = 3.0;
  std::string path = "upper";
};

int run_verify(const VerifyArgs& a) {
  rxpot_report* rep = nullptr;
  rxpot_status st =
      rxpot_verify_run(a.suite.c_str(), a.A, a.B, a.path.c_str(), &rep);
  if (st != RXPOT_OK) return fail_with(st);

  ordered_json j;
  j["suite"] = a.suite;
  j["params"] = {{"A", a.A}, {"B", a.B}, {"path", a.path}};
  j["checks"] = ordered_json::array();
  const int count = rxpot_report_check_count(rep);
  for (int i = 0; i < count; ++i) {
    double value = 0.0, tol = 0.0;
    rxpot_report_check_value(rep, i, &value);
    rxpot_report_check_tol(rep, i, &tol);
    j["checks"].push_back({{"name", rxpot_report_check_name(rep, i)},
                           {"value", value},
                           {"tol", tol},
                           {"pass", rxpot_report_check_pass(rep, i) != 0}});
  }
  const bool pass = rxpot_report_pass(rep) != 0;
  j["pass"] = pass;
  rxpot_report_free(rep);
  std::printf("%s\n", j.dump(2).c_str());
  return pass ? 0 : 1;
}

struct WavefunctionArgs {
  std::string family;
  double A = 0.0, B = 0.0;
  int nu = 0;
  double xmin = 0.0, xmax = 0.0;
  int n = 0;
};

int run_wavefunction(const WavefunctionArgs& a) {
  if (a.n < 1) {
    std::fprintf(stderr, "error: --n must be >= 1\n");
    return 2;
  }
  if (a.n > 1 && !(a.xmax > a.xmin)) {
    std::fprintf(stderr, "error: --xmax must exceed --xmin when n > 1\n");
    return 2;
  }
  rxpot_wavefunction* wf = nullptr;
  rxpot_status st =
      rxpot_wavefunction_create(a.family.c_str(), a.A, a.B, a.nu, &wf);
  if (st != RXPOT_OK) return fail_with(st);
  double energy = 0.0;
  rxpot_wavefunction_energy(wf, &energy);

  std::printf("# E = %s\n", num(energy).c_str());
  std::printf("x,psi\n");
  for (int i = 0; i < a.n; ++i) {
    const double x =
        (a.n == 1) ? a.xmin : a.xmin + (a.xmax - a.xmin) * i / (a.n - 1);
    double psi = 0.0;
    st = rxpot_wavefunction_eval(wf, x, &psi);
    if (st != RXPOT_OK) {
      rxpot_wavefunction_free(wf);
      return fail_with(st);
    }
    std::printf("%s,%s\n", num(x).c_str(), num(psi).c_str());
  }
  rxpot_wavefunction_free(wf);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rationally extended potential toolkit"};
  app.require_subcommand(1);

  PotentialArgs pa;
  auto* cp = app.add_subcommand("potential", "sample a family potential");
  cp->add_option("--family", pa.family, "family name")->required();
  cp->add_option("--A", pa.A, "coupling A")->required();
  cp->add_option("--B", pa.B, "coupling B")->required();
  cp->add_option("--xmin", pa.xmin, "first sample point")->required();
  cp->add_option("--xmax", pa.xmax, "last sample point")->required();
  cp->add_option("--n", pa.n, "sample count")->required();
  cp->add_option("--format", pa.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  SpectrumArgs sa;
  auto* cs = app.add_subcommand("spectrum",
                                "finite-difference spectrum, real families");
  cs->add_option("--family", sa.family, "family name")->required();
  cs->add_option("--A", sa.A, "coupling A")->required();
  cs->add_option("--B", sa.B, "coupling B")->required();
  cs->add_option("--grid-n", sa.grid_n, "grid node count");
  cs->add_option("--k", sa.k, "number of eigenvalues")->required();
  cs->add_option("--tol", sa.tol, "comparison tolerance");
  cs->add_option("--versus", sa.versus,
                 "compare against another family's spectrum");

  VerifyArgs va;
  auto* cv = app.add_subcommand("verify", "run an invariant suite");
  cv->add_option("--suite", va.suite,
                 "partner, intertwine, ssusy, ortho, pt-polefree or all");
  cv->add_option("--A", va.A, "coupling A");
  cv->add_option("--B", va.B, "coupling B");
  cv->add_option("--path", va.path, "upper or lower")
      ->check(CLI::IsMember({"upper", "lower"}));

  WavefunctionArgs wa;
  auto* cw = app.add_subcommand("wavefunction", "sample a closed-form state");
  cw->add_option("--family", wa.family, "gpt or gpt-ext")->required();
  cw->add_option("--A", wa.A, "coupling A")->required();
  cw->add_option("--B", wa.B, "coupling B")->required();
  cw->add_option("--nu", wa.nu, "bound-state index")->required();
  cw->add_option("--xmin", wa.xmin, "first sample point")->required();
  cw->add_option("--xmax", wa.xmax, "last sample point")->required();
  cw->add_option("--n", wa.n, "sample count")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*cp) return run_potential(pa);
  if (*cs) return run_spectrum(sa);
  if (*cv) return run_verify(va);
  if (*cw) return run_wavefunction(wa);
  return 2;
}
