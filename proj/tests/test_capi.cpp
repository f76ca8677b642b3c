#include <cmath>
#include <cstring>
#include <string>

#include "doctest.h"
#include "rxpot.h"

TEST_CASE("potential handles") {
    rxpot_potential* p = nullptr;
    REQUIRE(rxpot_potential_create("gpt", 1.5, 3.0, &p) == RXPOT_OK);
    REQUIRE(p != nullptr);
    CHECK(rxpot_potential_is_complex(p) == 0);

    double lo = 0.0, hi = 0.0;
    CHECK(rxpot_potential_domain(p, &lo, &hi) == RXPOT_OK);
    CHECK(lo == 0.0);
    CHECK(hi == HUGE_VAL);

    double re = 0.0, im = 1.0;
    CHECK(rxpot_potential_eval(p, 1.0, &re, &im) == RXPOT_OK);
    CHECK(re == doctest::Approx(-4.175640152070832).epsilon(1e-13));
    CHECK(im == 0.0);

    CHECK(rxpot_potential_eval(p, -1.0, &re, &im) == RXPOT_ERR_DOMAIN);
    CHECK(std::strlen(rxpot_last_error()) > 0);
    rxpot_potential_free(p);
}

TEST_CASE("complex families through the flat interface") {
    rxpot_potential* p = nullptr;
    REQUIRE(rxpot_potential_create("pt-scarf2-ext-i", 1.5, 3.0, &p) == RXPOT_OK);
    CHECK(rxpot_potential_is_complex(p) == 1);
    double re = 0.0, im = 0.0;
    CHECK(rxpot_potential_eval(p, 0.0, &re, &im) == RXPOT_OK);
    CHECK(re == doctest::Approx(-17.25).epsilon(1e-12));
    CHECK(std::abs(im) <= 1e-12);
    rxpot_potential_free(p);
}

TEST_CASE("creation rejects bad input with a message") {
    rxpot_potential* p = reinterpret_cast<rxpot_potential*>(1);
    CHECK(rxpot_potential_create("no-such-family", 1.5, 3.0, &p) ==
          RXPOT_ERR_INVALID_ARGUMENT);
    CHECK(rxpot_potential_create("gpt", 3.0, 2.0, &p) ==
          RXPOT_ERR_INVALID_ARGUMENT);
    std::string msg = rxpot_last_error();
    CHECK(msg.find("gpt") != std::string::npos);
    CHECK(rxpot_potential_create(nullptr, 1.5, 3.0, &p) ==
          RXPOT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("wavefunction handles") {
    rxpot_wavefunction* w = nullptr;
    REQUIRE(rxpot_wavefunction_create("gpt", 1.5, 3.0, 0, &w) == RXPOT_OK);
    double e = 0.0, psi = 0.0;
    CHECK(rxpot_wavefunction_energy(w, &e) == RXPOT_OK);
    CHECK(e == doctest::Approx(-2.25).epsilon(1e-15));
    CHECK(rxpot_wavefunction_eval(w, 1.0, &psi) == RXPOT_OK);
    CHECK(psi == doctest::Approx(0.7589681653596542).epsilon(1e-13));
    CHECK(rxpot_wavefunction_eval(w, 0.0, &psi) == RXPOT_ERR_DOMAIN);
    rxpot_wavefunction_free(w);

    REQUIRE(rxpot_wavefunction_create("gpt-ext", 1.5, 3.0, 0, &w) == RXPOT_OK);
    CHECK(rxpot_wavefunction_eval(w, 1.0, &psi) == RXPOT_OK);
    CHECK(psi == doctest::Approx(0.8282261526889763).epsilon(1e-13));
    rxpot_wavefunction_free(w);

    CHECK(rxpot_wavefunction_create("gpt", 1.5, 3.0, 7, &w) ==
          RXPOT_ERR_INVALID_ARGUMENT);
    CHECK(rxpot_wavefunction_create("scarf1", 4.0, 2.0, 0, &w) ==
          RXPOT_ERR_UNSUPPORTED);
}

TEST_CASE("exact levels and level counts") {
    double e = 0.0;
    CHECK(rxpot_gpt_energy(1.5, 1, &e) == RXPOT_OK);
    CHECK(e == doctest::Approx(-0.25).epsilon(1e-15));
    CHECK(rxpot_gpt_energy(1.5, 5, &e) == RXPOT_ERR_INVALID_ARGUMENT);

    int m = -1;
    CHECK(rxpot_nu_max(2.5, &m) == RXPOT_OK);
    CHECK(m == 2);
    CHECK(rxpot_nu_max(-1.0, &m) == RXPOT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("spectrum through the flat interface") {
    double vals[2] = {0.0, 0.0};
    REQUIRE(rxpot_spectrum("gpt", 1.5, 3.0, 4097, 2, vals) == RXPOT_OK);
    CHECK(std::abs(vals[0] - (-2.25)) <= 5e-4);
    CHECK(std::abs(vals[1] - (-0.25)) <= 5e-4);
    CHECK(rxpot_spectrum("pt-scarf2", 1.5, 3.0, 101, 1, vals) ==
          RXPOT_ERR_UNSUPPORTED);
    CHECK(rxpot_spectrum("gpt", 1.5, 3.0, 101, 1, nullptr) ==
          RXPOT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verification reports") {
    rxpot_report* r = nullptr;
    REQUIRE(rxpot_verify_run("partner", 1.5, 3.0, "upper", &r) == RXPOT_OK);
    CHECK(rxpot_report_pass(r) == 1);
    int n = rxpot_report_check_count(r);
    CHECK(n >= 8);
    bool found = false;
    for (int i = 0; i < n; ++i) {
        std::string name = rxpot_report_check_name(r, i);
        if (name == "upper/minus-matches-extension") found = true;
        double v = -1.0, tol = -1.0;
        CHECK(rxpot_report_check_value(r, i, &v) == RXPOT_OK);
        CHECK(rxpot_report_check_tol(r, i, &tol) == RXPOT_OK);
        CHECK(v >= 0.0);
        CHECK(v <= tol);
        CHECK(rxpot_report_check_pass(r, i) == 1);
    }
    CHECK(found);
    CHECK(rxpot_report_check_name(r, n) == nullptr);
    rxpot_report_free(r);

    CHECK(rxpot_verify_run("nope", 1.5, 3.0, "upper", &r) ==
          RXPOT_ERR_INVALID_ARGUMENT);
    CHECK(rxpot_verify_run("partner", 1.5, 3.0, "sideways", &r) ==
          RXPOT_ERR_INVALID_ARGUMENT);
}
