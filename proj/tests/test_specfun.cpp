#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "specfun.hpp"

using rxpot::specfun::jacobi_deriv;
using rxpot::specfun::jacobi_eval;
using rxpot::specfun::ln_gamma;
using rxpot::specfun::phat_deriv;
using rxpot::specfun::phat_eval;

TEST_CASE("jacobi degree 0 and 1 closed forms") {
    CHECK(jacobi_eval(0, 2.5, -6.4, 1.7) == 1.0);
    for (double z : {0.3, 1.2, 2.0, -0.8}) {
        double expect = (2.5 + 1.0) + (2.5 - 6.4 + 2.0) * (z - 1.0) / 2.0;
        CHECK(jacobi_eval(1, 2.5, -6.4, z) == doctest::Approx(expect).epsilon(1e-14));
    }
}

TEST_CASE("jacobi constant degenerate case (1,-5) degree 3") {
    // The explicit sum collapses to the constant 4 for these parameters.
    for (double z : {1.05, 1.2, 1.9, 3.0, 7.5}) {
        CHECK(jacobi_eval(3, 1.0, -5.0, z) == doctest::Approx(4.0).epsilon(1e-12));
    }
}

TEST_CASE("jacobi recurrence agrees with explicit sum") {
    const std::vector<std::pair<double, double>> params = {
        {1.0, -5.0}, {2.5, -6.4}, {0.7, -3.2}, {1.5, -1.5}, {3.0, 2.0}};
    for (auto [alpha, beta] : params) {
        for (int n = 0; n <= 8; ++n) {
            for (double z : {1.1, 1.5, 2.0, 3.5, 5.0}) {
                double got = jacobi_eval(n, alpha, beta, z);
                double ref = oracle::jacobi_sum(n, alpha, beta, z);
                double scale = std::max(1.0, std::abs(ref));
                CHECK(std::abs(got - ref) / scale <= 1e-10);
            }
        }
    }
}

TEST_CASE("jacobi derivative matches finite differences") {
    for (auto [alpha, beta] : std::vector<std::pair<double, double>>{
             {1.0, -5.0}, {2.5, -6.4}, {0.7, -3.2}}) {
        for (int n : {1, 2, 4, 6}) {
            for (double z : {1.2, 1.8, 2.6}) {
                auto f = [&](double t) { return jacobi_eval(n, alpha, beta, t); };
                double got = jacobi_deriv(n, alpha, beta, z);
                double ref = oracle::fd_derivative(f, z);
                CHECK(got == doctest::Approx(ref).epsilon(1e-7));
            }
        }
    }
}

TEST_CASE("phat degree one closed form at (1,-5)") {
    // b = 2/3 and the nu = 0 case reduces to -z/2 + 1/6.
    for (double z : {0.5, 1.3, 2.0, 4.0}) {
        CHECK(phat_eval(0, 1.0, -5.0, z) ==
              doctest::Approx(-z / 2.0 + 1.0 / 6.0).epsilon(1e-14));
    }
    double b = (-5.0 + 1.0) / (-5.0 - 1.0);
    CHECK(phat_eval(0, 1.0, -5.0, b) ==
          doctest::Approx(b / (1.0 - 5.0)).epsilon(1e-14));
}

TEST_CASE("phat degree two value at (1,-5)") {
    CHECK(phat_eval(1, 1.0, -5.0, 1.3) == doctest::Approx(-0.605).epsilon(1e-13));
}

TEST_CASE("phat is a polynomial of degree nu+1") {
    for (auto [alpha, beta] : std::vector<std::pair<double, double>>{
             {2.5, -6.4}, {0.7, -3.2}}) {
        for (int nu : {0, 1, 2, 3, 4}) {
            int deg = nu + 1;
            std::vector<double> xs, ys;
            for (int i = 0; i <= deg + 1; ++i) {
                double x = 1.1 + 0.4 * i;
                xs.push_back(x);
                ys.push_back(phat_eval(nu, alpha, beta, x));
            }
            auto dd = oracle::divided_differences(xs, ys);
            // Order deg+1 difference of a degree-deg polynomial vanishes.
            CHECK(std::abs(dd.back()) <= 1e-9);
        }
    }
}

TEST_CASE("phat derivative matches finite differences") {
    for (int nu : {0, 1, 3}) {
        for (double z : {1.2, 2.4}) {
            auto f = [&](double t) { return phat_eval(nu, 2.5, -6.4, t); };
            CHECK(phat_deriv(nu, 2.5, -6.4, z) ==
                  doctest::Approx(oracle::fd_derivative(f, z)).epsilon(1e-8));
        }
    }
}

TEST_CASE("phat rejects unusable parameters") {
    CHECK_THROWS_AS(phat_eval(0, 2.0, 2.0, 1.5), std::invalid_argument);
    // alpha + beta + 2 nu == 0 leaves the correction term undefined.
    CHECK_THROWS_AS(phat_eval(2, 1.0, -5.0, 1.5), std::invalid_argument);
}

TEST_CASE("ln_gamma on the positive axis") {
    CHECK(ln_gamma(4.0) == doctest::Approx(std::log(6.0)).epsilon(1e-15));
    CHECK(ln_gamma(0.5) == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-15));
    CHECK(ln_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK_THROWS_AS(ln_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(ln_gamma(-2.5), std::domain_error);
}
