#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "potentials.hpp"
#include "specfun.hpp"
#include "susy.hpp"

using namespace rxpot;

namespace {

const C2Function kSine{[](double x) { return std::sin(x); },
                       [](double x) { return std::cos(x); },
                       [](double x) { return -std::sin(x); }};

}  // namespace

TEST_CASE("first-order ladder operators") {
    FirstOrderOp down{[](double x) { return x; }, OpDirection::Annihilate};
    FirstOrderOp up{[](double x) { return x; }, OpDirection::Create};
    C1Function f{kSine.f, kSine.df};
    for (double x : {0.3, 1.1, 2.0}) {
        CHECK(apply_first_order(down, f, x) ==
              doctest::Approx(std::cos(x) + x * std::sin(x)).epsilon(1e-14));
        CHECK(apply_first_order(up, f, x) ==
              doctest::Approx(-std::cos(x) + x * std::sin(x)).epsilon(1e-14));
    }
}

TEST_CASE("z-space operator closed form at (1,-5)") {
    for (double z : {0.5, 1.0, 1.8, 3.0}) {
        CHECK(apply_O(1.0, -5.0, 0, z) ==
              doctest::Approx(6.0 * z - 2.0).epsilon(1e-13));
    }
    CHECK(apply_O(1.0, -5.0, 0, 1.0) == doctest::Approx(4.0).epsilon(1e-13));
}

TEST_CASE("z-space operator produces the degree-raised polynomial") {
    for (auto [alpha, beta] : std::vector<std::pair<double, double>>{
             {1.0, -5.0}, {2.5, -6.4}, {0.7, -3.2}}) {
        for (int nu = 0; nu <= 5; ++nu) {
            if (std::abs(alpha + beta + 2 * nu) < 1e-9) continue;
            for (double z : {1.1, 1.7, 2.5, 4.0}) {
                double lhs = apply_O(alpha, beta, nu, z);
                double rhs = -2.0 * (alpha - beta) * (nu + alpha) *
                             specfun::phat_eval(nu, alpha, beta, z);
                CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)));
            }
        }
    }
}

TEST_CASE("gluing data of the hyperbolic chain") {
    const FamilyParams params{Family::Gpt, 1.5, 3.0};
    auto up = ssusy_data(params, Path::Upper);
    auto lo = ssusy_data(params, Path::Lower);
    CHECK(up.cbar == -6.0);
    CHECK(lo.cbar == 6.0);
    CHECK(up.p(1.0) == doctest::Approx(-0.6704601001090911).epsilon(1e-13));

    for (Path path : {Path::Upper, Path::Lower}) {
        auto d = ssusy_data(params, path);
        auto s = superpotential(params, path);
        auto st = tilde_superpotential(params, path);
        for (double x : {0.4, 1.0, 2.2, 4.5}) {
            CHECK(std::abs(d.p(x) - 0.5 * (s.W(x) + st.W(x))) <= 1e-12);
            CHECK(std::abs(d.pprime(x) - oracle::fd_derivative(d.p, x)) <= 1e-8);
            CHECK(std::abs(d.psecond(x) - oracle::fd_derivative(d.pprime, x)) <= 1e-7);
            // the constraint forces q = W W~ - W', the adjoint-side potential
            double qref = s.W(x) * st.W(x) - s.Wprime(x);
            CHECK(std::abs(d.q(x) - qref) <= 1e-9 * std::max(1.0, std::abs(qref)));
        }
    }
}

TEST_CASE("second-order operator equals the nested first-order pair") {
    const FamilyParams params{Family::Gpt, 1.5, 3.0};
    for (Path path : {Path::Upper, Path::Lower}) {
        auto d = ssusy_data(params, path);
        auto s = superpotential(params, path);
        auto st = tilde_superpotential(params, path);
        for (double x : {0.5, 1.3, 3.0}) {
            double f = kSine.f(x), df = kSine.df(x), d2f = kSine.d2f(x);
            double nested = d2f + (s.W(x) + st.W(x)) * df +
                            (st.Wprime(x) + s.W(x) * st.W(x)) * f;
            double nested_adj = d2f - (s.W(x) + st.W(x)) * df +
                                (s.W(x) * st.W(x) - s.Wprime(x)) * f;
            CHECK(apply_second_order(d, kSine, x) ==
                  doctest::Approx(nested).epsilon(1e-10));
            CHECK(apply_second_order(d, kSine, x, true) ==
                  doctest::Approx(nested_adj).epsilon(1e-10));
        }
    }
}

TEST_CASE("second-order partner potentials shift the closed forms") {
    const FamilyParams params{Family::Gpt, 1.5, 3.0};
    for (Path path : {Path::Upper, Path::Lower}) {
        auto d = ssusy_data(params, path);
        auto s = superpotential(params, path);
        auto st = tilde_superpotential(params, path);
        for (double x : {0.4, 1.0, 2.5}) {
            double v1 = potential_eval_real({Family::Gpt, 1.5, 3.0}, x) - st.E +
                        d.cbar / 2.0;
            double v2 = potential_eval_real({Family::GptExt, 1.5, 3.0}, x) - s.E -
                        d.cbar / 2.0;
            CHECK(second_order_potential(d, 1, x) ==
                  doctest::Approx(v1).epsilon(1e-9));
            CHECK(second_order_potential(d, 2, x) ==
                  doctest::Approx(v2).epsilon(1e-9));
        }
    }
}

TEST_CASE("gluing data rejects unusable input") {
    CHECK_THROWS_AS(ssusy_data({Family::Scarf1, 4.0, 2.0}, Path::Upper),
                    std::invalid_argument);
    CHECK_THROWS_AS(ssusy_data({Family::Gpt, 3.0, 2.0}, Path::Upper),
                    std::invalid_argument);
    auto d = ssusy_data({Family::Gpt, 1.5, 3.0}, Path::Upper);
    // p vanishes at the origin; the constraint blows up there
    CHECK_THROWS_AS(d.q(1e-8), std::domain_error);
    CHECK_THROWS_AS(second_order_potential(d, 3, 1.0), std::invalid_argument);
}
