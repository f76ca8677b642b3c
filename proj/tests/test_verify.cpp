#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "verify.hpp"

using namespace rxpot;

namespace {

bool has_check(const SuiteReport& r, const std::string& name) {
    return std::any_of(r.checks.begin(), r.checks.end(),
                       [&](const CheckResult& c) { return c.name == name; });
}

}  // namespace

TEST_CASE("suite registry") {
    auto names = suite_names();
    for (const char* n :
         {"partner", "intertwine", "ssusy", "ortho", "pt-polefree", "all"}) {
        CHECK(std::find(names.begin(), names.end(), n) != names.end());
    }
    CHECK_THROWS_AS(run_suite("no-such-suite", 1.5, 3.0, Path::Upper),
                    std::invalid_argument);
}

TEST_CASE("partner suite passes at reference couplings") {
    auto r = run_suite("partner", 1.5, 3.0, Path::Upper);
    CHECK(r.pass);
    CHECK(has_check(r, "upper/plus-matches-shifted-well"));
    CHECK(has_check(r, "upper/minus-matches-extension"));
    CHECK(has_check(r, "lower/tilde-plus-matches-base"));
    CHECK(has_check(r, "lower/tilde-minus-matches-shifted-well"));
    for (const auto& c : r.checks) {
        INFO(c.name, " value ", c.value, " tol ", c.tol);
        CHECK(c.pass);
    }
}

TEST_CASE("intertwine suite reconstructs the extended states") {
    auto r = run_suite("intertwine", 1.5, 3.0, Path::Upper);
    CHECK(r.pass);
    CHECK(has_check(r, "reconstruct-nu0"));
    CHECK(has_check(r, "reconstruct-nu1"));
}

TEST_CASE("ssusy suite holds on both paths") {
    for (Path path : {Path::Upper, Path::Lower}) {
        auto r = run_suite("ssusy", 1.5, 3.0, path);
        INFO("path ", path == Path::Upper ? "upper" : "lower");
        CHECK(r.pass);
        CHECK(has_check(r, "cbar-value"));
        CHECK(has_check(r, "compose-annihilate"));
        CHECK(has_check(r, "hamiltonian-intertwine"));
        for (const auto& c : r.checks) {
            INFO(c.name, " value ", c.value, " tol ", c.tol);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("ortho suite passes and counts nodes") {
    auto r = run_suite("ortho", 1.5, 3.0, Path::Upper);
    CHECK(r.pass);
    CHECK(has_check(r, "extension-orthogonality"));
    CHECK(has_check(r, "node-count-nu1"));
}

TEST_CASE("pt suite sees no real-axis poles") {
    auto r = run_suite("pt-polefree", 1.5, 3.0, Path::Upper);
    CHECK(r.pass);
    CHECK(has_check(r, "ext-i/finite-on-axis"));
    CHECK(has_check(r, "ext-ii/pt-symmetry"));
    CHECK(has_check(r, "base/pt-symmetry"));
}

TEST_CASE("aggregate suite prefixes and conjoins") {
    auto r = run_suite("all", 1.5, 3.0, Path::Upper);
    CHECK(r.pass);
    CHECK(has_check(r, "partner/upper/plus-matches-shifted-well"));
    CHECK(has_check(r, "ssusy/cbar-value"));
    CHECK(has_check(r, "ortho/base-norms"));
    CHECK(has_check(r, "pt-polefree/base/pt-symmetry"));
    CHECK(r.checks.size() >= 20);
}

TEST_CASE("inadmissible couplings are rejected") {
    CHECK_THROWS_AS(run_suite("partner", 3.0, 2.0, Path::Upper),
                    std::invalid_argument);
}
