#include <cmath>
#include <string>

#include "doctest.h"
#include "hslab/errors.hpp"
#include "hslab/params.hpp"
#include "hslab/verify.hpp"

using namespace hslab;

namespace {

double detail(const IneqReport& rep, const std::string& key) {
    for (const auto& [k, v] : rep.details)
        if (k == key) return v;
    FAIL("missing detail: ", key);
    return 0.0;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("vector expansion holds on both sides of the quadratic case") {
    for (double p : {1.5, 2.5}) {
        IneqReport rep = check_vector_expansion(p, 0.5, 20000, 1);
        CHECK(rep.passed);
        CHECK(rep.violations == 0);
        CHECK(rep.samples == 20000);
        CHECK(rep.estimated_constant > 0.0);
        CHECK(rep.estimated_constant < 1.0);
    }
}

TEST_CASE("at p = 2 the vector remainder constant is the discount itself") {
    IneqReport rep = check_vector_expansion(2.0, 0.5, 20000, 1);
    CHECK(rep.passed);
    CHECK(std::fabs(rep.estimated_constant - 0.5) < 1e-8);
}

TEST_CASE("scalar expansion on both sides of its exponent threshold") {
    Params low = make_params(4, 1.3, 0.5);
    CHECK(low.pstar < 2.0);
    IneqReport r1 = check_scalar_expansion(low, 0.5, 20000, 2);
    CHECK(r1.passed);
    CHECK(r1.violations == 0);
    CHECK(detail(r1, "pstar") == doctest::Approx(low.pstar).epsilon(1e-15));

    Params high = make_params(5, 2.0, 1.0);
    CHECK(high.pstar > 2.0);
    IneqReport r2 = check_scalar_expansion(high, 0.5, 20000, 2);
    CHECK(r2.passed);
    CHECK(r2.violations == 0);
}

TEST_CASE("weighted Hardy bound beats its claimed constant") {
    Params P = make_params(5, 2.0, 1.0);
    for (double xi : {1.0, 1.5, 2.0, 3.0}) {
        IneqReport rep = check_hardy_weighted(P, xi, 12);
        double claimed =
            xi > 1.0 ? (P.N - P.beta) * std::pow((xi - 1.0) * (P.p - P.beta) /
                                                     (P.p - 1.0),
                                                 P.p - 1.0)
                     : std::pow((P.N - P.beta) / P.p, P.p);
        CAPTURE(xi);
        CHECK(rep.passed);
        CHECK(rep.violations == 0);
        CHECK(detail(rep, "claimed_constant") ==
              doctest::Approx(claimed).epsilon(1e-12));
        CHECK(rep.estimated_constant >= claimed * (1.0 - 1e-6));
    }
}

TEST_CASE("pointwise envelope constant is modest") {
    Params P = make_params(4, 1.3, 0.5);
    IneqReport rep = check_pointwise_envelope(P, 0.3, 20000, 3);
    CHECK(rep.passed);
    CHECK(rep.violations == 0);
    CHECK(rep.estimated_constant > 1.0);
    CHECK(rep.estimated_constant < 3.0);
    CHECK(detail(rep, "undamped_constant") > 0.0);

    CHECK_THROWS_AS(check_pointwise_envelope(make_params(5, 2.5, 1.0), 0.3,
                                             100, 3),
                    RegimeError);
}

TEST_CASE("localized mass-by-energy control") {
    Params P = make_params(5, 2.0, 1.1);
    std::vector<double> rho = {0.2, 0.1, 0.05, 0.025};
    IneqReport rep = check_local_poincare(P, rho, 12);
    CHECK(rep.passed);
    CHECK(rep.estimated_constant > 0.0);
    double ball_fit = detail(rep, "ball_exponent_fit");
    CHECK(ball_fit > 0.2);
    double tail_fit = detail(rep, "tail_log_exponent_fit");
    CHECK(tail_fit > -2.3);
    CHECK(tail_fit < -1.7);
    CHECK(detail(rep, "tail_constant") > 0.0);
    CHECK(detail(rep, "tail_constant") < 2.0);

    // both restricted quotients shrink with the radius
    CHECK(detail(rep, "ball_quotient[rho=0.2]") >
          detail(rep, "ball_quotient[rho=0.025]"));
    CHECK(detail(rep, "tail_quotient[rho=0.2]") >
          detail(rep, "tail_quotient[rho=0.025]"));
}

TEST_CASE("degenerate-weight quotient stays bounded") {
    Params P = make_params(4, 1.3, 0.5);
    IneqReport rep = check_orlicz_quotient(P, {0.2, 0.1, 0.05}, 12);
    CHECK(rep.passed);
    CHECK(rep.violations == 0);
    CHECK(rep.estimated_constant > 0.0);
    CHECK(detail(rep, "spread") < 0.05);

    CHECK_THROWS_AS(check_orlicz_quotient(make_params(4, 2.0, 0.0),
                                          {0.2, 0.1}, 6),
                    RegimeError);
    CHECK_THROWS_AS(check_orlicz_quotient(make_params(5, 2.5, 1.0),
                                          {0.2, 0.1}, 6),
                    RegimeError);
}

TEST_CASE("the full suite passes and reruns identically") {
    auto reports = run_suite("all", 3000, 7);
    CHECK(reports.size() == 10);
    for (const auto& r : reports) {
        CAPTURE(r.name);
        CHECK(r.passed);
        CHECK_FALSE(r.name.empty());
    }
    auto again = run_suite("all", 3000, 7);
    REQUIRE(again.size() == reports.size());
    for (size_t i = 0; i < reports.size(); ++i) {
        CHECK(again[i].name == reports[i].name);
        CHECK(again[i].estimated_constant == reports[i].estimated_constant);
        CHECK(again[i].worst_margin == reports[i].worst_margin);
    }
}

TEST_CASE("parameter overrides skip out-of-range checks instead of failing") {
    Params P = make_params(5, 2.5, 1.0);
    auto reports = run_suite("all", 2000, 7, &P);
    CHECK(reports.size() == 8);
    int skipped = 0;
    for (const auto& r : reports) {
        CHECK(r.passed);
        if (r.note.rfind("skipped:", 0) == 0) ++skipped;
    }
    CHECK(skipped == 2);
}

TEST_CASE("unknown suites are rejected") {
    CHECK_THROWS_AS(run_suite("bogus", 1000, 7), DomainError);
}

}  // TEST_SUITE
