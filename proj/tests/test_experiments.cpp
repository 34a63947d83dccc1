#include <cmath>

#include "doctest.h"
#include "hslab/errors.hpp"
#include "hslab/experiments.hpp"
#include "hslab/params.hpp"
#include "hslab/rng.hpp"

using namespace hslab;

TEST_SUITE("experiments") {

TEST_CASE("diagonal squeeze attains the quadratic exponent") {
    Params P = make_params(4, 1.5, 0.5);
    ScalingTable t = sharpness_diag(P, {8, 16, 32, 64});
    REQUIRE(t.rows.size() == 4);
    CHECK(t.gamma == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(t.deficit_fit.slope == doctest::Approx(2.0).epsilon(0.05));
    CHECK(t.distance_fit.slope == doctest::Approx(1.0).epsilon(0.1));
    CHECK(t.deficit_fit.r_squared > 0.99);
    CHECK(t.distance_fit.r_squared > 0.99);
    for (const auto& r : t.rows) {
        CHECK(r.deficit > 0.0);
        CHECK(r.distance > 0.0);
        CHECK(r.quotient ==
              doctest::Approx(r.deficit / std::pow(r.distance, t.gamma))
                  .epsilon(1e-12));
    }
}

TEST_CASE("far bump attains the p-th power exponent") {
    Params P = make_params(5, 2.5, 1.0);
    ScalingTable t = sharpness_bump(P, 40.0, {0.1, 0.05, 0.025, 0.0125});
    REQUIRE(t.rows.size() == 4);
    CHECK(t.gamma == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(t.deficit_fit.slope == doctest::Approx(2.5).epsilon(0.02));
    CHECK(t.distance_fit.slope == doctest::Approx(1.0).epsilon(0.05));
    CHECK(t.deficit_fit.r_squared > 0.99);
    CHECK(t.distance_fit.r_squared > 0.99);
}

TEST_CASE("scaling experiments guard their regimes") {
    CHECK_THROWS_AS(sharpness_diag(make_params(5, 2.5, 1.0), {8, 16}),
                    RegimeError);
    CHECK_THROWS_AS(sharpness_diag(make_params(5, 2.0, 1.0), {8, 16}),
                    RegimeError);
    CHECK_THROWS_AS(sharpness_bump(make_params(4, 1.5, 0.5), 40.0, {0.1, 0.05}),
                    RegimeError);
    CHECK_THROWS_AS(sharpness_diag(make_params(4, 1.5, 0.5), {8}), DomainError);
    CHECK_THROWS_AS(sharpness_diag(make_params(4, 1.5, 0.5), {1, 2}),
                    DomainError);
    CHECK_THROWS_AS(sharpness_bump(make_params(5, 2.5, 1.0), 40.0, {0.1}),
                    DomainError);
}

TEST_CASE("stability sampling reproduces its frozen value") {
    Params P = make_params(5, 2.0, 1.0);
    StabilityReport rep = stability_sample(P, 20, 42);
    CHECK(rep.empirical_B == 0.87381520859431638);
    CHECK(rep.n_kept == 20);
    CHECK(rep.n_rejected == 0);
    CHECK(rep.gamma == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("stability sampling away from the quadratic case") {
    Params P = make_params(3, 1.5, 0.45);
    StabilityReport rep = stability_sample(P, 20, 42);
    CHECK(rep.empirical_B == 0.14124737676928537);
    CHECK(rep.n_kept == 20);
}

TEST_CASE("samples are seeded per index and internally consistent") {
    Params P = make_params(5, 2.0, 1.0);
    StabilityReport rep = stability_sample(P, 12, 42);
    for (const auto& s : rep.samples) {
        CHECK(s.sample_seed ==
              derive_seed(42, static_cast<std::uint64_t>(s.index)));
        CHECK(s.c >= 0.5);
        CHECK(s.c <= 2.0);
        CHECK(s.lambda >= 0.25);
        CHECK(s.lambda <= 4.0);
        CHECK(s.t_ratio >= 0.03);
        CHECK(s.t_ratio <= 0.25);
        CHECK(s.distance > 0.0);
        if (s.kept) {
            CHECK(s.quotient ==
                  doctest::Approx(s.deficit / std::pow(s.distance, rep.gamma))
                      .epsilon(1e-12));
            CHECK(s.quotient > 0.0);
        }
    }
}

TEST_CASE("sampling is thread-count invariant and prefix stable") {
    Params P = make_params(5, 2.0, 1.0);
    StabilityReport serial = stability_sample(P, 12, 42, "bumps6", 1);
    StabilityReport threaded = stability_sample(P, 12, 42, "bumps6", 3);
    StabilityReport prefix = stability_sample(P, 6, 42);
    for (int i = 0; i < 12; ++i) {
        CHECK(serial.samples[i].distance == threaded.samples[i].distance);
        CHECK(serial.samples[i].deficit == threaded.samples[i].deficit);
    }
    for (int i = 0; i < 6; ++i)
        CHECK(serial.samples[i].distance == prefix.samples[i].distance);
    CHECK(serial.empirical_B == threaded.empirical_B);
}

TEST_CASE("unknown families and empty runs are rejected") {
    Params P = make_params(5, 2.0, 1.0);
    CHECK_THROWS_AS(stability_sample(P, 10, 42, "fourier"), DomainError);
    CHECK_THROWS_AS(stability_sample(P, 0, 42), DomainError);
}

}  // TEST_SUITE
