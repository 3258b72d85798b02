#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symq/phis.hpp"

#include <cmath>

using namespace symq;

TEST_CASE("caratheodory preset") {
    const PhiSpec p = make_phi_caratheodory();
    CHECK(p.E1 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(p.E2 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(p.E3 == doctest::Approx(2.0).epsilon(1e-14));
    REQUIRE(p.full_series.has_value());
    for (int i = 1; i <= p.full_series->order(); ++i)
        CHECK(std::abs((*p.full_series)[i] - 2.0) < 1e-12);
}

TEST_CASE("janowski preset") {
    for (double A : {1.0, 0.5, 0.25}) {
        for (double B : {-1.0, -0.5, 0.0}) {
            if (!(B < A)) continue;
            const PhiSpec p = make_phi_janowski(A, B);
            CHECK(p.E1 == doctest::Approx((A - B)).epsilon(1e-12));
            CHECK(p.E2 == doctest::Approx(-B * (A - B)).epsilon(1e-12));
            CHECK(p.E3 == doctest::Approx(B * B * (A - B)).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(make_phi_janowski(0.5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(make_phi_janowski(0.2, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(make_phi_janowski(1.5, 0.0), std::invalid_argument);
}

TEST_CASE("janowski(1,-1) coincides with caratheodory") {
    const PhiSpec j = make_phi_janowski(1.0, -1.0);
    const PhiSpec c = make_phi_caratheodory();
    CHECK(std::abs(j.E1 - c.E1) < 1e-12);
    CHECK(std::abs(j.E2 - c.E2) < 1e-12);
    CHECK(std::abs(j.E3 - c.E3) < 1e-12);
}

TEST_CASE("crescent preset") {
    const PhiSpec p = make_phi_crescent();
    CHECK(p.E1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.E2 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(p.E3) < 1e-12);
    REQUIRE(p.full_series.has_value());
    CHECK(std::abs((*p.full_series)[4] + 0.125) < 1e-12);
}

TEST_CASE("custom preset") {
    const PhiSpec p = make_phi_custom(1.5, -0.3, 0.2);
    CHECK(p.E1 == 1.5);
    CHECK(p.E2 == -0.3);
    CHECK(p.E3 == 0.2);
    CHECK(!p.full_series.has_value());
    CHECK_THROWS_AS(make_phi_custom(0.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_phi_custom(-1.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("series evaluation matches closed forms at z = 0.1") {
    const double z = 0.1;
    // order 12 puts the truncation tail below the 1e-9 tolerance
    {
        const PhiSpec p = make_phi_caratheodory(12);
        const cplx v = evaluate(*p.full_series, z);
        CHECK(std::abs(v - (1.0 + z) / (1.0 - z)) < 1e-9);
    }
    {
        const PhiSpec p = make_phi_janowski(0.5, -0.25, 12);
        const cplx v = evaluate(*p.full_series, z);
        CHECK(std::abs(v - (1.0 + 0.5 * z) / (1.0 - 0.25 * z)) < 1e-9);
    }
    {
        const PhiSpec p = make_phi_crescent(12);
        const cplx v = evaluate(*p.full_series, z);
        CHECK(std::abs(v - (z + std::sqrt(1.0 + z * z))) < 1e-9);
    }
}

TEST_CASE("parse_phi grammar") {
    CHECK(parse_phi("caratheodory").label == "caratheodory");
    CHECK(parse_phi("crescent").label == "crescent");

    const PhiSpec j = parse_phi("janowski:0.5,-0.5");
    CHECK(j.E1 == doctest::Approx(1.0).epsilon(1e-12));

    const PhiSpec c = parse_phi("custom:1,0.5,0.25");
    CHECK(c.E1 == 1.0);
    CHECK(c.E2 == 0.5);
    CHECK(c.E3 == 0.25);

    CHECK_THROWS_AS(parse_phi("nope"), std::invalid_argument);
    CHECK_THROWS_AS(parse_phi("janowski:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_phi("custom:1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_phi("custom:a,b,c"), std::invalid_argument);
}
