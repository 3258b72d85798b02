#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symq/pseries.hpp"
#include "symq/qkernel.hpp"

#include <cmath>
#include <random>

using namespace symq;

namespace {

TruncatedSeries random_series(std::mt19937_64& rng, int order) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    TruncatedSeries f(order);
    for (int i = 0; i <= order; ++i) f.set(i, cplx(u(rng), u(rng)) * 0.5);
    return f;
}

double dist(const TruncatedSeries& a, const TruncatedSeries& b) {
    double worst = 0.0;
    const int n = std::min(a.order(), b.order());
    for (int i = 0; i <= n; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

} // namespace

TEST_CASE("ring op examples") {
    TruncatedSeries one_plus(2), one_minus(2);
    one_plus.set(0, 1.0);
    one_plus.set(1, 1.0);
    one_minus.set(0, 1.0);
    one_minus.set(1, -1.0);
    const TruncatedSeries prod = one_plus * one_minus;
    CHECK(std::abs(prod[0] - 1.0) < 1e-15);
    CHECK(std::abs(prod[1]) < 1e-15);
    CHECK(std::abs(prod[2] + 1.0) < 1e-15);

    TruncatedSeries one(3), geom_div(3);
    one.set(0, 1.0);
    geom_div.set(0, 1.0);
    geom_div.set(1, -1.0);
    const TruncatedSeries geom = one / geom_div;
    for (int i = 0; i <= 3; ++i) CHECK(std::abs(geom[i] - 1.0) < 1e-15);

    TruncatedSeries num(2), den(2);
    num.set(0, 1.0);
    num.set(1, 2.0);
    num.set(2, 1.0);
    den.set(0, 1.0);
    den.set(1, 1.0);
    const TruncatedSeries quot = num / den;
    CHECK(std::abs(quot[0] - 1.0) < 1e-15);
    CHECK(std::abs(quot[1] - 1.0) < 1e-15);
    CHECK(std::abs(quot[2]) < 1e-15);
}

TEST_CASE("division by zero constant term") {
    TruncatedSeries a(2), b(2);
    a.set(0, 1.0);
    b.set(1, 1.0);
    CHECK_THROWS_AS(a / b, std::domain_error);
}

TEST_CASE("ring axioms on random inputs") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        const auto a = random_series(rng, 6);
        const auto b = random_series(rng, 6);
        const auto c = random_series(rng, 6);
        CHECK(dist((a * b) * c, a * (b * c)) < 1e-12);
        CHECK(dist(a * (b + c), a * b + a * c) < 1e-12);
        if (std::abs(b[0]) > 0.3) CHECK(dist((a * b) / b, a) < 1e-12);
    }
}

TEST_CASE("compose examples") {
    std::mt19937_64 rng(11);
    auto f = random_series(rng, 5);
    f.set(0, 0.0);
    CHECK(dist(compose(TruncatedSeries::identity(5), f), f) < 1e-15);

    TruncatedSeries outer(2), inner(2);
    outer.set(0, 1.0);
    outer.set(1, 1.0);
    outer.set(2, 1.0);
    inner.set(1, 1.0);
    inner.set(2, 1.0);
    const TruncatedSeries comp = compose(outer, inner);
    CHECK(std::abs(comp[0] - 1.0) < 1e-15);
    CHECK(std::abs(comp[1] - 1.0) < 1e-15);
    CHECK(std::abs(comp[2] - 2.0) < 1e-15);

    auto bad = random_series(rng, 5);
    bad.set(0, 0.5);
    CHECK_THROWS_AS(compose(outer, bad), std::domain_error);
}

TEST_CASE("comp_inverse identity and closed-form coefficients") {
    CHECK(dist(comp_inverse(TruncatedSeries::identity(4)), TruncatedSeries::identity(4)) < 1e-15);

    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t = 0; t < 100; ++t) {
        const cplx a2(u(rng), u(rng)), a3(u(rng), u(rng)), a4(u(rng), u(rng));
        TruncatedSeries f(6);
        f.set(1, 1.0);
        f.set(2, a2);
        f.set(3, a3);
        f.set(4, a4);
        const TruncatedSeries g = comp_inverse(f);
        CHECK(std::abs(g[2] - (-a2)) < 1e-12);
        CHECK(std::abs(g[3] - (2.0 * a2 * a2 - a3)) < 1e-12);
        CHECK(std::abs(g[4] - (-(5.0 * a2 * a2 * a2 - 5.0 * a2 * a3 + a4))) < 1e-12);
        CHECK(dist(compose(f, g), TruncatedSeries::identity(6)) < 1e-10);
        CHECK(dist(compose(g, f), TruncatedSeries::identity(6)) < 1e-10);
    }

    auto bad = TruncatedSeries::identity(4);
    bad.set(1, 2.0);
    CHECK_THROWS_AS(comp_inverse(bad), std::domain_error);
}

TEST_CASE("pow_real examples") {
    TruncatedSeries f(3);
    f.set(0, 1.0);
    f.set(1, 1.0);
    const TruncatedSeries sq = pow_real(f, 2.0);
    CHECK(std::abs(sq[0] - 1.0) < 1e-12);
    CHECK(std::abs(sq[1] - 2.0) < 1e-12);
    CHECK(std::abs(sq[2] - 1.0) < 1e-12);
    CHECK(std::abs(sq[3]) < 1e-12);

    const TruncatedSeries half = pow_real(f, 0.5);
    CHECK(std::abs(half[1] - 0.5) < 1e-12);
    CHECK(std::abs(half[2] + 0.125) < 1e-12);
    CHECK(std::abs(half[3] - 0.0625) < 1e-12);

    const TruncatedSeries zero = pow_real(f, 0.0);
    CHECK(std::abs(zero[0] - 1.0) < 1e-15);
    for (int i = 1; i <= 3; ++i) CHECK(std::abs(zero[i]) < 1e-15);

    TruncatedSeries bad(3);
    bad.set(0, 2.0);
    CHECK_THROWS_AS(pow_real(bad, 0.5), std::domain_error);
}

TEST_CASE("pow_real additivity") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> ua(-3.0, 3.0);
    for (int t = 0; t < 100; ++t) {
        auto f = random_series(rng, 6);
        f.set(0, 1.0);
        const double al = ua(rng), be = ua(rng);
        CHECK(dist(pow_real(f, al + be), pow_real(f, al) * pow_real(f, be)) < 1e-10);
    }
}

TEST_CASE("pow_real integer alpha equals repeated multiplication") {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 20; ++t) {
        auto f = random_series(rng, 6);
        f.set(0, 1.0);
        const TruncatedSeries cube = f * f * f;
        CHECK(dist(pow_real(f, 3.0), cube) < 1e-12);
    }
}

TEST_CASE("sym_q_derivative monomials, limit, linearity") {
    const double q = 0.6;
    for (int n = 1; n <= 5; ++n) {
        TruncatedSeries mono(6);
        mono.set(n, 1.0);
        const TruncatedSeries d = sym_q_derivative(mono, q);
        for (int i = 0; i <= 5; ++i)
            CHECK(std::abs(d[i] - (i == n - 1 ? sym_q_number(n, q) : 0.0)) < 1e-15);
    }

    TruncatedSeries cub(3);
    cub.set(3, 1.0);
    const TruncatedSeries dcub = sym_q_derivative(cub, 1.0 - 1e-8);
    CHECK(std::abs(dcub[2] - 3.0) < 1e-6);

    std::mt19937_64 rng(23);
    for (int t = 0; t < 20; ++t) {
        const auto f = random_series(rng, 6);
        const auto g = random_series(rng, 6);
        CHECK(dist(sym_q_derivative(f + g, q), sym_q_derivative(f, q) + sym_q_derivative(g, q)) < 1e-12);
    }
}

TEST_CASE("sym_q_derivative matches the difference quotient") {
    std::mt19937_64 rng(29);
    const double q = 0.7;
    for (int t = 0; t < 5; ++t) {
        const auto f = random_series(rng, 6);
        const auto d = sym_q_derivative(f, q);
        for (int k = 0; k < 20; ++k) {
            const cplx z = std::polar(0.05 + 0.25 * k / 19.0, 0.37 * k);
            const cplx fd = (evaluate(f, q * z) - evaluate(f, z / q)) / ((q - 1.0 / q) * z);
            CHECK(std::abs(fd - evaluate(d, z)) < 1e-9);
        }
    }
}

TEST_CASE("odd_part examples") {
    TruncatedSeries f(3);
    f.set(1, 1.0);
    f.set(2, cplx(0.3, 0.1));
    f.set(3, cplx(-0.2, 0.4));
    const TruncatedSeries o = odd_part(f);
    CHECK(std::abs(o[0]) == 0.0);
    CHECK(std::abs(o[1] - 2.0) < 1e-15);
    CHECK(std::abs(o[2]) == 0.0);
    CHECK(std::abs(o[3] - 2.0 * f[3]) < 1e-15);

    TruncatedSeries even(4);
    even.set(0, 1.0);
    even.set(2, 2.0);
    even.set(4, -1.0);
    const TruncatedSeries oe = odd_part(even);
    for (int i = 0; i <= 4; ++i) CHECK(std::abs(oe[i]) == 0.0);

    TruncatedSeries geom(4);
    for (int i = 1; i <= 4; ++i) geom.set(i, 1.0);  // z/(1-z)
    const TruncatedSeries og = odd_part(geom);
    CHECK(std::abs(og[1] - 2.0) < 1e-15);
    CHECK(std::abs(og[2]) == 0.0);
    CHECK(std::abs(og[3] - 2.0) < 1e-15);
}

TEST_CASE("order bookkeeping and shifts") {
    TruncatedSeries a(6), b(4);
    a.set(0, 1.0);
    b.set(0, 1.0);
    CHECK((a * b).order() == 4);
    CHECK((a + b).order() == 4);

    TruncatedSeries f(3);
    f.set(1, 2.0);
    f.set(3, -1.0);
    const TruncatedSeries up = f.shifted_up();
    CHECK(up.order() == 4);
    CHECK(std::abs(up[2] - 2.0) < 1e-15);
    CHECK(std::abs(up[4] + 1.0) < 1e-15);
    const TruncatedSeries down = up.shifted_down();
    CHECK(dist(down, f) == 0.0);

    TruncatedSeries bad(2);
    bad.set(0, 1.0);
    CHECK_THROWS_AS(bad.shifted_down(), std::invalid_argument);
}

TEST_CASE("json emission shape") {
    TruncatedSeries f(1);
    f.set(0, cplx(1.0, 0.0));
    f.set(1, cplx(0.5, -0.25));
    CHECK(f.to_json() == "[[1,0],[0.5,-0.25]]");
}
