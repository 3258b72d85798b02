#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symq/verify.hpp"

#include <chrono>
#include <cmath>

using namespace symq;

namespace {

ClassParams special(double q, double lambda) {
    ClassParams p;
    p.q = q;
    p.lambda = lambda;
    p.mu = 1.0;
    p.bernardi_enabled = false;
    return p;
}

} // namespace

TEST_CASE("draw_sample is deterministic and in-box") {
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const GSSample a = draw_sample(7, i);
        const GSSample b = draw_sample(7, i);
        CHECK(a.c1 == b.c1);
        CHECK(a.x == b.x);
        CHECK(a.y == b.y);
        CHECK(a.sigma == b.sigma);
        CHECK(a.tau == b.tau);
        CHECK(a.c1 >= 0.0);
        CHECK(a.c1 <= 2.0);
        CHECK(std::abs(a.x) <= 1.0);
        CHECK(std::abs(a.y) <= 1.0);
        CHECK(std::abs(a.sigma) <= 1.0);
        CHECK(std::abs(a.tau) <= 1.0);
    }
    const GSSample c = draw_sample(8, 0);
    const GSSample d = draw_sample(7, 0);
    CHECK(c.c1 != d.c1);
}

TEST_CASE("extract_PQR matches thm1_parts on the grid") {
    for (double lam : {1.0, 1.5, 2.0, 3.0}) {
        for (double q : {0.3, 0.6, 0.9}) {
            for (const PhiSpec& phi : {make_phi_caratheodory(), make_phi_crescent(),
                                       make_phi_janowski(0.5, -0.5)}) {
                const auto pqr = extract_PQR(lam, q, phi);
                const HankelBoundParts p = thm1_parts(lam, q, phi, Variant::proof);
                CHECK(std::abs(pqr[0] - p.P) < 1e-9);
                CHECK(std::abs(pqr[1] - p.Q) < 1e-9);
                CHECK(std::abs(pqr[2] - p.R) < 1e-9);
            }
        }
    }
}

TEST_CASE("extract_PQR classical anchor") {
    const auto pqr = extract_PQR(1.0, 0.9999999, make_phi_caratheodory());
    CHECK(std::abs(pqr[0] + 3.0 / 128.0) < 1e-3);
    CHECK(std::abs(pqr[1] - 3.0 / 32.0) < 1e-3);
    CHECK(std::abs(pqr[2] - 1.0) < 1e-3);
}

TEST_CASE("g_of_c composition") {
    const FParts f = f_parts(1.5, 0.7, make_phi_caratheodory(), 1.3);
    CHECK(std::abs(g_of_c(1.5, 0.7, make_phi_caratheodory(), 1.3) -
                   (f.F1 + 2.0 * f.F2 + 2.0 * f.F3 + 4.0 * f.F4)) < 1e-15);
}

TEST_CASE("pi maximum sits at the (1,1) corner") {
    const PhiSpec phi = make_phi_caratheodory();
    {
        const PiMaxReport r = pi_maximum_check(1.0, 0.8, phi, 0.0);
        CHECK(r.max_at_corner);
        const FParts f = f_parts(1.0, 0.8, phi, 0.0);
        CHECK(std::abs(r.value_at_11 - 4.0 * f.F4) < 1e-12);
    }
    {
        const PiMaxReport r = pi_maximum_check(1.0, 0.8, phi, 2.0);
        CHECK(r.max_at_corner);
        const FParts f = f_parts(1.0, 0.8, phi, 2.0);
        CHECK(std::abs(f.F2) < 1e-12);
        CHECK(std::abs(f.F3) < 1e-12);
        CHECK(std::abs(r.value_at_11 - (f.F1 + 4.0 * f.F4)) < 1e-12);
    }
    for (double c : {0.5, 1.0, 1.5}) {
        CHECK(pi_maximum_check(2.0, 0.6, phi, c).max_at_corner);
    }
}

TEST_CASE("sup_hankel stays under the bound and reproduces bit-identically") {
    const ClassParams p = special(0.9, 1.0);
    const PhiSpec phi = make_phi_caratheodory();
    const BoundReport a = sup_hankel(p, phi, 3000, 42);
    const BoundReport b = sup_hankel(p, phi, 3000, 42);
    CHECK(a.violations.empty());
    CHECK(a.gap >= -1e-9);
    CHECK(a.sampled_sup == b.sampled_sup);
    CHECK(a.to_json() == b.to_json());
    CHECK(a.sampled_sup <= a.closed_form + 1e-9);
    // refinement never loses to the raw draw of any single sample
    double raw_best = 0.0;
    for (std::uint64_t i = 0; i < 3000; ++i)
        raw_best = std::max(raw_best,
                            std::abs(hankel_expression(phi, p, draw_sample(42, i))));
    CHECK(a.sampled_sup >= raw_best);
}

TEST_CASE("sup_hankel degenerate sub-box c1 = 2") {
    const ClassParams p = special(0.8, 1.5);
    const PhiSpec phi = make_phi_caratheodory();
    GSSample forced;
    forced.c1 = 2.0;
    const double at_forced = std::abs(hankel_expression(phi, p, forced));
    GSSample vary = forced;
    vary.x = cplx(0.3, -0.4);
    vary.y = cplx(-0.7, 0.1);
    vary.sigma = cplx(0.2, 0.6);
    vary.tau = cplx(-0.5, -0.3);
    // every x, y, sigma, tau occurrence carries a (4 - c1^2) factor
    CHECK(std::abs(std::abs(hankel_expression(phi, p, vary)) - at_forced) < 1e-12);
}

TEST_CASE("sup_hankel rejects the general class") {
    ClassParams p;
    p.mu = 0.5;
    CHECK_THROWS_AS(sup_hankel(p, make_phi_caratheodory(), 10, 1), std::invalid_argument);
}

TEST_CASE("sup_fekete at rho = 1 meets the single-term bound") {
    const ClassParams p = special(0.9, 1.0);
    const PhiSpec phi = make_phi_caratheodory();
    const BoundReport r = sup_fekete(p, phi, 1.0, 20000, 17);
    CHECK(r.violations.empty());
    const double q3 = sym_q_number(3, 0.9);
    CHECK(std::abs(r.closed_form - phi.E1 / (p.lambda * q3 - 1.0)) < 1e-12);
    // |c2 - d2| reaches 4 at c1=0, x=1, y=-1, so the bound is tight
    CHECK(r.gap < 1e-3);
}

TEST_CASE("sup_fekete classical rho = 0 anchor") {
    const ClassParams p = special(0.9999999, 1.0);
    const PhiSpec phi = make_phi_caratheodory();
    const BoundReport r0 = sup_fekete(p, phi, 0.0, 20000, 17);
    CHECK(r0.violations.empty());
    CHECK(r0.has_rho);
    CHECK(r0.rho == 0.0);
    CHECK(std::abs(r0.closed_form - 1.0) < 1e-3);
    CHECK(r0.sampled_sup <= r0.closed_form + 1e-9);
}

TEST_CASE("sup_a2_a3 entries stay under their printed bounds") {
    const ClassParams p = special(0.9, 1.0);
    const PhiSpec phi = make_phi_caratheodory();
    const auto reports = sup_a2_a3(p, phi, 20000, 23);
    CHECK(reports.size() == 5);
    for (const auto& r : reports) {
        CAPTURE(r.theorem);
        CHECK(r.violations.empty());
        CHECK(r.sampled_sup <= r.closed_form + 1e-9);
    }
}

TEST_CASE("report serialization shapes") {
    const ClassParams p = special(0.9, 1.0);
    const BoundReport r = sup_hankel(p, make_phi_caratheodory(), 500, 3);
    const std::string j = r.to_json();
    CHECK(j.find("\"schema\":1") != std::string::npos);
    CHECK(j.find("\"theorem\":\"hankel2\"") != std::string::npos);
    CHECK(j.find("\"violations\":[]") != std::string::npos);
    const std::string row = r.to_csv_row();
    size_t commas = 0;
    for (char c : row) commas += (c == ',');
    size_t header_commas = 0;
    for (char c : BoundReport::csv_header()) header_commas += (c == ',');
    CHECK(commas == header_commas);
}

TEST_CASE("consistency suite passes, ledger populated, seed-stable") {
    const auto t0 = std::chrono::steady_clock::now();
    const ConsistencyReport a = consistency_suite(1);
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(secs < 60.0);
    for (const auto& c : a.checks) {
        CAPTURE(c.name);
        CAPTURE(c.worst);
        CHECK(c.pass);
    }
    CHECK(a.all_pass());
    CHECK(!a.ledger.empty());

    const ConsistencyReport b = consistency_suite(2);
    CHECK(b.all_pass() == a.all_pass());
    REQUIRE(b.checks.size() == a.checks.size());
    for (size_t i = 0; i < a.checks.size(); ++i) CHECK(a.checks[i].pass == b.checks[i].pass);

    auto has = [&](const std::string& id) {
        for (const auto& e : a.ledger)
            if (e.id == id) return true;
        return false;
    };
    CHECK(has("thm1-statement-P"));
    CHECK(has("thm1-statement-Q"));
    CHECK(has("thm1-statement-R"));
    CHECK(has("thm1-case-table"));
    CHECK(has("thm3-E1-power"));
    CHECK(has("cor4-upsilon-factor"));
    CHECK(has("eq2.9-a2a3-coefficient"));
    CHECK(a.to_json().find("\"ledger\":[") != std::string::npos);
}
