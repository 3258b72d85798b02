#include "symq/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace symq {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct QNums {
    double q2, q3, q4;
};

QNums qnums(double q) {
    return {sym_q_number(2, q), sym_q_number(3, q), sym_q_number(4, q)};
}

double min_defined(std::initializer_list<double> vals) {
    double m = kNaN;
    for (double v : vals)
        if (!std::isnan(v) && (std::isnan(m) || v < m)) m = v;
    return m;
}

} // namespace

double quad_max(double P, double Q, double R) {
    double best = std::max(R, 16.0 * P + 4.0 * Q + R);
    if (P < 0.0) {
        const double t = -Q / (2.0 * P);
        if (t > 0.0 && t < 4.0) best = std::max(best, R - Q * Q / (4.0 * P));
    }
    return best;
}

double quad_max_case_table(double P, double Q, double R) {
    if (Q <= 0.0 && P <= -Q / 4.0) return R;
    if ((Q >= 0.0 && P >= -Q / 8.0) || (Q <= 0.0 && P >= -Q / 4.0)) return 16.0 * P + 4.0 * Q + R;
    if (Q >= 0.0 && P >= -Q / 8.0) return (4.0 * P * Q - Q * Q) / (4.0 * P);
    return kNaN;  // region the printed table does not cover
}

HankelBoundParts thm1_parts(double lambda, double q, const PhiSpec& phi, Variant variant) {
    if (!(lambda >= 1.0)) throw std::domain_error("thm1_parts: lambda must be >= 1");
    const auto [q2, q3, q4] = qnums(q);
    const double e1 = phi.E1, e2 = phi.E2, e3 = phi.E3;
    const double d3 = lambda * q3 - 1.0;
    HankelBoundParts out;
    out.variant = variant;
    if (variant == Variant::proof) {
        out.P = e1 / (96.0 * std::pow(lambda, 4) * std::pow(q2, 4) * q4) *
            (std::pow(e1, 3) * ((lambda - 1.0) * std::abs(lambda - 2.0) * std::pow(q2, 3) +
                                3.0 * (lambda - 1.0) * q2 * q3 + 6.0 * (q4 - q2)) +
             6.0 * (std::abs(e3) - e1 - std::abs(e2)) * lambda * lambda * std::pow(q2, 3) -
             3.0 * std::abs(5.0 - 4.0 * q4) * e1 * e1 * lambda * lambda * q2 * q2 / d3 +
             6.0 * e1 * std::pow(lambda, 4) * std::pow(q2, 4) * q4 / (d3 * d3));
        out.Q = e1 * (e1 + std::abs(e2)) / (4.0 * lambda * lambda * q2 * q4) +
            std::abs(5.0 - 4.0 * q4) * std::pow(e1, 3) / (8.0 * lambda * lambda * q2 * q2 * q4 * d3) -
            e1 * e1 / (2.0 * d3 * d3);
        out.R = e1 * e1 / (d3 * d3);
    } else {
        out.P = (6.0 * (std::abs(e1 - e2 + e3) - 2.0 * e1) * std::pow(lambda, 3) * std::pow(q2, 3) +
                 std::pow(e1, 3) * (lambda * (lambda - 1.0) * std::abs(lambda - 2.0) * std::pow(q2, 3) +
                                    3.0 * lambda * (lambda - 1.0) * q2 * q3 +
                                    6.0 * lambda * (q4 - q2) + 15.0 * (lambda - 1.0))) *
            e1 / (96.0 * std::pow(lambda, 5) * std::pow(q2, 4) * q4);
        out.Q = e1 * (5.0 * e1 + 2.0 * std::abs(2.0 * e1 - e2)) / (8.0 * lambda * lambda * q2 * q4) +
            5.0 * e1 * e1 / (4.0 * std::pow(lambda, 3) * q4 * q2 * q2 * d3) +
            std::pow(e1, 3) / (2.0 * lambda * lambda * (3.0 * q3 - 1.0) * q2);
        out.R = e1 * e1 / ((3.0 * lambda - 1.0) * (3.0 * lambda - 1.0));
    }
    return out;
}

double thm1_bound(double lambda, double q, const PhiSpec& phi) {
    const HankelBoundParts p = thm1_parts(lambda, q, phi, Variant::proof);
    return quad_max(p.P, p.Q, p.R);
}

ThetaOmega theta_omega(const ClassParams& params, const PhiSpec& phi) {
    params.validate();
    const auto [q2, q3, q4] = qnums(params.q);
    (void)q4;
    const double lam = params.lambda, mu = params.mu;
    const double l2 = bernardi_coeff(2, params), l3 = bernardi_coeff(3, params);
    const double m2 = mu - (mu - 1.0) * q2;
    const double m3 = mu - (mu - 1.0) * q3;
    const double m22 = mu - (mu - 1.0) * q2 * q2;
    const double e1 = phi.E1, e2 = phi.E2;
    ThetaOmega to;
    to.Omega = 2.0 * (lam * q3 - 1.0) * m3 * l3 +
               lam * (lam * m2 * m2 - m22) * q2 * q2 * l2 * l2;
    to.Theta = 2.0 * (lam * q3 - 1.0) * m3 * e1 * e1 * l3 +
               lam * (lam * m2 * m2 * (e1 * e1 + 2.0 * e1 - 2.0 * e2) - m22 * e1 * e1) *
                   q2 * q2 * l2 * l2;
    return to;
}

A2A3Bounds thm2_bounds(const ClassParams& params, const PhiSpec& phi) {
    params.validate();
    const auto [q2, q3, q4] = qnums(params.q);
    (void)q4;
    const double lam = params.lambda, mu = params.mu;
    const double l2 = bernardi_coeff(2, params), l3 = bernardi_coeff(3, params);
    const double m2 = mu - (mu - 1.0) * q2;
    const double m3 = mu - (mu - 1.0) * q3;
    const double e1 = phi.E1, e2 = phi.E2;

    A2A3Bounds out;
    out.to = theta_omega(params, phi);

    if (m2 * l2 == 0.0) {
        out.a2_entries[0] = kNaN;
        out.flags.push_back("division-degenerate: [mu-(mu-1)[2]]L2 = 0");
    } else {
        out.a2_entries[0] = e1 / (lam * std::abs(m2 * l2) * q2);
    }
    if (out.to.Omega == 0.0) {
        out.a2_entries[1] = kNaN;
        out.flags.push_back("Omega = 0: entry dropped");
    } else {
        out.a2_entries[1] = std::sqrt(2.0 * (std::abs(e2 - e1) + e1) / std::abs(out.to.Omega));
    }
    if (out.to.Theta == 0.0) {
        out.a2_entries[2] = kNaN;
        out.flags.push_back("Theta = 0: entry dropped");
    } else {
        out.a2_entries[2] = e1 * std::sqrt(2.0 * e1) / std::sqrt(std::abs(out.to.Theta));
    }
    out.a2_bound = min_defined({out.a2_entries[0], out.a2_entries[1], out.a2_entries[2]});

    if (m3 * l3 == 0.0) {
        out.a3_first_term = kNaN;
        out.flags.push_back("division-degenerate: [mu-(mu-1)[3]]L3 = 0");
    } else {
        out.a3_first_term = e1 / ((lam * q3 - 1.0) * std::abs(m3 * l3));
    }
    out.a3_entries[0] = (m2 * l2 == 0.0)
        ? kNaN
        : e1 * e1 / (lam * lam * m2 * m2 * q2 * q2 * l2 * l2);
    out.a3_entries[1] = (out.to.Omega == 0.0)
        ? kNaN
        : 2.0 * (std::abs(e2 - e1) + e1) / std::abs(out.to.Omega);
    out.a3_bound = out.a3_first_term + min_defined({out.a3_entries[0], out.a3_entries[1]});
    return out;
}

double thm3_bound(const ClassParams& params, const PhiSpec& phi, double rho) {
    params.validate();
    const ThetaOmega to = theta_omega(params, phi);
    if (to.Theta == 0.0)
        throw std::domain_error("thm3_bound: Theta = 0, bound undefined");
    const auto [q2, q3, q4] = qnums(params.q);
    (void)q2; (void)q4;
    const double lam = params.lambda, mu = params.mu;
    const double l3 = bernardi_coeff(3, params);
    const double m3 = mu - (mu - 1.0) * q3;
    const double e1 = phi.E1;
    const double cond = 2.0 * std::abs((1.0 - rho) * l3 * m3) * e1 * e1 * (lam * q3 - 1.0);
    if (cond <= std::abs(to.Theta))
        return e1 / ((lam * q3 - 1.0) * std::abs(m3 * l3));
    return 2.0 * std::abs(1.0 - rho) * std::pow(e1, 3) / std::abs(to.Theta);
}

namespace {

// Shared shape of the corollary displays; f3 multiplies the a3 first-term
// denominator ([3]_q for the mu = 0 class), p2 is the [2]_q power in the
// entry-1 denominators (1 for mu = 1, 2 for mu = 0).
A2A3Bounds corollary_bounds(const ClassParams& params, const PhiSpec& phi, double gamma,
                            double xi, double f3, int p2) {
    const auto [q2, q3, q4] = qnums(params.q);
    (void)q4;
    const double lam = params.lambda;
    const double l2 = bernardi_coeff(2, params), l3 = bernardi_coeff(3, params);
    const double e1 = phi.E1, e2 = phi.E2;
    const double q2p = std::pow(q2, p2);

    A2A3Bounds out;
    out.to.Omega = gamma;
    out.to.Theta = xi;
    out.a2_entries[0] = e1 / (lam * std::abs(l2) * q2p);
    out.a2_entries[1] = gamma == 0.0 ? kNaN : std::sqrt(2.0 * (std::abs(e2 - e1) + e1) / std::abs(gamma));
    out.a2_entries[2] = xi == 0.0 ? kNaN : e1 * std::sqrt(2.0 * e1) / std::sqrt(std::abs(xi));
    out.a2_bound = min_defined({out.a2_entries[0], out.a2_entries[1], out.a2_entries[2]});
    out.a3_first_term = e1 / ((lam * q3 - 1.0) * f3 * std::abs(l3));
    out.a3_entries[0] = e1 * e1 / (lam * lam * q2p * q2p * l2 * l2);
    out.a3_entries[1] = gamma == 0.0 ? kNaN : 2.0 * (std::abs(e2 - e1) + e1) / std::abs(gamma);
    out.a3_bound = out.a3_first_term + min_defined({out.a3_entries[0], out.a3_entries[1]});
    return out;
}

} // namespace

A2A3Bounds corollary1_bounds(const ClassParams& params, const PhiSpec& phi) {
    params.validate();
    const auto [q2, q3, q4] = qnums(params.q);
    (void)q4;
    const double lam = params.lambda;
    const double l2 = bernardi_coeff(2, params), l3 = bernardi_coeff(3, params);
    const double e1 = phi.E1, e2 = phi.E2;
    const double gamma = 2.0 * (lam * q3 - 1.0) * l3 + lam * (lam - 1.0) * q2 * q2 * l2 * l2;
    const double xi = 2.0 * (lam * q3 - 1.0) * e1 * e1 * l3 +
        lam * ((lam - 1.0) * e1 * e1 + 2.0 * lam * (e1 - e2)) * q2 * q2 * l2 * l2;
    return corollary_bounds(params, phi, gamma, xi, 1.0, 1);
}

A2A3Bounds corollary2_bounds(const ClassParams& params, const PhiSpec& phi) {
    params.validate();
    const auto [q2, q3, q4] = qnums(params.q);
    (void)q4;
    const double lam = params.lambda;
    const double l2 = bernardi_coeff(2, params), l3 = bernardi_coeff(3, params);
    const double e1 = phi.E1, e2 = phi.E2;
    const double psi = 2.0 * (lam * q3 - 1.0) * q3 * l3 +
        lam * (lam - 1.0) * std::pow(q2, 4) * l2 * l2;
    const double ups = 2.0 * (lam * q3 - 1.0) * q3 * e1 * e1 * l3 +
        lam * ((lam - 1.0) * e1 * e1 + 2.0 * lam * (e1 - e2)) * std::pow(q2, 4) * l2 * l2;
    return corollary_bounds(params, phi, psi, ups, q3, 2);
}

double corollary3_bound(const ClassParams& params, const PhiSpec& phi, double rho) {
    params.validate();
    const auto [q2, q3, q4] = qnums(params.q);
    (void)q2; (void)q4;
    const double lam = params.lambda;
    const double l3 = bernardi_coeff(3, params);
    const A2A3Bounds c1 = corollary1_bounds(params, phi);
    const double xi = c1.to.Theta;
    const double e1 = phi.E1;
    if (xi == 0.0) throw std::domain_error("corollary3_bound: Xi = 0, bound undefined");
    const double cond = 2.0 * std::abs((1.0 - rho) * l3) * e1 * e1 * (lam * q3 - 1.0);
    if (cond <= std::abs(xi)) return e1 / ((lam * q3 - 1.0) * std::abs(l3));
    return 2.0 * std::abs(1.0 - rho) * std::pow(e1, 3) / std::abs(xi);
}

double corollary4_bound(const ClassParams& params, const PhiSpec& phi, double rho) {
    params.validate();
    const auto [q2, q3, q4] = qnums(params.q);
    (void)q2; (void)q4;
    const double lam = params.lambda;
    const double l3 = bernardi_coeff(3, params);
    const double ups = upsilon_value(params, phi);
    const double e1 = phi.E1;
    if (ups == 0.0) throw std::domain_error("corollary4_bound: Upsilon = 0, bound undefined");
    const double cond = 2.0 * std::abs((1.0 - rho) * l3) * e1 * e1 * (lam * q3 - 1.0) * q3;
    if (cond <= std::abs(ups)) return e1 / ((lam * q3 - 1.0) * q3 * std::abs(l3));
    return 2.0 * std::abs(1.0 - rho) * std::pow(e1, 3) / std::abs(ups);
}

double corollary5_bound(const ClassParams& params, const PhiSpec& phi) {
    params.validate();
    const auto [q2, q3, q4] = qnums(params.q);
    (void)q2; (void)q4;
    const double m3 = params.mu - (params.mu - 1.0) * q3;
    const double l3 = bernardi_coeff(3, params);
    if (m3 * l3 == 0.0)
        throw std::domain_error("corollary5_bound: degenerate denominator");
    return phi.E1 / ((params.lambda * q3 - 1.0) * std::abs(m3 * l3));
}

double upsilon_value(const ClassParams& params, const PhiSpec& phi) {
    const auto [q2, q3, q4] = qnums(params.q);
    (void)q4;
    const double lam = params.lambda;
    const double l2 = bernardi_coeff(2, params), l3 = bernardi_coeff(3, params);
    return 2.0 * (lam * q3 - 1.0) * q3 * phi.E1 * phi.E1 * l3 +
        lam * ((lam - 1.0) * phi.E1 * phi.E1 + 2.0 * lam * (phi.E1 - phi.E2)) *
            std::pow(q2, 4) * l2 * l2;
}

double upsilon_printed(const ClassParams& params, const PhiSpec& phi) {
    const auto [q2, q3, q4] = qnums(params.q);
    (void)q4;
    const double lam = params.lambda;
    const double l2 = bernardi_coeff(2, params), l3 = bernardi_coeff(3, params);
    return 2.0 * (lam * q3 - 1.0) * q3 * phi.E1 * phi.E1 * l3 +
        lam * ((lam - 1.0) * phi.E1 * phi.E1 + lam * (phi.E1 - phi.E2)) *
            std::pow(q2, 4) * l2 * l2;
}

} // namespace symq
