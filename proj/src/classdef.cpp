#include "symq/classdef.hpp"

#include <cmath>
#include <stdexcept>

namespace symq {

namespace {

// bracket^power with the constant term divided out first and multiplied back.
TruncatedSeries normalized_pow(const TruncatedSeries& bracket, double power) {
    const cplx c0 = bracket[0];
    if (std::abs(c0 - cplx(1.0)) > 1e-9)
        throw std::logic_error("build_lhs: bracket failed to normalize to constant term 1");
    TruncatedSeries unit(bracket.order());
    for (int i = 0; i <= bracket.order(); ++i) unit.set(i, bracket[i] / c0);
    unit.set(0, 1.0);
    return std::pow(c0, power) * pow_real(unit, power);
}

} // namespace

TruncatedSeries build_lhs(const TruncatedSeries& f, const ClassParams& params) {
    params.validate();
    if (f.order() < 4)
        throw std::invalid_argument("build_lhs: order must be >= 4");
    if (std::abs(f[0]) > 1e-12 || std::abs(f[1] - cplx(1.0)) > 1e-12)
        throw std::invalid_argument("build_lhs: f must be normalized (f0=0, f1=1)");

    TruncatedSeries jf(f.order());
    jf.set(1, f[1]);
    for (int n = 2; n <= f.order(); ++n) jf.set(n, bernardi_coeff(n, params) * f[n]);

    const TruncatedSeries d = sym_q_derivative(jf, params.q);     // constant term 1
    const TruncatedSeries odd = odd_part(jf);

    // {2z [Dq Jf]^lambda / odd}: cancel the common factor 2z first.
    TruncatedSeries den_a = odd.shifted_down();
    den_a = cplx(0.5) * den_a;                                    // constant term 1
    const TruncatedSeries bracket_a = normalized_pow(d, params.lambda) / den_a;

    // {2 {Dq[z Dq Jf]}^lambda / Dq odd}
    const TruncatedSeries dzd = sym_q_derivative(d.shifted_up(), params.q);  // constant 1
    const TruncatedSeries den_b = sym_q_derivative(odd, params.q);           // constant 2
    const TruncatedSeries bracket_b = (cplx(2.0) * normalized_pow(dzd, params.lambda)) / den_b;

    return normalized_pow(bracket_a, params.mu) * normalized_pow(bracket_b, 1.0 - params.mu);
}

std::vector<cplx> closed_form_lhs_coeffs(const ClassParams& params, cplx a2, cplx a3, cplx a4,
                                         LhsVariant variant) {
    params.validate();
    const double lam = params.lambda;
    const double q2 = sym_q_number(2, params.q);
    const double q3 = sym_q_number(3, params.q);
    const double q4 = sym_q_number(4, params.q);

    if (params.mu == 1.0 && !params.bernardi_enabled) {
        const double a2a3_factor = (variant == LhsVariant::corrected)
            ? lam * ((lam - 1.0) * q3 - 1.0) * q2
            : lam * ((lam - 1.0) / 2.0 * q3 - 1.0) * q2;
        return {
            lam * q2 * a2,
            (lam * q3 - 1.0) * a3 + lam * (lam - 1.0) / 2.0 * q2 * q2 * a2 * a2,
            lam * q4 * a4 + a2a3_factor * a2 * a3 +
                lam * (lam - 1.0) * (lam - 2.0) / 6.0 * q2 * q2 * q2 * a2 * a2 * a2,
        };
    }

    const double mu = params.mu;
    const double l2 = bernardi_coeff(2, params);
    const double l3 = bernardi_coeff(3, params);
    const double m2 = mu - (mu - 1.0) * q2;
    const double m3 = mu - (mu - 1.0) * q3;
    const double m22 = mu - (mu - 1.0) * q2 * q2;
    return {
        lam * m2 * q2 * l2 * a2,
        (lam * q3 - 1.0) * m3 * l3 * a3 +
            lam / 2.0 * (lam * m2 * m2 - m22) * q2 * q2 * l2 * l2 * a2 * a2,
    };
}

CandidateCoeffs solve_forward(const PhiSpec& phi, const ClassParams& params, const GSSample& sample) {
    params.validate();
    if (params.mu != 1.0 || params.bernardi_enabled)
        throw std::invalid_argument("solve_forward: requires mu = 1 and Bernardi off");
    const double lam = params.lambda;
    const double q2 = sym_q_number(2, params.q);
    const double q3 = sym_q_number(3, params.q);
    const double q4 = sym_q_number(4, params.q);
    const double e1 = phi.E1, e2 = phi.E2, e3 = phi.E3;
    const double c1 = sample.c1;

    const auto [c2, c3] = gs_reconstruct(c1, sample.x, sample.sigma);
    const auto [d2, d3] = gs_reconstruct(-c1, sample.y, sample.tau);

    CandidateCoeffs out;
    out.sample = sample;
    out.phi_label = phi.label;
    out.a2 = e1 * c1 / (2.0 * lam * q2);
    out.a3 = e1 * (c2 - d2) / (4.0 * (lam * q3 - 1.0)) + e1 * e1 * c1 * c1 / (4.0 * lam * lam * q2 * q2);
    out.a4 = -2.5 / q4 * out.a2 * (out.a2 * out.a2 - out.a3) -
             q2 / (6.0 * q4) * ((lam - 1.0) * (3.0 * q3 + (lam - 2.0) * q2 * q2) - 6.0) *
                 out.a2 * out.a2 * out.a2 +
             e1 * (c3 - d3) / (4.0 * lam * q4) +
             c1 * (e2 - 2.0 * e1) * (c2 + d2) / (8.0 * lam * q4) +
             c1 * c1 * c1 * (e1 - e2 + e3) / (8.0 * lam * q4);
    return out;
}

cplx hankel_expression(const PhiSpec& phi, const ClassParams& params, const GSSample& sample) {
    params.validate();
    if (params.mu != 1.0 || params.bernardi_enabled)
        throw std::invalid_argument("hankel_expression: requires mu = 1 and Bernardi off");
    const double lam = params.lambda;
    const double q2 = sym_q_number(2, params.q);
    const double q3 = sym_q_number(3, params.q);
    const double q4 = sym_q_number(4, params.q);
    const double e1 = phi.E1, e2 = phi.E2, e3 = phi.E3;
    const double c1 = sample.c1;
    const cplx x = sample.x, y = sample.y, s = sample.sigma, t = sample.tau;
    const double r = 4.0 - c1 * c1;
    const double q2p4 = q2 * q2 * q2 * q2;
    const double denom3 = lam * q3 - 1.0;

    const cplx term1 = -e1 * std::pow(c1, 4) / (96.0 * std::pow(lam, 4) * q2p4 * q4) *
        (e1 * e1 * e1 * ((lam - 1.0) * (lam - 2.0) * q2 * q2 * q2 +
                         3.0 * (lam - 1.0) * q2 * q3 - 6.0 * (q2 - q4)) -
         6.0 * e3 * lam * lam * q2 * q2 * q2);
    const cplx term2 = e1 * e2 * c1 * c1 * r * (x + y) / (32.0 * lam * lam * q2 * q4);
    const cplx term3 = -e1 * e1 * c1 * c1 * r * (x * x + y * y) / (32.0 * lam * lam * q2 * q4);
    const cplx term4 = e1 * e1 * c1 * r *
        ((1.0 - std::norm(x)) * s - (1.0 - std::norm(y)) * t) / (16.0 * lam * lam * q2 * q4);
    const cplx term5 = -e1 * e1 * r * r * (x - y) * (x - y) / (64.0 * denom3 * denom3);
    const cplx term6 = (5.0 - 4.0 * q4) * e1 * e1 * e1 * c1 * c1 * r * (x - y) /
        (64.0 * lam * lam * q2 * q2 * q4 * denom3);
    return term1 + term2 + term3 + term4 + term5 + term6;
}

} // namespace symq
