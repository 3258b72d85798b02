#pragma once

#include "symq/carath.hpp"
#include "symq/phis.hpp"
#include "symq/pseries.hpp"
#include "symq/qkernel.hpp"

#include <vector>

namespace symq {

struct CandidateCoeffs {
    cplx a2{0.0}, a3{0.0}, a4{0.0};
    GSSample sample;
    std::string phi_label;
};

// Subordination left-hand side
//   {2z [Dq(Jf)]^lambda / (Jf(z)-Jf(-z))}^mu
//   * {2 {Dq[z Dq(Jf)]}^lambda / Dq[Jf(z)-Jf(-z)]}^(1-mu)
// built entirely from series primitives.  f must be normalized, order >= 4.
TruncatedSeries build_lhs(const TruncatedSeries& f, const ClassParams& params);

// Which printed form of the order-3 closed-form coefficient to report: the
// series engine confirms an a2*a3 factor of lambda((lambda-1)[3]-1)[2] where
// the printed display has lambda((lambda-1)/2 [3]-1)[2]; `corrected` is the
// engine-confirmed reading and the delta is ledgered by the selftest.
enum class LhsVariant { corrected, printed };

// Golden closed-form LHS coefficients.  For mu = 1 without the Bernardi
// operator: the three coefficients at z, z^2, z^3.  Otherwise: the two
// coefficients at z, z^2 of the general expansion.
std::vector<cplx> closed_form_lhs_coeffs(const ClassParams& params, cplx a2, cplx a3, cplx a4,
                                         LhsVariant variant = LhsVariant::corrected);

// Forward coefficient map for the mu = 1, Bernardi-off class: reconstructs
// (c2,c3) from (c1,x,sigma) and (d2,d3) from (-c1,y,tau), then applies the
// closed-form expressions for a2, a3, a4.
CandidateCoeffs solve_forward(const PhiSpec& phi, const ClassParams& params, const GSSample& sample);

// The expanded expression for a2 a4 - a3^2 directly in (c1, x, y, sigma, tau);
// mu = 1, Bernardi-off context.
cplx hankel_expression(const PhiSpec& phi, const ClassParams& params, const GSSample& sample);

} // namespace symq
