#pragma once

#include "symq/pseries.hpp"

#include <span>

namespace symq {

// One point of the parameter box driving a candidate (a2, a3, a4).
// c1 is real in [0,2]; x, sigma parametrize the c-side and y, tau the d-side
// (d1 is not stored: it equals -c1).
struct GSSample {
    double c1 = 0.0;
    cplx x{0.0}, y{0.0}, sigma{0.0}, tau{0.0};
};

struct CarathCoeffs {
    cplx p1{0.0}, p2{0.0}, p3{0.0};
};

// p2, p3 from (p1, x, sigma):
//   p2 = (p1^2 + x(4-p1^2))/2
//   p3 = (p1^3 + 2 p1 (4-p1^2) x - p1 (4-p1^2) x^2 + 2 (4-p1^2)(1-|x|^2) sigma)/4
std::pair<cplx, cplx> gs_reconstruct(cplx p1, cplx x, cplx sigma);

struct GSExtract {
    bool degenerate = false;   // 4 - p1^2 = 0 (x free) or |x| = 1 (sigma free)
    cplx x{0.0}, sigma{0.0};   // valid entries only up to the degeneracy point
    bool x_valid = false, sigma_valid = false;
};

// Inverts the two relations above for a genuine Caratheodory triple; throws
// if the solved |x| exceeds 1 by more than 1e-6.
GSExtract gs_extract(const CarathCoeffs& p);

// p_n = 2 sum_j w_j e^{i n theta_j} for a finitely atomic Herglotz measure;
// weights must be >= 0 and sum to 1.
CarathCoeffs sample_carath(std::span<const double> weights, std::span<const double> angles);

// Schwarz function u = (h-1)/(h+1) for h = 1 + p1 z + p2 z^2 + p3 z^3,
// as a series of order 3; cross-checked against the closed-form coefficients.
TruncatedSeries schwarz_from_carath(const CarathCoeffs& p);

} // namespace symq
