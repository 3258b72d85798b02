#include "symq/carath.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace symq {

std::pair<cplx, cplx> gs_reconstruct(cplx p1, cplx x, cplx sigma) {
    const cplx r = 4.0 - p1 * p1;
    const cplx p2 = (p1 * p1 + x * r) / 2.0;
    const cplx p3 = (p1 * p1 * p1 + 2.0 * p1 * r * x - p1 * r * x * x +
                     2.0 * r * (1.0 - std::norm(x)) * sigma) / 4.0;
    return {p2, p3};
}

GSExtract gs_extract(const CarathCoeffs& p) {
    GSExtract out;
    const cplx r = 4.0 - p.p1 * p.p1;
    if (std::abs(r) < 1e-12) {
        out.degenerate = true;
        return out;
    }
    out.x = (2.0 * p.p2 - p.p1 * p.p1) / r;
    out.x_valid = true;
    if (std::abs(out.x) > 1.0 + 1e-6)
        throw std::domain_error("gs_extract: solved |x| > 1, input is not Caratheodory");
    const double xfree = 1.0 - std::norm(out.x);
    if (std::abs(xfree) < 1e-12) {
        out.degenerate = true;
        return out;
    }
    out.sigma = (4.0 * p.p3 - p.p1 * p.p1 * p.p1 - 2.0 * p.p1 * r * out.x + p.p1 * r * out.x * out.x) /
                (2.0 * r * xfree);
    out.sigma_valid = true;
    return out;
}

CarathCoeffs sample_carath(std::span<const double> weights, std::span<const double> angles) {
    if (weights.empty() || weights.size() != angles.size())
        throw std::invalid_argument("sample_carath: weights and angles must have equal length >= 1");
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("sample_carath: negative weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("sample_carath: weights must sum to 1");
    CarathCoeffs p;
    for (size_t j = 0; j < weights.size(); ++j) {
        const cplx e1 = std::polar(1.0, angles[j]);
        p.p1 += 2.0 * weights[j] * e1;
        p.p2 += 2.0 * weights[j] * e1 * e1;
        p.p3 += 2.0 * weights[j] * e1 * e1 * e1;
    }
    return p;
}

TruncatedSeries schwarz_from_carath(const CarathCoeffs& p) {
    TruncatedSeries h(3);
    h.set(0, 1.0); h.set(1, p.p1); h.set(2, p.p2); h.set(3, p.p3);
    TruncatedSeries one = TruncatedSeries::constant(1.0, 3);
    TruncatedSeries u = (h - one) / (h + one);
    // closed forms from the Moebius expansion
    const cplx u1 = p.p1 / 2.0;
    const cplx u2 = (p.p2 - p.p1 * p.p1 / 2.0) / 2.0;
    const cplx u3 = (p.p3 - p.p1 * p.p2 + p.p1 * p.p1 * p.p1 / 4.0) / 2.0;
    if (std::abs(u[1] - u1) > 1e-12 || std::abs(u[2] - u2) > 1e-12 || std::abs(u[3] - u3) > 1e-12)
        throw std::logic_error("schwarz_from_carath: series path disagrees with closed forms");
    return u;
}

} // namespace symq
