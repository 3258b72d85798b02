#include "symq/qkernel.hpp"

#include <cmath>

namespace symq {

double sym_q_number(int n, double q) {
    if (!(q > 0.0 && q < 1.0))
        throw std::domain_error("sym_q_number: q must lie in (0,1)");
    if (n < 0)
        throw std::domain_error("sym_q_number: n must be >= 0");
    if (n == 0) return 0.0;
    if (n == 1) return 1.0;
    return (std::pow(q, n) - std::pow(q, -n)) / (q - 1.0 / q);
}

double sym_q_number_real(double chi, double q) {
    if (!(q > 0.0 && q < 1.0))
        throw std::domain_error("sym_q_number_real: q must lie in (0,1)");
    return (std::pow(q, chi) - std::pow(q, -chi)) / (q - 1.0 / q);
}

double bernardi_coeff(int n, const ClassParams& params) {
    if (n < 1)
        throw std::domain_error("bernardi_coeff: n must be >= 1");
    params.validate();
    if (!params.bernardi_enabled || n == 1) return 1.0;
    return sym_q_number_real(1.0 + params.eta, params.q) /
           sym_q_number_real(static_cast<double>(n) + params.eta, params.q);
}

} // namespace symq
