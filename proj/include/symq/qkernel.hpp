#pragma once

#include <stdexcept>

namespace symq {

// Parameter tuple identifying a subclass instance: q in (0,1), lambda >= 1,
// mu >= 0, eta > -1.  When bernardi_enabled is false every L_n is taken as 1.
struct ClassParams {
    double q = 0.9;
    double lambda = 1.0;
    double mu = 1.0;
    double eta = 0.0;
    bool bernardi_enabled = false;

    void validate() const {
        if (!(q > 0.0 && q < 1.0))
            throw std::domain_error("ClassParams: q must lie in (0,1)");
        if (!(lambda >= 1.0))
            throw std::domain_error("ClassParams: lambda must be >= 1");
        if (!(mu >= 0.0))
            throw std::domain_error("ClassParams: mu must be >= 0");
        if (!(eta > -1.0))
            throw std::domain_error("ClassParams: eta must be > -1");
    }
};

// Symmetric q-number [n] = (q^n - q^-n)/(q - q^-1).  Returns 0 for n = 0.
double sym_q_number(int n, double q);

// Real-argument extension via the same ratio formula.
double sym_q_number_real(double chi, double q);

// Bernardi multiplier L_n = [1+eta]/[n+eta]; exactly 1 for n = 1 or when the
// operator is switched off.
double bernardi_coeff(int n, const ClassParams& params);

} // namespace symq
