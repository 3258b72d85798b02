#pragma once

#include "symq/phis.hpp"
#include "symq/qkernel.hpp"

#include <string>
#include <vector>

namespace symq {

enum class Variant { proof, statement };

struct HankelBoundParts {
    double P = 0.0, Q = 0.0, R = 0.0;
    Variant variant = Variant::proof;
};

// Exact maximum of P t^2 + Q t + R over [0,4].
double quad_max(double P, double Q, double R);

// The printed three-case table value (kept for the discrepancy report; its
// third case omits R and its conditions duplicate case two).
double quad_max_case_table(double P, double Q, double R);

HankelBoundParts thm1_parts(double lambda, double q, const PhiSpec& phi, Variant variant);

// quad_max over the proof-variant parts.
double thm1_bound(double lambda, double q, const PhiSpec& phi);

struct ThetaOmega {
    double Omega = 0.0;
    double Theta = 0.0;
};

ThetaOmega theta_omega(const ClassParams& params, const PhiSpec& phi);

struct A2A3Bounds {
    double a2_bound = 0.0;
    double a3_bound = 0.0;
    // min-entries; a NaN entry was dropped (degenerate denominator)
    double a2_entries[3] = {0.0, 0.0, 0.0};
    double a3_first_term = 0.0;
    double a3_entries[2] = {0.0, 0.0};
    ThetaOmega to;
    std::vector<std::string> flags;
};

A2A3Bounds thm2_bounds(const ClassParams& params, const PhiSpec& phi);

double thm3_bound(const ClassParams& params, const PhiSpec& phi, double rho);

// Corollary forms, evaluated from their own printed displays.
A2A3Bounds corollary1_bounds(const ClassParams& params, const PhiSpec& phi);  // mu = 1 class
A2A3Bounds corollary2_bounds(const ClassParams& params, const PhiSpec& phi);  // mu = 0 class
double corollary3_bound(const ClassParams& params, const PhiSpec& phi, double rho);
double corollary4_bound(const ClassParams& params, const PhiSpec& phi, double rho);
double corollary5_bound(const ClassParams& params, const PhiSpec& phi);

// Upsilon with the consistent 2*lambda(E1-E2) factor, and the printed variant
// with the bare lambda factor (ledger material).
double upsilon_value(const ClassParams& params, const PhiSpec& phi);
double upsilon_printed(const ClassParams& params, const PhiSpec& phi);

} // namespace symq
