#pragma once

#include "symq/bounds.hpp"
#include "symq/carath.hpp"
#include "symq/classdef.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace symq {

struct Violation {
    GSSample sample;
    double excess = 0.0;
    std::string localized_link;  // first inequality link of the proof chain that broke
};

struct VariantDelta {
    std::string variant;
    double value = 0.0;
};

struct BoundReport {
    ClassParams params;
    std::string phi_label;
    std::string theorem;       // hankel2 | fekete | coeffs:<entry>
    double rho = 0.0;
    bool has_rho = false;
    double closed_form = 0.0;
    double sampled_sup = 0.0;
    GSSample argmax;
    std::int64_t n_samples = 0;
    std::uint64_t seed = 0;
    double gap = 0.0;          // closed_form - sampled_sup
    bool argmax_on_real_slice = false;
    std::vector<Violation> violations;
    std::vector<VariantDelta> variant_deltas;

    std::string to_json() const;
    static std::string csv_header();
    std::string to_csv_row() const;
};

// Per-sample deterministic draw: the i-th sample depends only on (seed, i).
GSSample draw_sample(std::uint64_t seed, std::uint64_t index);

// Monte Carlo supremum of |a2 a4 - a3^2| over the parameter box, with local
// coordinate-descent refinement, against thm1_bound (proof variant).
BoundReport sup_hankel(const ClassParams& params, const PhiSpec& phi,
                       std::int64_t n_samples, std::uint64_t seed);

// Supremum of |a3 - rho a2^2| via the proof decomposition, against thm3_bound.
BoundReport sup_fekete(const ClassParams& params, const PhiSpec& phi, double rho,
                       std::int64_t n_samples, std::uint64_t seed);

// Entry-wise verification of the |a2| and |a3| min-entries; one report per
// defined entry.
std::vector<BoundReport> sup_a2_a3(const ClassParams& params, const PhiSpec& phi,
                                   std::int64_t n_samples, std::uint64_t seed);

// F1..F4 of the proof's Pi decomposition at a given c.
struct FParts {
    double F1 = 0.0, F2 = 0.0, F3 = 0.0, F4 = 0.0;
};
FParts f_parts(double lambda, double q, const PhiSpec& phi, double c);

// G(c) = F1 + 2 F2 + 2 F3 + 4 F4.
double g_of_c(double lambda, double q, const PhiSpec& phi, double c);

// Recovers (P, Q, R) from G evaluated at t = c^2 in {0,1,4}; asserts the
// quadratic-in-t structure at t = 2 and throws on a residual > 1e-6.
std::array<double, 3> extract_PQR(double lambda, double q, const PhiSpec& phi);

struct PiMaxReport {
    bool max_at_corner = false;
    double grid_max = 0.0;
    double value_at_11 = 0.0;
    double argmax_xi = 0.0, argmax_zeta = 0.0;
};

// Grid check that Pi attains its maximum at (1,1) on [0,1]^2.
PiMaxReport pi_maximum_check(double lambda, double q, const PhiSpec& phi, double c);

struct CheckResult {
    std::string name;
    bool pass = false;
    double worst = 0.0;   // worst observed residual / excess
    std::string note;
};

struct LedgerEntry {
    std::string id;
    std::string description;
    double printed_value = 0.0;
    double recomputed_value = 0.0;
};

struct ConsistencyReport {
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    std::vector<LedgerEntry> ledger;
    bool all_pass() const;
    std::string to_json() const;
};

// Full structural battery plus the discrepancy ledger (printed-formula
// deltas are findings, not failures).
ConsistencyReport consistency_suite(std::uint64_t seed);

} // namespace symq
