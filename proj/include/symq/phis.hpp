#pragma once

#include "symq/pseries.hpp"

#include <optional>
#include <string>

namespace symq {

// Target function phi = 1 + E1 z + E2 z^2 + E3 z^3 + ... with E1 > 0.
// Only E1..E3 enter any bound; presets also carry the full series for
// engine-level cross checks.
struct PhiSpec {
    double E1 = 0.0;
    double E2 = 0.0;
    double E3 = 0.0;
    std::optional<TruncatedSeries> full_series;
    std::string label;
};

PhiSpec make_phi_caratheodory(int order = 6);
PhiSpec make_phi_janowski(double A, double B, int order = 6);
PhiSpec make_phi_crescent(int order = 6);
PhiSpec make_phi_custom(double E1, double E2, double E3);

// Parses "caratheodory | janowski:A,B | crescent | custom:E1,E2,E3".
PhiSpec parse_phi(const std::string& text, int order = 6);

} // namespace symq
