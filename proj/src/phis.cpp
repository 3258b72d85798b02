#include "symq/phis.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace symq {

namespace {

void check_consistency(PhiSpec& p) {
    const auto& s = *p.full_series;
    if (std::abs(s[1] - cplx(p.E1)) > 1e-12 || std::abs(s[2] - cplx(p.E2)) > 1e-12 ||
        std::abs(s[3] - cplx(p.E3)) > 1e-12)
        throw std::logic_error("PhiSpec: full series disagrees with (E1,E2,E3)");
}

} // namespace

PhiSpec make_phi_caratheodory(int order) {
    TruncatedSeries num(order), den(order);
    num.set(0, 1.0); num.set(1, 1.0);
    den.set(0, 1.0); den.set(1, -1.0);
    PhiSpec p;
    p.full_series = num / den;
    p.E1 = 2.0; p.E2 = 2.0; p.E3 = 2.0;
    p.label = "caratheodory";
    check_consistency(p);
    return p;
}

PhiSpec make_phi_janowski(double A, double B, int order) {
    if (!(-1.0 <= B && B < A && A <= 1.0))
        throw std::invalid_argument("janowski: need -1 <= B < A <= 1");
    TruncatedSeries num(order), den(order);
    num.set(0, 1.0); num.set(1, A);
    den.set(0, 1.0); den.set(1, B);
    PhiSpec p;
    p.full_series = num / den;
    p.E1 = A - B;
    p.E2 = -B * (A - B);
    p.E3 = B * B * (A - B);
    std::ostringstream lbl;
    lbl << "janowski:" << A << "," << B;
    p.label = lbl.str();
    check_consistency(p);
    return p;
}

PhiSpec make_phi_crescent(int order) {
    // z + sqrt(1 + z^2)
    TruncatedSeries g(order);
    g.set(0, 1.0);
    if (order >= 2) g.set(2, 1.0);
    TruncatedSeries s = pow_real(g, 0.5) + TruncatedSeries::identity(order);
    PhiSpec p;
    p.full_series = s;
    p.E1 = 1.0; p.E2 = 0.5; p.E3 = 0.0;
    p.label = "crescent";
    check_consistency(p);
    return p;
}

PhiSpec make_phi_custom(double E1, double E2, double E3) {
    if (!(E1 > 0.0))
        throw std::invalid_argument("custom phi: E1 must be > 0");
    PhiSpec p;
    p.E1 = E1; p.E2 = E2; p.E3 = E3;
    std::ostringstream lbl;
    lbl << "custom:" << E1 << "," << E2 << "," << E3;
    p.label = lbl.str();
    return p;
}

PhiSpec parse_phi(const std::string& text, int order) {
    if (text == "caratheodory") return make_phi_caratheodory(order);
    if (text == "crescent") return make_phi_crescent(order);
    auto parse_args = [](const std::string& s, size_t want) {
        std::vector<double> vals;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            size_t pos = 0;
            vals.push_back(std::stod(tok, &pos));
            if (pos != tok.size()) throw std::invalid_argument("phi: bad number '" + tok + "'");
        }
        if (vals.size() != want) throw std::invalid_argument("phi: wrong argument count");
        return vals;
    };
    if (text.rfind("janowski:", 0) == 0) {
        auto v = parse_args(text.substr(9), 2);
        return make_phi_janowski(v[0], v[1], order);
    }
    if (text.rfind("custom:", 0) == 0) {
        auto v = parse_args(text.substr(7), 3);
        return make_phi_custom(v[0], v[1], v[2]);
    }
    throw std::invalid_argument("unknown phi preset: " + text);
}

} // namespace symq
