#include "symq/pseries.hpp"

#include "symq/qkernel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace symq {

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: order must be >= 0");
    c_.assign(static_cast<size_t>(order) + 1, cplx(0.0, 0.0));
}

TruncatedSeries::TruncatedSeries(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient list");
}

TruncatedSeries TruncatedSeries::identity(int order) {
    TruncatedSeries f(order);
    if (order >= 1) f.set(1, 1.0);
    return f;
}

TruncatedSeries TruncatedSeries::constant(cplx c, int order) {
    TruncatedSeries f(order);
    f.set(0, c);
    return f;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    if (order > this->order())
        throw std::invalid_argument("truncated: cannot extend the carried order");
    return TruncatedSeries(std::vector<cplx>(c_.begin(), c_.begin() + order + 1));
}

TruncatedSeries TruncatedSeries::shifted_up() const {
    std::vector<cplx> out(c_.size() + 1, cplx(0.0));
    std::copy(c_.begin(), c_.end(), out.begin() + 1);
    return TruncatedSeries(std::move(out));
}

TruncatedSeries TruncatedSeries::shifted_down() const {
    if (std::abs(c_[0]) > 1e-12)
        throw std::invalid_argument("shifted_down: constant term must vanish");
    if (c_.size() < 2)
        throw std::invalid_argument("shifted_down: order must be >= 1");
    return TruncatedSeries(std::vector<cplx>(c_.begin() + 1, c_.end()));
}

std::string TruncatedSeries::to_json() const {
    std::string out = "[";
    char buf[64];
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ",";
        std::snprintf(buf, sizeof buf, "[%.17g,%.17g]", c_[i].real(), c_[i].imag());
        out += buf;
    }
    out += "]";
    return out;
}

namespace {
int common_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    return std::min(a.order(), b.order());
}
} // namespace

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = common_order(a, b);
    TruncatedSeries out(n);
    for (int i = 0; i <= n; ++i) out.set(i, a[i] + b[i]);
    return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = common_order(a, b);
    TruncatedSeries out(n);
    for (int i = 0; i <= n; ++i) out.set(i, a[i] - b[i]);
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = common_order(a, b);
    TruncatedSeries out(n);
    for (int i = 0; i <= n; ++i) {
        cplx s(0.0);
        for (int k = 0; k <= i; ++k) s += a[k] * b[i - k];
        out.set(i, s);
    }
    return out;
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = common_order(a, b);
    if (b[0] == cplx(0.0))
        throw std::domain_error("series division: divisor has zero constant term");
    TruncatedSeries out(n);
    for (int i = 0; i <= n; ++i) {
        cplx s = a[i];
        for (int k = 1; k <= i; ++k) s -= b[k] * out[i - k];
        out.set(i, s / b[0]);
    }
    return out;
}

TruncatedSeries operator*(cplx s, const TruncatedSeries& a) {
    TruncatedSeries out(a.order());
    for (int i = 0; i <= a.order(); ++i) out.set(i, s * a[i]);
    return out;
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (std::abs(inner[0]) > 1e-12)
        throw std::domain_error("compose: inner constant term must vanish");
    const int n = std::min(outer.order(), inner.order());
    TruncatedSeries in = inner.truncated(n);
    // Horner over the series ring.
    TruncatedSeries acc = TruncatedSeries::constant(outer[outer.order()], n);
    for (int i = outer.order() - 1; i >= 0; --i) {
        acc = acc * in;
        acc.set(0, acc[0] + outer[i]);
    }
    return acc;
}

TruncatedSeries comp_inverse(const TruncatedSeries& f) {
    if (f.order() < 2 || std::abs(f[0]) > 1e-12 || std::abs(f[1] - cplx(1.0)) > 1e-12)
        throw std::domain_error("comp_inverse: series must be normalized (f0=0, f1=1, order>=2)");
    const int n = f.order();
    TruncatedSeries g = TruncatedSeries::identity(n);
    // The coefficient g_k enters coefficient k of f(g) linearly with factor
    // f_1 = 1, so each residual cancels in one step.
    for (int k = 2; k <= n; ++k) {
        TruncatedSeries h = compose(f, g);
        g.set(k, g[k] - h[k]);
    }
    return g;
}

TruncatedSeries pow_real(const TruncatedSeries& f, double alpha) {
    if (std::abs(f[0] - cplx(1.0)) > 1e-9)
        throw std::domain_error("pow_real: constant term must be 1 (principal branch)");
    const int n = f.order();
    TruncatedSeries u = f;
    const cplx f0 = f[0];
    for (int i = 0; i <= n; ++i) u.set(i, f[i] / f0);
    TruncatedSeries out(n);
    out.set(0, 1.0);
    for (int m = 1; m <= n; ++m) {
        cplx s(0.0);
        for (int k = 1; k <= m; ++k)
            s += (static_cast<double>(k) * (alpha + 1.0) - static_cast<double>(m)) * u[k] * out[m - k];
        out.set(m, s / static_cast<double>(m));
    }
    return out;
}

TruncatedSeries sym_q_derivative(const TruncatedSeries& f, double q) {
    if (!(q > 0.0 && q < 1.0))
        throw std::domain_error("sym_q_derivative: q must lie in (0,1)");
    if (f.order() < 1)
        throw std::invalid_argument("sym_q_derivative: order must be >= 1");
    TruncatedSeries out(f.order() - 1);
    for (int m = 1; m <= f.order(); ++m)
        out.set(m - 1, sym_q_number(m, q) * f[m]);
    return out;
}

TruncatedSeries odd_part(const TruncatedSeries& f) {
    TruncatedSeries out(f.order());
    for (int i = 1; i <= f.order(); i += 2) out.set(i, 2.0 * f[i]);
    return out;
}

cplx evaluate(const TruncatedSeries& f, cplx z) {
    cplx acc = f[f.order()];
    for (int i = f.order() - 1; i >= 0; --i) acc = acc * z + f[i];
    return acc;
}

} // namespace symq
