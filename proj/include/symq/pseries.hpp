#pragma once

#include <complex>
#include <string>
#include <vector>

namespace symq {

using cplx = std::complex<double>;

// Truncated complex power series: coefficients c_0..c_N of powers of z.
// All arithmetic carries the minimum order of the operands; coefficients
// above the carried order are never reported.  Values are immutable in
// spirit: operations return fresh series.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    TruncatedSeries(std::vector<cplx> coeffs);

    static TruncatedSeries identity(int order);  // z
    static TruncatedSeries constant(cplx c, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const cplx& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    void set(int i, cplx v) { c_[static_cast<size_t>(i)] = v; }
    const std::vector<cplx>& coeffs() const { return c_; }

    TruncatedSeries truncated(int order) const;

    // z * f; order rises by one (the shifted-in top coefficient is known).
    TruncatedSeries shifted_up() const;
    // f / z; requires c_0 = 0; order drops by one.
    TruncatedSeries shifted_down() const;

    std::string to_json() const;  // [[re,im],...]

private:
    std::vector<cplx> c_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(cplx s, const TruncatedSeries& a);

// outer(inner(z)) to carried order; inner must have zero constant term.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

// Series g with compose(f, g) = id to carried order; f must be normalized
// (f_0 = 0, f_1 = 1, order >= 2).
TruncatedSeries comp_inverse(const TruncatedSeries& f);

// f^alpha for f with constant term 1 (principal branch).
TruncatedSeries pow_real(const TruncatedSeries& f, double alpha);

// Sum c_n z^n  ->  Sum [n]_q c_n z^(n-1); order drops by one.
TruncatedSeries sym_q_derivative(const TruncatedSeries& f, double q);

// f(z) - f(-z): even-index coefficients zeroed, odd-index doubled.
TruncatedSeries odd_part(const TruncatedSeries& f);

cplx evaluate(const TruncatedSeries& f, cplx z);

} // namespace symq
