#ifndef GENIUS_SERIES_HPP
#define GENIUS_SERIES_HPP

#include <vector>

#include "genius/poly.hpp"

namespace genius {

/// Power series in one formal variable, truncated after x^order.
/// Coefficients are MultiPoly; the coefficient vector always has order+1
/// entries. Binary operations truncate to the smaller order.
class TruncSeries {
public:
    TruncSeries(Var var, int order);
    TruncSeries(Var var, int order, std::vector<MultiPoly> coeffs);
    /// Builds a series from a polynomial in var (terms above order dropped).
    static TruncSeries from_poly(Var var, int order, const MultiPoly& p);

    Var var() const { return var_; }
    int order() const { return order_; }
    const std::vector<MultiPoly>& coeffs() const { return c_; }

    /// [var^k]; throws std::out_of_range unless 0 <= k <= order.
    const MultiPoly& coeff(int k) const;
    void set_coeff(int k, MultiPoly value);
    TruncSeries truncate(int order) const;
    /// The series as a polynomial in var.
    MultiPoly to_poly() const;

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    TruncSeries& operator*=(const MultiPoly& c);

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(TruncSeries a, const MultiPoly& c) { return a *= c; }
    friend bool operator==(const TruncSeries& a, const TruncSeries& b);

private:
    void check_compatible(const TruncSeries& o) const;

    Var var_;
    int order_;
    std::vector<MultiPoly> c_;
};

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
/// exp(s); s must have zero constant term.
TruncSeries series_exp(const TruncSeries& s);
/// log(s); s must have constant term 1.
TruncSeries series_log(const TruncSeries& s);
/// The square root with constant term +1; s must have constant term 1.
TruncSeries series_sqrt(const TruncSeries& s);
/// 1/s; the constant term must be a nonzero rational or a single monomial
/// in laurent variables.
TruncSeries series_recip(const TruncSeries& s);
/// s^k for integer k >= 0 with constant term 1 (power recurrence).
TruncSeries series_pow(const TruncSeries& s, long k);
const MultiPoly& coeff_extract(const TruncSeries& s, int k);
Rational poly_coeff_extract(const MultiPoly& p, const Monomial& m);

}  // namespace genius

#endif
