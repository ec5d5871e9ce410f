#ifndef GENIUS_INTERP_HPP
#define GENIUS_INTERP_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "genius/poly.hpp"

namespace genius {

/// Dense univariate polynomial over Rational, lowest degree first, no
/// trailing zeros. Used for gcds and Newton forms.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    /// Throws if p involves any variable other than v or negative powers.
    static UniPoly from_multi(const MultiPoly& p, Var v);

    const std::vector<Rational>& coeffs() const { return c_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& lead() const { return c_.back(); }
    Rational operator()(const Rational& x) const;
    MultiPoly to_multi(Var v) const;
    UniPoly monic() const;

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    /// Quotient and remainder.
    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
    friend UniPoly gcd(UniPoly a, UniPoly b);

private:
    void trim();
    std::vector<Rational> c_;
};

class InterpolationError : public std::runtime_error {
public:
    InterpolationError(const std::string& what, std::size_t witness)
        : std::runtime_error(what), witness_(witness) {}
    /// Index into the supplied points of the first failing sample, or npos
    /// when there were too few points.
    std::size_t witness() const { return witness_; }

private:
    std::size_t witness_;
};

struct InterpPoint {
    Rational x;
    MultiPoly y;
};

/// Unique polynomial in var of degree <= degbound through the first
/// degbound+1 points (Newton divided differences on MultiPoly values),
/// validated against every remaining point.
MultiPoly interpolate_poly(const std::vector<InterpPoint>& points, int degbound, Var var);

/// num/den in one variable; gcd(num, den) = 1 and den monic.
class RationalFn {
public:
    RationalFn(Var var, UniPoly num, UniPoly den);

    Var var() const { return var_; }
    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    MultiPoly num_poly() const { return num_.to_multi(var_); }
    MultiPoly den_poly() const { return den_.to_multi(var_); }
    Rational operator()(const Rational& x) const;
    /// deg num < deg den (the zero function counts as vanishing).
    bool vanishes_at_infinity() const { return num_.degree() < den_.degree(); }
    std::string to_string() const;

private:
    Var var_;
    UniPoly num_;
    UniPoly den_;
};

class FitError : public std::runtime_error {
public:
    enum class Kind { no_solution, pole_at_sample, validation_failure, too_few_points };
    FitError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

struct FitPoint {
    Rational x;
    Rational y;
};

/// Exact Cauchy interpolation: finds N, D with deg N <= deg_num,
/// deg D <= deg_den and N(x_i) = y_i D(x_i) for every supplied point, then
/// reduces and checks the reduced function reproduces every point.
RationalFn fit_ratfn(const std::vector<FitPoint>& points, int deg_num, int deg_den, Var var = Var("p"));

/// Kernel basis of a dense matrix over Rational (rows x cols), by exact
/// reduced row echelon form.
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows, std::size_t cols);

}  // namespace genius

#endif
