#ifndef GENIUS_PERNICI_HPP
#define GENIUS_PERNICI_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genius/poly.hpp"
#include "genius/series.hpp"

namespace genius {

/// The degree parameter r, either the laurent variable r or a rational value.
class RValue {
public:
    static RValue symbolic() { return RValue(); }
    /// Throws std::domain_error for r = 1 (singular) and r < 2.
    static RValue rational(const Rational& r);

    bool is_symbolic() const { return !value_.has_value(); }
    const Rational& value() const { return *value_; }
    /// r as a polynomial (the laurent variable r when symbolic).
    MultiPoly poly() const;
    /// r^e, e possibly negative.
    MultiPoly power(int e) const;
    std::string to_string() const;

private:
    RValue() = default;
    std::optional<Rational> value_;
};

Var r_var();
Var n_var();
Var n_inv_var();
Var j_var();

struct PerniciParams {
    RValue r = RValue::symbolic();
    int H = 4;
    /// Highest j-degree inspected in each 1/n^h slice; <= 0 means 2H.
    int jdeg = 0;
    /// Largest integer j sampled; <= 0 means 2H+4.
    int jmax_sample = 0;
    /// Replace u_s(r) by free variables u_2..u_{H+1}.
    bool free_u = false;
    /// Multiplier applied to [x^s] T_r when forming u_s.
    Rational u_scale = Rational(1);

    int effective_jdeg() const { return jdeg > 0 ? jdeg : 2 * H; }
    int effective_jmax() const { return jmax_sample > 0 ? jmax_sample : 2 * H + 4; }
    /// Throws std::invalid_argument unless H >= 1 and jmax >= 2H+2.
    void validate() const;
};

/// T_r as a series in x up to x^order, constant term 1.
TruncSeries t_series(const RValue& r, int order);

/// u_s = scale * [x^s] T_r for s = 1..smax (index 0 unused). With scale 1
/// the s = 1 term of the M_j exponent is exactly n r x; scale 2 keeps every
/// vanishing slice but breaks the leading closed form.
std::vector<MultiPoly> u_coeffs(const RValue& r, int smax, const Rational& scale = Rational(1));

/// Free symbolic u_2..u_smax (index 0 and 1 unused).
std::vector<MultiPoly> free_u_coeffs(int smax);

/// M_j = [x^j] exp(n r x - sum_{s=2}^{smax} (n u_s / s) (-x)^s), a polynomial
/// in n. smax <= 0 means smax = j.
MultiPoly m_j(int j, const RValue& r, const std::vector<MultiPoly>& u, int smax = 0);

/// a_h(r, j) for h = 0..H at sampled j, plus their interpolated
/// j-polynomials.
struct ATable {
    int H = 0;
    int jmax = 0;
    std::map<std::pair<int, int>, MultiPoly> entries;  // (h, j) -> a_h(r, j)
    std::vector<MultiPoly> jpolys;                     // h -> polynomial in j
};

/// Builds the table for j = 1..jmax. Throws InterpolationError if some
/// slice is not a polynomial of j-degree <= 2h on the samples.
ATable a_table(const PerniciParams& params);

/// ln(sum_s coeff_s n_inv^s) for a series with constant term 1, returning
/// slice h as a polynomial in j (and r, u, c ...).
std::vector<MultiPoly> log_slices(const TruncSeries& f);

/// [j^k n^-h] of ln(1 + sum a_s n^-s) for h = 0..H, k = 0..jdeg.
std::map<std::pair<int, int>, MultiPoly> log_coeffs(const ATable& at, const PerniciParams& params);

struct SliceRecord {
    int h = 0;
    int k = 0;
    std::string role;      // "vanish", "leading" or "info"
    std::string actual;
    std::string expected;  // empty for "info"
    bool ok = true;
};

struct IdentityReport {
    bool pass = true;
    std::vector<SliceRecord> slices;
    std::vector<SliceRecord> failures() const;
    /// Canonical text form; equal reports serialize identically.
    std::string serialize() const;
};

/// (1/r^h - 2) / ((h+1) h).
MultiPoly leading_value(const RValue& r, int h);

/// Checks vanishing for k >= h+2 (all h) and, when check_leading is set, the
/// closed form at k = h+1; other slices are recorded as info.
IdentityReport check_identities(const std::vector<MultiPoly>& slices, const RValue& r, int H, int jdeg,
                                bool check_leading);

IdentityReport check_16_17(const PerniciParams& params);
IdentityReport check_16_free_u(PerniciParams params);

struct AwesomeTerm {
    std::string c_name;  // e.g. "c1"
    int z = 1;
};

struct AwesomeSpec {
    std::vector<AwesomeTerm> terms;
    /// Throws std::invalid_argument for repeated or non-positive z, or z > H.
    void validate(int H) const;
};

/// Falling factorial x (x-1) ... (x-z+1) as a polynomial in v.
MultiPoly falling_factorial(Var v, int z);

/// ln F for F = sum_s a_s(r,j) n^-s + sum_i c_i (j)_{z_i} / (n r)^{z_i}
/// sum_s a_s(r, j - z_i) n^-s, slice by slice in 1/n.
std::vector<MultiPoly> awesome_log_slices(const AwesomeSpec& spec, const ATable& at, const PerniciParams& params);

IdentityReport awesome_check(const AwesomeSpec& spec, const PerniciParams& params);

}  // namespace genius

#endif
