#include "genius/pernici.hpp"

#include <sstream>
#include <stdexcept>

#include "genius/interp.hpp"

namespace genius {

namespace {

const Var kX("x");

}  // namespace

Var r_var() { return Var("r", true); }
Var n_var() { return Var("n"); }
Var n_inv_var() { return Var("n_inv"); }
Var j_var() { return Var("j"); }

RValue RValue::rational(const Rational& r) {
    if (r == Rational(1)) {
        throw std::domain_error("r = 1 makes T_r singular");
    }
    if (r < Rational(2)) {
        throw std::domain_error("r must be at least 2 (got " + r.to_string() + ")");
    }
    RValue v;
    v.value_ = r;
    return v;
}

MultiPoly RValue::poly() const { return is_symbolic() ? MultiPoly(r_var()) : MultiPoly(*value_); }

MultiPoly RValue::power(int e) const {
    if (is_symbolic()) {
        return MultiPoly(Monomial(r_var(), e));
    }
    return MultiPoly(value_->pow(e));
}

std::string RValue::to_string() const { return is_symbolic() ? "sym" : value_->to_string(); }

void PerniciParams::validate() const {
    if (H < 1) {
        throw std::invalid_argument("H must be at least 1");
    }
    if (effective_jmax() < 2 * H + 2) {
        throw std::invalid_argument("jmax_sample must be at least 2H+2");
    }
}

TruncSeries t_series(const RValue& r, int order) {
    if (order < 1) {
        throw std::invalid_argument("t_series: order must be at least 1");
    }
    // With a = r-1 and S = sqrt(1 - 4 a x):
    //   T = 2a / (2a - r + r S) = 1 / (1 + r (S - 1) / (2a)),
    // and every coefficient of S - 1 carries a factor a, so Q = (S - 1)/a is
    // polynomial in a and no division by r - 1 is ever needed.
    const Var a("a");
    TruncSeries s(kX, order);
    s.set_coeff(0, MultiPoly(1));
    s.set_coeff(1, MultiPoly(a) * Rational(-4));
    const TruncSeries root = series_sqrt(s);
    const MultiPoly a_value = r.poly() - MultiPoly(1);
    TruncSeries den(kX, order);
    den.set_coeff(0, MultiPoly(1));
    for (int k = 1; k <= order; ++k) {
        const MultiPoly q = root.coeff(k).divide(Monomial(a, 1)).substitute(a, a_value);
        den.set_coeff(k, q * r.poly() * frac(1, 2));
    }
    return series_recip(den);
}

std::vector<MultiPoly> u_coeffs(const RValue& r, int smax, const Rational& scale) {
    if (smax < 1) {
        throw std::invalid_argument("u_coeffs: smax must be at least 1");
    }
    const TruncSeries t = t_series(r, smax);
    std::vector<MultiPoly> u(static_cast<std::size_t>(smax) + 1);
    for (int s = 1; s <= smax; ++s) {
        u[s] = t.coeff(s) * scale;
    }
    return u;
}

std::vector<MultiPoly> free_u_coeffs(int smax) {
    std::vector<MultiPoly> u(static_cast<std::size_t>(std::max(smax, 1)) + 1);
    for (int s = 2; s <= smax; ++s) {
        u[s] = MultiPoly(indexed("u", s));
    }
    return u;
}

MultiPoly m_j(int j, const RValue& r, const std::vector<MultiPoly>& u, int smax) {
    if (j < 1) {
        throw std::invalid_argument("m_j: j must be at least 1");
    }
    if (smax <= 0 || smax > j) {
        smax = j;
    }
    if (static_cast<int>(u.size()) <= smax) {
        throw std::invalid_argument("m_j: need u_2..u_" + std::to_string(smax));
    }
    const MultiPoly n(n_var());
    TruncSeries e(kX, j);
    e.set_coeff(1, n * r.poly());
    for (int s = 2; s <= smax; ++s) {
        // -(n u_s / s) (-x)^s
        const long sign = (s % 2 == 0) ? -1 : 1;
        e.set_coeff(s, n * u[s] * frac(sign, s));
    }
    return series_exp(e).coeff(j);
}

ATable a_table(const PerniciParams& params) {
    params.validate();
    const int H = params.H;
    const int jmax = params.effective_jmax();
    // Terms with s > H+1 shift the power of n by s-1 > H and cannot reach
    // any a_h with h <= H.
    const int smax = H + 1;
    const std::vector<MultiPoly> u = params.free_u ? free_u_coeffs(smax) : u_coeffs(params.r, smax, params.u_scale);

    ATable at;
    at.H = H;
    at.jmax = jmax;
    for (int j = 1; j <= jmax; ++j) {
        const MultiPoly mj = m_j(j, params.r, u, std::min(j, smax));
        const MultiPoly scale = params.r.power(-j) * Rational(factorial(static_cast<unsigned>(j)));
        for (int h = 0; h <= H; ++h) {
            at.entries[{h, j}] = h < j ? mj.coefficient_in(n_var(), j - h) * scale : MultiPoly();
        }
        if (!(at.entries[{0, j}] == MultiPoly(1))) {
            throw std::logic_error("a_0(r," + std::to_string(j) + ") != 1");
        }
    }
    at.jpolys.resize(static_cast<std::size_t>(H) + 1);
    for (int h = 0; h <= H; ++h) {
        std::vector<InterpPoint> pts;
        for (int j = 1; j <= jmax; ++j) {
            pts.push_back({Rational(j), at.entries[{h, j}]});
        }
        at.jpolys[h] = interpolate_poly(pts, 2 * h, j_var());
    }
    return at;
}

std::vector<MultiPoly> log_slices(const TruncSeries& f) {
    const TruncSeries l = series_log(f);
    return l.coeffs();
}

std::map<std::pair<int, int>, MultiPoly> log_coeffs(const ATable& at, const PerniciParams& params) {
    TruncSeries f(n_inv_var(), at.H);
    for (int s = 0; s <= at.H; ++s) {
        f.set_coeff(s, at.jpolys[s]);
    }
    const auto slices = log_slices(f);
    std::map<std::pair<int, int>, MultiPoly> out;
    for (int h = 0; h <= at.H; ++h) {
        for (int k = 0; k <= params.effective_jdeg(); ++k) {
            out[{k, h}] = slices[h].coefficient_in(j_var(), k);
        }
    }
    return out;
}

MultiPoly leading_value(const RValue& r, int h) {
    return (r.power(-h) - MultiPoly(2)) * frac(1, static_cast<long>(h + 1) * h);
}

std::vector<SliceRecord> IdentityReport::failures() const {
    std::vector<SliceRecord> out;
    for (const SliceRecord& s : slices) {
        if (!s.ok) {
            out.push_back(s);
        }
    }
    return out;
}

std::string IdentityReport::serialize() const {
    std::ostringstream os;
    os << (pass ? "pass" : "fail") << '\n';
    for (const SliceRecord& s : slices) {
        os << s.h << ' ' << s.k << ' ' << s.role << ' ' << (s.ok ? "ok" : "BAD") << " actual=" << s.actual
           << " expected=" << s.expected << '\n';
    }
    return os.str();
}

IdentityReport check_identities(const std::vector<MultiPoly>& slices, const RValue& r, int H, int jdeg,
                                bool check_leading) {
    IdentityReport rep;
    if (!slices.empty() && !slices[0].is_zero()) {
        rep.pass = false;
        rep.slices.push_back({0, 0, "vanish", slices[0].to_string(), "0", false});
    }
    for (int h = 1; h <= H && h < static_cast<int>(slices.size()); ++h) {
        const int top = std::max(jdeg, slices[h].max_degree_in(j_var()));
        for (int k = 0; k <= top; ++k) {
            const MultiPoly c = slices[h].coefficient_in(j_var(), k);
            SliceRecord rec{h, k, "info", c.to_string(), "", true};
            if (k >= h + 2) {
                rec.role = "vanish";
                rec.expected = "0";
                rec.ok = c.is_zero();
            } else if (k == h + 1 && check_leading) {
                const MultiPoly want = leading_value(r, h);
                rec.role = "leading";
                rec.expected = want.to_string();
                rec.ok = c == want;
            }
            rep.pass = rep.pass && rec.ok;
            rep.slices.push_back(std::move(rec));
        }
    }
    return rep;
}

IdentityReport check_16_17(const PerniciParams& params) {
    PerniciParams p = params;
    p.free_u = false;
    const ATable at = a_table(p);
    TruncSeries f(n_inv_var(), at.H);
    for (int s = 0; s <= at.H; ++s) {
        f.set_coeff(s, at.jpolys[s]);
    }
    return check_identities(log_slices(f), p.r, p.H, p.effective_jdeg(), true);
}

IdentityReport check_16_free_u(PerniciParams params) {
    params.free_u = true;
    const ATable at = a_table(params);
    TruncSeries f(n_inv_var(), at.H);
    for (int s = 0; s <= at.H; ++s) {
        f.set_coeff(s, at.jpolys[s]);
    }
    return check_identities(log_slices(f), params.r, params.H, params.effective_jdeg(), false);
}

void AwesomeSpec::validate(int H) const {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].z < 1) {
            throw std::invalid_argument("awesome: z must be a positive integer");
        }
        if (terms[i].z > H) {
            throw std::invalid_argument("awesome: z=" + std::to_string(terms[i].z) +
                                        " exceeds the truncation order H=" + std::to_string(H));
        }
        for (std::size_t k = 0; k < i; ++k) {
            if (terms[k].z == terms[i].z) {
                throw std::invalid_argument("awesome: repeated z=" + std::to_string(terms[i].z));
            }
            if (terms[k].c_name == terms[i].c_name) {
                throw std::invalid_argument("awesome: repeated coefficient name " + terms[i].c_name);
            }
        }
        (void)Var(terms[i].c_name);
    }
}

MultiPoly falling_factorial(Var v, int z) {
    MultiPoly out(1);
    for (int i = 0; i < z; ++i) {
        out = out * (MultiPoly(v) - MultiPoly(i));
    }
    return out;
}

std::vector<MultiPoly> awesome_log_slices(const AwesomeSpec& spec, const ATable& at, const PerniciParams& params) {
    spec.validate(at.H);
    const Var j = j_var();
    TruncSeries f(n_inv_var(), at.H);
    for (int s = 0; s <= at.H; ++s) {
        f.set_coeff(s, at.jpolys[s]);
    }
    for (const AwesomeTerm& term : spec.terms) {
        const MultiPoly lead = MultiPoly(Var(term.c_name)) * falling_factorial(j, term.z) * params.r.power(-term.z);
        const MultiPoly shifted_j = MultiPoly(j) - MultiPoly(term.z);
        for (int s = 0; s + term.z <= at.H; ++s) {
            const MultiPoly a_shift = at.jpolys[s].substitute(j, shifted_j);
            f.set_coeff(s + term.z, f.coeff(s + term.z) + lead * a_shift);
        }
    }
    return log_slices(f);
}

IdentityReport awesome_check(const AwesomeSpec& spec, const PerniciParams& params) {
    PerniciParams p = params;
    p.free_u = false;
    spec.validate(p.H);
    const ATable at = a_table(p);
    return check_identities(awesome_log_slices(spec, at, p), p.r, p.H, p.effective_jdeg(), true);
}

}  // namespace genius
