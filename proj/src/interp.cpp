#include "genius/interp.hpp"

#include <algorithm>

namespace genius {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
    }
}

UniPoly UniPoly::from_multi(const MultiPoly& p, Var v) {
    std::vector<Rational> c;
    for (const Term& t : p.terms()) {
        const auto& f = t.mono.factors();
        if (f.size() > 1 || (f.size() == 1 && !(f[0].var == v)) || (f.size() == 1 && f[0].exp < 0)) {
            throw std::invalid_argument("not a polynomial in " + v.name() + ": " + p.to_string());
        }
        const std::size_t e = f.empty() ? 0 : static_cast<std::size_t>(f[0].exp);
        if (c.size() <= e) {
            c.resize(e + 1);
        }
        c[e] = t.coef;
    }
    return UniPoly(std::move(c));
}

Rational UniPoly::operator()(const Rational& x) const {
    Rational r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r = r * x + *it;
    }
    return r;
}

MultiPoly UniPoly::to_multi(Var v) const {
    std::vector<Term> t;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i].is_zero()) {
            t.push_back({Monomial(v, static_cast<int>(i)), c_[i]});
        }
    }
    return MultiPoly::from_terms(std::move(t));
}

UniPoly UniPoly::monic() const {
    if (c_.empty()) {
        return *this;
    }
    const Rational inv = lead().inverse();
    std::vector<Rational> c = c_;
    for (Rational& x : c) {
        x *= inv;
    }
    return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.c_.empty() || b.c_.empty()) {
        return {};
    }
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            c[i + j].add_product(a.c_[i], b.c_[j]);
        }
    }
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        c[i] += a.c_[i];
    }
    for (std::size_t i = 0; i < b.c_.size(); ++i) {
        c[i] -= b.c_[i];
    }
    return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    std::vector<Rational> rem = a.c_;
    if (a.degree() < b.degree()) {
        return {UniPoly(), a};
    }
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const Rational inv = b.lead().inverse();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        const Rational f = rem[static_cast<std::size_t>(k + b.degree())] * inv;
        q[static_cast<std::size_t>(k)] = f;
        if (f.is_zero()) {
            continue;
        }
        for (int i = 0; i <= b.degree(); ++i) {
            rem[static_cast<std::size_t>(k + i)] -= f * b.c_[static_cast<std::size_t>(i)];
        }
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
}

UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// ---------------------------------------------------------------- interpolation

MultiPoly interpolate_poly(const std::vector<InterpPoint>& points, int degbound, Var var) {
    if (degbound < 0) {
        throw std::invalid_argument("negative degree bound");
    }
    const std::size_t n = static_cast<std::size_t>(degbound) + 1;
    if (points.size() < n) {
        throw InterpolationError("interpolate_poly: need " + std::to_string(n) + " points, got " +
                                     std::to_string(points.size()),
                                 static_cast<std::size_t>(-1));
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (points[i].x == points[j].x) {
                throw std::invalid_argument("interpolate_poly: repeated abscissa " + points[i].x.to_string());
            }
        }
    }
    // Divided differences in place: dd[i] becomes f[x_0..x_i].
    std::vector<MultiPoly> dd;
    dd.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        dd.push_back(points[i].y);
    }
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) * (points[i].x - points[i - level].x).inverse();
        }
    }
    // Horner on the Newton form.
    MultiPoly result = dd[n - 1];
    const MultiPoly x(var);
    for (std::size_t i = n - 1; i-- > 0;) {
        result = result * (x - MultiPoly(points[i].x)) + dd[i];
    }
    for (std::size_t i = n; i < points.size(); ++i) {
        const MultiPoly got = result.evaluate(var, points[i].x);
        if (!(got == points[i].y)) {
            throw InterpolationError("interpolate_poly: degree-" + std::to_string(degbound) +
                                         " fit fails validation at " + var.name() + "=" + points[i].x.to_string() +
                                         " (expected " + points[i].y.to_string() + ", got " + got.to_string() + ")",
                                     i);
        }
    }
    return result;
}

// ---------------------------------------------------------------- rational functions

RationalFn::RationalFn(Var var, UniPoly num, UniPoly den) : var_(var) {
    if (den.is_zero()) {
        throw std::domain_error("rational function with zero denominator");
    }
    const UniPoly g = gcd(num, den);
    num_ = divmod(num, g).first;
    den_ = divmod(den, g).first;
    const Rational lead = den_.lead();
    num_ = UniPoly([&] {
        std::vector<Rational> c = num_.coeffs();
        for (Rational& x : c) {
            x /= lead;
        }
        return c;
    }());
    den_ = den_.monic();
}

Rational RationalFn::operator()(const Rational& x) const {
    const Rational d = den_(x);
    if (d.is_zero()) {
        throw std::domain_error("rational function has a pole at " + x.to_string());
    }
    return num_(x) / d;
}

std::string RationalFn::to_string() const {
    const std::string n = num_.to_multi(var_).to_string();
    if (den_.degree() == 0) {
        return n;
    }
    return "(" + n + ")/(" + den_.to_multi(var_).to_string() + ")";
}

std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows, std::size_t cols) {
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c].is_zero()) {
            ++piv;
        }
        if (piv == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[piv]);
        const Rational inv = rows[r][c].inverse();
        for (Rational& x : rows[r]) {
            x *= inv;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && !rows[i][c].is_zero()) {
                const Rational f = rows[i][c];
                for (std::size_t k = c; k < cols; ++k) {
                    rows[i][k] -= f * rows[r][k];
                }
            }
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) {
            continue;
        }
        std::vector<Rational> v(cols);
        v[free] = Rational(1);
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
            v[pivot_cols[i]] = -rows[i][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

RationalFn fit_ratfn(const std::vector<FitPoint>& points, int deg_num, int deg_den, Var var) {
    if (deg_num < 0 || deg_den < 0) {
        throw std::invalid_argument("fit_ratfn: negative degree");
    }
    const std::size_t unknowns = static_cast<std::size_t>(deg_num + deg_den + 2);
    if (points.size() < unknowns) {
        throw FitError(FitError::Kind::too_few_points, "fit_ratfn: need at least " + std::to_string(unknowns) +
                                                           " points, got " + std::to_string(points.size()));
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (points[i].x == points[j].x) {
                throw std::invalid_argument("fit_ratfn: repeated abscissa " + points[i].x.to_string());
            }
        }
    }
    // Unknown vector: n_0..n_degN, d_0..d_degD. Row i: N(x_i) - y_i D(x_i) = 0.
    std::vector<std::vector<Rational>> rows;
    rows.reserve(points.size());
    for (const FitPoint& pt : points) {
        std::vector<Rational> row(unknowns);
        Rational xp(1);
        for (int k = 0; k <= std::max(deg_num, deg_den); ++k) {
            if (k <= deg_num) {
                row[static_cast<std::size_t>(k)] = xp;
            }
            if (k <= deg_den) {
                row[static_cast<std::size_t>(deg_num + 1 + k)] = -(pt.y * xp);
            }
            xp *= pt.x;
        }
        rows.push_back(std::move(row));
    }
    const auto basis = nullspace(std::move(rows), unknowns);
    if (basis.empty()) {
        throw FitError(FitError::Kind::no_solution, "fit_ratfn: no nontrivial solution for degrees (" +
                                                        std::to_string(deg_num) + "," + std::to_string(deg_den) + ")");
    }
    // Any kernel vector gives the same reduced function; take the first one
    // with a nonzero denominator.
    for (const auto& v : basis) {
        std::vector<Rational> n(v.begin(), v.begin() + deg_num + 1);
        std::vector<Rational> d(v.begin() + deg_num + 1, v.end());
        UniPoly num(std::move(n));
        UniPoly den(std::move(d));
        if (den.is_zero()) {
            continue;
        }
        RationalFn f(var, num, den);
        for (const FitPoint& pt : points) {
            if (f.den()(pt.x).is_zero()) {
                throw FitError(FitError::Kind::pole_at_sample,
                               "fit_ratfn: fitted denominator vanishes at " + var.name() + "=" + pt.x.to_string());
            }
            if (!(f(pt.x) == pt.y)) {
                throw FitError(FitError::Kind::validation_failure, "fit_ratfn: fit " + f.to_string() +
                                                                       " misses point " + pt.x.to_string() + " -> " +
                                                                       pt.y.to_string());
            }
        }
        return f;
    }
    throw FitError(FitError::Kind::no_solution, "fit_ratfn: only solutions with zero denominator");
}

}  // namespace genius
