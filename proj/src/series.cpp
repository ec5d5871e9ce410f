#include "genius/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace genius {

TruncSeries::TruncSeries(Var var, int order) : var_(var), order_(order) {
    if (order < 0) {
        throw std::invalid_argument("negative truncation order");
    }
    c_.resize(static_cast<std::size_t>(order) + 1);
}

TruncSeries::TruncSeries(Var var, int order, std::vector<MultiPoly> coeffs) : TruncSeries(var, order) {
    const std::size_t n = std::min(coeffs.size(), c_.size());
    for (std::size_t i = 0; i < n; ++i) {
        c_[i] = std::move(coeffs[i]);
    }
}

TruncSeries TruncSeries::from_poly(Var var, int order, const MultiPoly& p) {
    TruncSeries s(var, order);
    if (p.is_zero()) {
        return s;
    }
    if (p.min_degree_in(var) < 0) {
        throw std::domain_error("negative power of the series variable " + var.name());
    }
    const int top = std::min(order, p.max_degree_in(var));
    for (int k = 0; k <= top; ++k) {
        s.c_[k] = p.coefficient_in(var, k);
    }
    return s;
}

const MultiPoly& TruncSeries::coeff(int k) const {
    if (k < 0 || k > order_) {
        throw std::out_of_range("coefficient index " + std::to_string(k) + " outside 0.." + std::to_string(order_));
    }
    return c_[k];
}

void TruncSeries::set_coeff(int k, MultiPoly value) {
    if (k < 0 || k > order_) {
        throw std::out_of_range("coefficient index " + std::to_string(k) + " outside 0.." + std::to_string(order_));
    }
    c_[k] = std::move(value);
}

TruncSeries TruncSeries::truncate(int order) const {
    TruncSeries s(var_, std::min(order, order_));
    for (int k = 0; k <= s.order_; ++k) {
        s.c_[k] = c_[k];
    }
    return s;
}

MultiPoly TruncSeries::to_poly() const {
    MultiPoly p;
    for (int k = 0; k <= order_; ++k) {
        if (!c_[k].is_zero()) {
            p += c_[k] * MultiPoly(Monomial(var_, k));
        }
    }
    return p;
}

void TruncSeries::check_compatible(const TruncSeries& o) const {
    if (!(var_ == o.var_)) {
        throw std::invalid_argument("series variable mismatch: " + var_.name() + " vs " + o.var_.name());
    }
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    check_compatible(o);
    *this = truncate(o.order_);
    for (int k = 0; k <= order_; ++k) {
        c_[k] += o.c_[k];
    }
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    check_compatible(o);
    *this = truncate(o.order_);
    for (int k = 0; k <= order_; ++k) {
        c_[k] -= o.c_[k];
    }
    return *this;
}

TruncSeries& TruncSeries::operator*=(const MultiPoly& c) {
    for (MultiPoly& x : c_) {
        x = x * c;
    }
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check_compatible(b);
    const int order = std::min(a.order_, b.order_);
    TruncSeries r(a.var_, order);
    for (int t = 0; t <= order; ++t) {
        PolySum acc;
        for (int i = 0; i <= t; ++i) {
            acc.add_product(a.c_[i], b.c_[t - i]);
        }
        r.c_[t] = acc.take();
    }
    return r;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.var_ == b.var_ && a.order_ == b.order_ && a.c_ == b.c_;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) { return a * b; }

TruncSeries series_exp(const TruncSeries& s) {
    if (!s.coeff(0).is_zero()) {
        throw std::domain_error("series_exp: constant term must be zero");
    }
    // t E_t = sum_{k=1}^t k S_k E_{t-k}
    const int n = s.order();
    std::vector<MultiPoly> e(static_cast<std::size_t>(n) + 1);
    e[0] = MultiPoly(1);
    for (int t = 1; t <= n; ++t) {
        PolySum acc;
        for (int k = 1; k <= t; ++k) {
            acc.add_product(s.coeff(k), e[t - k], frac(k, t));
        }
        e[t] = acc.take();
    }
    return TruncSeries(s.var(), n, std::move(e));
}

TruncSeries series_log(const TruncSeries& s) {
    if (!(s.coeff(0) == MultiPoly(1))) {
        throw std::domain_error("series_log: constant term must be 1");
    }
    // t L_t = t S_t - sum_{k=1}^{t-1} k L_k S_{t-k}
    const int n = s.order();
    std::vector<MultiPoly> l(static_cast<std::size_t>(n) + 1);
    for (int t = 1; t <= n; ++t) {
        PolySum acc;
        acc.add(s.coeff(t));
        for (int k = 1; k < t; ++k) {
            acc.add_product(l[k], s.coeff(t - k), frac(-k, t));
        }
        l[t] = acc.take();
    }
    return TruncSeries(s.var(), n, std::move(l));
}

TruncSeries series_sqrt(const TruncSeries& s) {
    if (!(s.coeff(0) == MultiPoly(1))) {
        throw std::domain_error("series_sqrt: constant term must be 1");
    }
    // 2 Q_t = S_t - sum_{k=1}^{t-1} Q_k Q_{t-k}
    const int n = s.order();
    std::vector<MultiPoly> q(static_cast<std::size_t>(n) + 1);
    q[0] = MultiPoly(1);
    const Rational half = frac(1, 2);
    for (int t = 1; t <= n; ++t) {
        PolySum acc;
        acc.add(s.coeff(t), half);
        for (int k = 1; k < t; ++k) {
            acc.add_product(q[k], q[t - k], -half);
        }
        q[t] = acc.take();
    }
    return TruncSeries(s.var(), n, std::move(q));
}

TruncSeries series_recip(const TruncSeries& s) {
    const MultiPoly& c0 = s.coeff(0);
    if (c0.size() != 1) {
        throw std::domain_error("series_recip: constant term " + c0.to_string() + " is not invertible");
    }
    const Term& lead = c0.terms()[0];
    for (const Factor& f : lead.mono.factors()) {
        if (!f.var.laurent()) {
            throw std::domain_error("series_recip: constant term " + c0.to_string() + " is not invertible");
        }
    }
    const MultiPoly inv(lead.mono.inverse(), lead.coef.inverse());
    // R_t = -inv * sum_{k=1}^t S_k R_{t-k}
    const int n = s.order();
    std::vector<MultiPoly> r(static_cast<std::size_t>(n) + 1);
    r[0] = inv;
    for (int t = 1; t <= n; ++t) {
        PolySum acc;
        for (int k = 1; k <= t; ++k) {
            acc.add_product(s.coeff(k), r[t - k]);
        }
        r[t] = -(acc.take() * inv);
    }
    return TruncSeries(s.var(), n, std::move(r));
}

TruncSeries series_pow(const TruncSeries& s, long k) {
    if (k < 0) {
        throw std::invalid_argument("series_pow: negative exponent");
    }
    if (!(s.coeff(0) == MultiPoly(1))) {
        throw std::domain_error("series_pow: constant term must be 1");
    }
    // t P_t = sum_{m=1}^t ((k+1) m - t) S_m P_{t-m}
    const int n = s.order();
    std::vector<MultiPoly> p(static_cast<std::size_t>(n) + 1);
    p[0] = MultiPoly(1);
    for (int t = 1; t <= n; ++t) {
        PolySum acc;
        for (int m = 1; m <= t; ++m) {
            acc.add_product(s.coeff(m), p[t - m], frac((k + 1) * m - t, t));
        }
        p[t] = acc.take();
    }
    return TruncSeries(s.var(), n, std::move(p));
}

const MultiPoly& coeff_extract(const TruncSeries& s, int k) { return s.coeff(k); }

Rational poly_coeff_extract(const MultiPoly& p, const Monomial& m) { return p.coefficient(m); }

}  // namespace genius
