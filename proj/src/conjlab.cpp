#include "genius/conjlab.hpp"

#include <algorithm>
#include <set>

namespace genius {

int u_degree(const Monomial& m, const BellContext& ctx) {
    int deg = 0;
    for (const Factor& f : m.factors()) {
        if (f.var.prefix() == ctx.u_prefix && f.var.index() >= 2) {
            deg += f.exp;
        }
    }
    return deg;
}

Conj1Report check_conj1(const FSolution& sol) {
    Conj1Report rep;
    rep.p = sol.p();
    for (int i = 2; i <= sol.solved_up_to(); ++i) {
        for (const Term& t : sol.at(i).terms()) {
            const int ud = u_degree(t.mono, sol.ctx);
            rep.max_u_degree = std::max(rep.max_u_degree, ud);
            if (ud == 0) {
                rep.has_u_free_monomials = true;
            }
            if (ud >= 2 && !rep.witness) {
                rep.pass = false;
                rep.witness = std::make_pair(i, t.mono.to_string());
            }
        }
    }
    return rep;
}

Conj1Report check_conj1(int p) { return check_conj1(solve_F(BellContext::make(p))); }

SolutionWindow::SolutionWindow(int pmin, int pmax, int max_index) : pmin_(pmin), pmax_(pmax) {
    if (pmin < 2 || pmax < pmin) {
        throw std::invalid_argument("bad p window " + std::to_string(pmin) + ".." + std::to_string(pmax));
    }
    for (int p = pmin; p <= pmax; ++p) {
        sols_.push_back(solve_F(BellContext::make(p), max_index));
    }
}

const FSolution& SolutionWindow::at(int p) const {
    if (p < pmin_ || p > pmax_) {
        throw std::out_of_range("p=" + std::to_string(p) + " outside the solved window");
    }
    return sols_[static_cast<std::size_t>(p - pmin_)];
}

bool monomial_valid_at(const Monomial& m, int p, const BellContext& ctx) {
    for (const Factor& f : m.factors()) {
        const std::string prefix = f.var.prefix();
        if (prefix == ctx.d_prefix && f.var.index() >= p) {
            return false;
        }
        if (prefix == ctx.u_prefix && f.var.index() > p) {
            return false;
        }
    }
    return true;
}

CoeffTrace trace_coefficient(int i, const Monomial& monomial, const SolutionWindow& window) {
    CoeffTrace tr;
    tr.i = i;
    tr.monomial = monomial;
    for (int p = window.pmin(); p <= window.pmax(); ++p) {
        const FSolution& sol = window.at(p);
        if (!monomial_valid_at(monomial, p, sol.ctx)) {
            tr.skipped.push_back(p);
            continue;
        }
        tr.samples.emplace_back(p, sol.at(i).coefficient(monomial));
    }
    return tr;
}

CoeffTrace trace_coefficient(int i, const Monomial& monomial, int pmin, int pmax) {
    if (pmin < std::max(i, 2) || pmax < pmin + 1) {
        throw std::invalid_argument("trace_coefficient: need pmin >= max(i,2) and pmax >= pmin+1");
    }
    return trace_coefficient(i, monomial, SolutionWindow(pmin, pmax, i));
}

std::string to_string(Conj2Verdict v) {
    switch (v) {
        case Conj2Verdict::leading_term:
            return "leading-term";
        case Conj2Verdict::fitted_vanishing:
            return "fitted+vanishing";
        case Conj2Verdict::fitted_not_vanishing:
            return "fitted+NOT-vanishing";
        case Conj2Verdict::no_fit:
            return "no-fit-within-budget";
    }
    return "?";
}

MonomialVerdict classify_trace(const CoeffTrace& trace, int budget, int holdout) {
    MonomialVerdict mv;
    mv.monomial = trace.monomial.to_string();
    mv.samples = trace.samples;
    bool any_zero = false;
    bool any_nonzero = false;
    for (const auto& [p, c] : trace.samples) {
        (c.is_zero() ? any_zero : any_nonzero) = true;
    }
    mv.support_changes = any_zero && any_nonzero;

    const std::size_t n = trace.samples.size();
    if (holdout < 0 || n < static_cast<std::size_t>(holdout) + 2) {
        return mv;
    }
    std::vector<FitPoint> fit;
    std::vector<FitPoint> held;
    for (std::size_t k = 0; k < n; ++k) {
        FitPoint pt{Rational(trace.samples[k].first), trace.samples[k].second};
        (k + static_cast<std::size_t>(holdout) < n ? fit : held).push_back(pt);
    }
    for (int total = 0; total <= budget; ++total) {
        for (int dd = 0; dd <= total; ++dd) {
            const int dn = total - dd;
            if (fit.size() < static_cast<std::size_t>(dn + dd + 2)) {
                continue;
            }
            try {
                const RationalFn f = fit_ratfn(fit, dn, dd);
                bool holds = true;
                for (const FitPoint& pt : held) {
                    if (f.den()(pt.x).is_zero() || !(f(pt.x) == pt.y)) {
                        holds = false;
                        break;
                    }
                }
                if (!holds) {
                    continue;
                }
                mv.deg_num = f.num().degree();
                mv.deg_den = f.den().degree();
                mv.fit = f.to_string();
                mv.verdict =
                    f.vanishes_at_infinity() ? Conj2Verdict::fitted_vanishing : Conj2Verdict::fitted_not_vanishing;
                return mv;
            } catch (const FitError&) {
                continue;
            }
        }
    }
    return mv;
}

int Conj2Report::count(Conj2Verdict v) const {
    return static_cast<int>(
        std::count_if(monomials.begin(), monomials.end(), [v](const MonomialVerdict& m) { return m.verdict == v; }));
}

std::string Conj2Report::status() const {
    if (!leading_ok || count(Conj2Verdict::fitted_not_vanishing) > 0) {
        return "fail";
    }
    if (count(Conj2Verdict::no_fit) > 0) {
        return "inconclusive";
    }
    return "pass";
}

int conj2_min_window(int budget, int holdout) { return budget + 2 + holdout; }

Conj2Report check_conj2(int i, int pmin, int pmax, int budget, int holdout) {
    if (i < 2) {
        throw std::invalid_argument("check_conj2: i must be at least 2");
    }
    if (pmin < i) {
        throw std::invalid_argument("check_conj2: window must start at p >= i");
    }
    if (budget < 0 || holdout < 0) {
        throw std::invalid_argument("check_conj2: negative budget or holdout");
    }
    if (pmax - pmin + 1 < conj2_min_window(budget, holdout)) {
        throw std::invalid_argument("check_conj2: window too small (" + std::to_string(pmax - pmin + 1) +
                                    " < " + std::to_string(conj2_min_window(budget, holdout)) + ")");
    }
    Conj2Report rep;
    rep.i = i;
    rep.pmin = pmin;
    rep.pmax = pmax;
    rep.budget = budget;
    rep.holdout = holdout;

    const SolutionWindow window(pmin, pmax, i);
    const BellContext& ctx0 = window.at(pmin).ctx;
    const Monomial lead(ctx0.u_var(i), 1);

    auto by_grlex = [](const Monomial& a, const Monomial& b) { return grlex(a, b) > 0; };
    std::set<Monomial, decltype(by_grlex)> support(by_grlex);
    for (int p = pmin; p <= pmax; ++p) {
        const MultiPoly& f = window.at(p).at(i);
        if (!(f.coefficient(lead) == Rational(1))) {
            rep.leading_ok = false;
        }
        for (const Term& t : f.terms()) {
            support.insert(t.mono);
        }
    }
    // The pure u_i term is reported first, then F_i - u_i by monomial.
    {
        MonomialVerdict mv;
        mv.monomial = lead.to_string();
        mv.verdict = Conj2Verdict::leading_term;
        mv.samples = trace_coefficient(i, lead, window).samples;
        rep.monomials.push_back(std::move(mv));
    }
    for (const Monomial& m : support) {
        if (m == lead) {
            continue;
        }
        rep.monomials.push_back(classify_trace(trace_coefficient(i, m, window), budget, holdout));
    }
    return rep;
}

}  // namespace genius
