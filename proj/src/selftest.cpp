#include "genius/selftest.hpp"

#include "genius/bell.hpp"
#include "genius/conjlab.hpp"
#include "genius/ftransform.hpp"
#include "genius/graphlab.hpp"
#include "genius/interp.hpp"
#include "genius/pernici.hpp"
#include "genius/series.hpp"
#include "genius/stirlconf.hpp"

namespace genius {

namespace {

MultiPoly P(const char* text) {
    static const std::vector<std::string> laurent{"r", "n_inv"};
    return MultiPoly::parse(text, laurent);
}

TruncSeries S(const char* var, int order, std::vector<const char*> coeffs) {
    TruncSeries s{Var(var), order};
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        s.set_coeff(static_cast<int>(k), P(coeffs[k]));
    }
    return s;
}

bool same(const TruncSeries& s, std::vector<const char*> coeffs) {
    for (int k = 0; k <= s.order(); ++k) {
        const MultiPoly want = k < static_cast<int>(coeffs.size()) ? P(coeffs[k]) : MultiPoly();
        if (!(s.coeff(k) == want)) {
            return false;
        }
    }
    return true;
}

template <class E, class F>
bool throws(F&& f) {
    try {
        f();
    } catch (const E&) {
        return true;
    }
    return false;
}

std::vector<FitPoint> samples(std::initializer_list<std::pair<long, Rational>> pts) {
    std::vector<FitPoint> out;
    for (const auto& [x, y] : pts) {
        out.push_back({Rational(x), y});
    }
    return out;
}

}  // namespace

std::vector<SelfCase> selftest_cases() {
    std::vector<SelfCase> c;
    auto add = [&](const char* module, const char* name, std::function<bool()> f) {
        c.push_back({module, name, std::move(f)});
    };

    add("exactalg", "additive inverse", [] { return P("d1 + d2") + P("-d2") == P("d1"); });
    add("exactalg", "difference of squares", [] { return P("u2 + d1") * P("u2 - d1") == P("u2^2 - d1^2"); });
    add("exactalg", "laurent identity", [] { return P("r^-1") * P("r") == MultiPoly(1); });
    add("exactalg", "exp(x)", [] { return same(series_exp(S("x", 3, {"0", "1"})), {"1", "1", "1/2", "1/6"}); });
    add("exactalg", "exp(d1 x + d2 x^2)[x^2]",
        [] { return coeff_extract(series_exp(S("x", 2, {"0", "d1", "d2"})), 2) == P("d2 + 1/2*d1^2"); });
    add("exactalg", "log(1+x)", [] { return same(series_log(S("x", 3, {"1", "1"})), {"0", "1", "-1/2", "1/3"}); });
    add("exactalg", "sqrt(1-4x)",
        [] { return same(series_sqrt(S("x", 3, {"1", "-4"})), {"1", "-2", "-2", "-4"}); });
    add("exactalg", "1/(1-x)", [] { return same(series_recip(S("x", 3, {"1", "-1"})), {"1", "1", "1", "1"}); });
    add("exactalg", "coeff range check",
        [] { return throws<std::out_of_range>([] { coeff_extract(S("x", 2, {"1"}), 3); }); });
    add("exactalg", "interpolate x^2", [] {
        std::vector<InterpPoint> pts{{Rational(0), P("0")}, {Rational(1), P("1")}, {Rational(2), P("4")}};
        return interpolate_poly(pts, 2, Var("x")) == P("x^2");
    });
    add("exactalg", "interpolation mismatch", [] {
        std::vector<InterpPoint> pts{{Rational(0), P("0")}, {Rational(1), P("1")}, {Rational(2), P("4")}};
        return throws<InterpolationError>([&] { interpolate_poly(pts, 1, Var("x")); });
    });
    add("exactalg", "fit 1/(p+1)", [] {
        const auto pts = samples({{1, frac(1, 2)}, {2, frac(1, 3)}, {3, frac(1, 4)}, {4, frac(1, 5)}});
        const RationalFn f = fit_ratfn(pts, 0, 1);
        return f.num_poly() == MultiPoly(1) && f.den_poly() == P("p + 1");
    });
    add("exactalg", "fit p with (0,1) has no solution", [] {
        const auto pts = samples({{1, Rational(1)}, {2, Rational(2)}, {3, Rational(3)}});
        return throws<FitError>([&] { fit_ratfn(pts, 0, 1); });
    });

    add("bellkit", "B_2", [] { return bell_complete(2, {P("x1"), P("x2")}) == P("x1^2 + x2"); });
    add("bellkit", "B_3", [] {
        return bell_complete(3, {P("x1"), P("x2"), P("x3")}) == P("x1^3 + 3*x1*x2 + x3");
    });
    add("bellkit", "d2 elimination", [] { return eliminate_top_d(BellContext::make(2)) == P("-1/2*d1^2"); });
    add("bellkit", "d3 elimination",
        [] { return eliminate_top_d(BellContext::make(3)) == P("-d1*d2 - 1/6*d1^3"); });
    add("bellkit", "convolution equals direct, p=3", [] {
        const BellContext ctx = BellContext::make(3);
        return bell_lhs_eq6(ctx) == bell_lhs_direct(ctx);
    });

    add("ftransform", "p=2", [] { return solve_F(BellContext::make(2)).at(2) == P("u2 + d1"); });
    add("ftransform", "p=3", [] {
        const FSolution s = solve_F(BellContext::make(3));
        return s.at(2) == P("u2 + 1/2*d1") && s.at(3) == P("u3 + d2 + u2*d1 + 1/2*d1^2");
    });
    add("ftransform", "verify p<=6", [] {
        for (int p = 2; p <= 6; ++p) {
            if (!verify_transform(solve_F(BellContext::make(p))).ok) {
                return false;
            }
        }
        return true;
    });
    add("ftransform", "perturbed F_2 caught at y^2", [] {
        FSolution s = solve_F(BellContext::make(3));
        s.F[2] += MultiPoly(1);
        const TransformCheck chk = verify_transform(s);
        return !chk.ok && chk.witness && chk.witness->k == 2;
    });

    add("conjlab", "conj1 p<=6", [] {
        for (int p = 2; p <= 6; ++p) {
            if (!check_conj1(p).pass) {
                return false;
            }
        }
        return true;
    });
    add("conjlab", "conj1 fault", [] {
        FSolution s = solve_F(BellContext::make(3));
        s.F[2] += P("u2^2");
        const Conj1Report rep = check_conj1(s);
        return !rep.pass && rep.witness && rep.witness->first == 2 && rep.witness->second == "u2^2";
    });
    add("conjlab", "trace d1 in F_2", [] {
        const CoeffTrace t = trace_coefficient(2, Monomial(Var("d1"), 1), 2, 3);
        return t.samples.size() == 2 && t.samples[0].second == Rational(1) && t.samples[1].second == frac(1, 2);
    });
    add("conjlab", "constant trace is a counterexample", [] {
        CoeffTrace t;
        for (int p = 2; p <= 9; ++p) {
            t.samples.emplace_back(p, Rational(5));
        }
        return classify_trace(t, 3, 2).verdict == Conj2Verdict::fitted_not_vanishing;
    });

    add("pernici", "T_r to x^1", [] {
        const TruncSeries t = t_series(RValue::symbolic(), 2);
        return t.coeff(0) == MultiPoly(1) && t.coeff(1) == P("r");
    });
    add("pernici", "M_1 and M_2", [] {
        const RValue r = RValue::symbolic();
        const auto u = u_coeffs(r, 2);
        return m_j(1, r, u) == P("n*r") && m_j(2, r, u) == P("1/2*n^2*r^2") - P("n") * u[2] * frac(1, 2);
    });
    add("pernici", "a_h(r,1) = 0 and a_1(r,2)", [] {
        PerniciParams params;
        params.H = 2;
        const ATable at = a_table(params);
        const auto u = u_coeffs(params.r, 2);
        return at.entries.at({1, 1}).is_zero() && at.entries.at({2, 1}).is_zero() &&
               at.entries.at({1, 2}) == -(u[2] * P("r^-2"));
    });
    add("pernici", "identities at H=2", [] {
        PerniciParams params;
        params.H = 2;
        return check_16_17(params).pass && check_16_free_u(params).pass;
    });

    add("graphlab", "mbar", [] { return mbar(4, 1) == 6 && mbar(6, 3) == 15 && mbar(8, 0) == 1; });
    add("graphlab", "K33 matchings", [] {
        return match_counts(complete_bipartite(3)) == MatchVector{1, 9, 18, 6};
    });
    add("graphlab", "C6 matchings", [] { return match_counts(cycle_graph(3)) == MatchVector{1, 6, 9, 2}; });
    add("graphlab", "K33 positive", [] { return positivity(complete_bipartite(3)).pass; });
    add("graphlab", "one class for (3,2) and (3,3)", [] {
        return enum_regular(3, 2).classes.size() == 1 && enum_regular(3, 3).classes.size() == 1;
    });
    add("graphlab", "forced sample", [] { return rand_regular(3, 3, 1) == complete_bipartite(3); });

    add("stirlconf", "stirling1", [] {
        return stirling1(3, 3) == 1 && stirling1(3, 2) == 3 && stirling1(3, 1) == 2;
    });
    add("stirlconf", "P_0 and P_1", [] {
        return pw_poly(0) == MultiPoly(1) && pw_poly(1) == P("1/2*n^2 - 1/2*n");
    });
    add("stirlconf", "configuration counts", [] {
        return list_weighted_configs(2, 0).size() == 3 && list_weighted_configs(3, 0).size() == 13;
    });
    add("stirlconf", "g=2 w=0 sums to zero", [] {
        Rational sum;
        for (const auto& cfg : list_weighted_configs(2, 0)) {
            sum += config_eval(cfg, {Rational(1), Rational(2)});
        }
        return sum.is_zero() && chapman_check(3, 1, true).zero;
    });
    return c;
}

}  // namespace genius
