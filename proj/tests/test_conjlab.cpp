#include <doctest.h>

#include "genius/conjlab.hpp"

using namespace genius;

namespace {

Monomial mono(const char* s) { return MultiPoly::parse(s).terms()[0].mono; }

}  // namespace

TEST_CASE("conjecture 1 on small p") {
    for (int p = 2; p <= 7; ++p) {
        CAPTURE(p);
        const Conj1Report rep = check_conj1(p);
        CHECK(rep.pass);
        CHECK(rep.max_u_degree == 1);
    }
    CHECK(check_conj1(3).has_u_free_monomials);
}

TEST_CASE("conjecture 1 fault injection") {
    FSolution sol = solve_F(BellContext::make(4));
    sol.F[2] += MultiPoly::parse("u2^2");
    const Conj1Report rep = check_conj1(sol);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->first == 2);
    CHECK(rep.witness->second == "u2^2");
}

TEST_CASE("coefficient traces") {
    const CoeffTrace d1 = trace_coefficient(2, mono("d1"), 2, 3);
    REQUIRE(d1.samples.size() == 2);
    CHECK(d1.samples[0] == std::make_pair(2, Rational(1)));
    CHECK(d1.samples[1] == std::make_pair(3, frac(1, 2)));

    const CoeffTrace u2 = trace_coefficient(2, mono("u2"), 2, 7);
    for (const auto& [p, v] : u2.samples) {
        CHECK(v == 1);
    }

    const CoeffTrace mixed = trace_coefficient(3, mono("u2*d1"), 3, 4);
    REQUIRE(mixed.samples.size() == 2);
    CHECK(mixed.samples[0].second == 1);

    const CoeffTrace skip = trace_coefficient(2, mono("d3"), 2, 5);
    CHECK(skip.skipped == std::vector<int>{2, 3});
    CHECK(skip.samples.size() == 2);
}

TEST_CASE("conjecture 2 for i = 2") {
    const Conj2Report rep = check_conj2(2, 2, 11, 4, 2);
    CHECK(rep.leading_ok);
    CHECK(rep.status() == "pass");
    CHECK(rep.count(Conj2Verdict::fitted_not_vanishing) == 0);
    CHECK(rep.count(Conj2Verdict::leading_term) == 1);
    bool saw_d1 = false;
    for (const MonomialVerdict& m : rep.monomials) {
        if (m.monomial == "d1") {
            saw_d1 = true;
            CHECK(m.verdict == Conj2Verdict::fitted_vanishing);
            CHECK(m.deg_num < m.deg_den);
        }
    }
    CHECK(saw_d1);
}

TEST_CASE("fitted functions reproduce every sample") {
    const Conj2Report rep = check_conj2(3, 3, 12, 4, 2);
    const Var p("p");
    for (const MonomialVerdict& m : rep.monomials) {
        if (m.verdict != Conj2Verdict::fitted_vanishing) {
            continue;
        }
        std::vector<FitPoint> pts;
        for (const auto& [pv, v] : m.samples) {
            pts.push_back({pv, v});
        }
        const RationalFn f = fit_ratfn(pts, m.deg_num, m.deg_den, p);
        CHECK(f.to_string() == m.fit);
    }
}

TEST_CASE("synthetic constant trace is a counterexample") {
    CoeffTrace tr;
    tr.i = 2;
    tr.monomial = mono("d1");
    for (int p = 2; p <= 11; ++p) {
        tr.samples.emplace_back(p, Rational(5));
    }
    const MonomialVerdict v = classify_trace(tr, 4, 2);
    CHECK(v.verdict == Conj2Verdict::fitted_not_vanishing);
    CHECK(v.deg_num == 0);
    CHECK(v.deg_den == 0);
}

TEST_CASE("trace beyond the budget is inconclusive") {
    CoeffTrace tr;
    tr.i = 2;
    tr.monomial = mono("d1");
    // 1/p^5 needs five denominator degrees
    for (int p = 2; p <= 11; ++p) {
        tr.samples.emplace_back(p, Rational(1) / Rational(p).pow(5));
    }
    CHECK(classify_trace(tr, 4, 2).verdict == Conj2Verdict::no_fit);
    CHECK(classify_trace(tr, 5, 2).verdict == Conj2Verdict::fitted_vanishing);
}

TEST_CASE("conjecture 2 window checks") {
    CHECK(conj2_min_window(4, 2) == 8);
    CHECK_THROWS(trace_coefficient(2, mono("d1"), 3, 3));
    CHECK_THROWS(check_conj2(2, 2, 6, 4, 2));
}

TEST_CASE("verdicts are deterministic") {
    const Conj2Report a = check_conj2(2, 2, 10, 3, 2);
    const Conj2Report b = check_conj2(2, 2, 10, 3, 2);
    REQUIRE(a.monomials.size() == b.monomials.size());
    for (std::size_t k = 0; k < a.monomials.size(); ++k) {
        CHECK(a.monomials[k].monomial == b.monomials[k].monomial);
        CHECK(a.monomials[k].fit == b.monomials[k].fit);
    }
}
