#include <doctest.h>

#include <vector>

#include "genius/bell.hpp"
#include "genius/series.hpp"

using namespace genius;

namespace {

MultiPoly P(const char* s) { return MultiPoly::parse(s); }

std::vector<MultiPoly> xs(int m) {
    std::vector<MultiPoly> out;
    for (int k = 1; k <= m; ++k) {
        out.push_back(MultiPoly(indexed("x", k)));
    }
    return out;
}

// m! [x^m] exp(sum a_k x^k) with a_k = x_k / k!.
MultiPoly bell_via_exp(int m) {
    std::vector<MultiPoly> c(m + 1);
    for (int k = 1; k <= m; ++k) {
        c[k] = MultiPoly(indexed("x", k)) * (Rational(1) / Rational(factorial(k)));
    }
    const TruncSeries e = series_exp(TruncSeries(Var("t"), m, c));
    return e.coeff(m) * Rational(factorial(m));
}

}  // namespace

TEST_CASE("complete Bell polynomials, small cases") {
    CHECK(bell_complete(0, {}) == MultiPoly(1));
    CHECK(bell_complete(2, xs(2)) == P("x1^2 + x2"));
    CHECK(bell_complete(3, xs(3)) == P("x1^3 + 3*x1*x2 + x3"));
    CHECK_THROWS(bell_complete(3, xs(2)));
}

TEST_CASE("complete Bell polynomials match the exponential generating function") {
    for (int m = 1; m <= 10; ++m) {
        CAPTURE(m);
        CHECK(bell_complete(m, xs(m)) == bell_via_exp(m));
    }
    const auto all = bell_complete_all(6, xs(6));
    REQUIRE(all.size() == 7);
    CHECK(all[4] == bell_complete(4, xs(4)));
}

TEST_CASE("top d elimination") {
    CHECK(eliminate_top_d(BellContext::make(2)) == P("-1/2*d1^2"));
    CHECK(eliminate_top_d(BellContext::make(3)) == P("-d1*d2 - 1/6*d1^3"));
    CHECK_THROWS_AS(BellContext::make(1), std::invalid_argument);
}

TEST_CASE("eliminated d makes the constraint vanish") {
    for (int p = 2; p <= 12; ++p) {
        CAPTURE(p);
        const BellContext ctx = BellContext::make(p);
        std::vector<MultiPoly> args;
        for (int k = 1; k <= p; ++k) {
            args.push_back(MultiPoly(ctx.d(k)) * Rational(factorial(k)));
        }
        CHECK(apply_top_d(ctx, bell_complete(p, args)).is_zero());
    }
}

TEST_CASE("convolution and direct Bell evaluation agree") {
    for (int p = 2; p <= 8; ++p) {
        CAPTURE(p);
        const BellContext ctx = BellContext::make(p);
        CHECK(bell_lhs_eq6(ctx) == bell_lhs_direct(ctx));
    }
}

TEST_CASE("y-free part vanishes after elimination") {
    const BellContext ctx = BellContext::make(4);
    const MultiPoly lhs = apply_top_d(ctx, bell_lhs_eq6(ctx));
    CHECK(lhs.coefficient_in(ctx.y(), 0).is_zero());
}

TEST_CASE("prefixes are configurable") {
    BellContext a = BellContext::make(3);
    BellContext b = a;
    b.d_prefix = "e";
    const MultiPoly lhs_b = bell_lhs_direct(b).rename({{Var("e1"), Var("d1")}, {Var("e2"), Var("d2")}, {Var("e3"), Var("d3")}});
    CHECK(lhs_b == bell_lhs_direct(a));
}
