#include "genius/bell.hpp"

#include <stdexcept>

#include "genius/series.hpp"

namespace genius {

BellContext BellContext::make(int p) {
    if (p < 2) {
        throw std::invalid_argument("p must be at least 2 (got " + std::to_string(p) + ")");
    }
    BellContext ctx;
    ctx.p = p;
    return ctx;
}

std::vector<MultiPoly> bell_complete_all(int m, const std::vector<MultiPoly>& args) {
    if (m < 0 || static_cast<int>(args.size()) < m) {
        throw std::invalid_argument("bell_complete: need " + std::to_string(m) + " arguments, got " +
                                    std::to_string(args.size()));
    }
    std::vector<MultiPoly> b(static_cast<std::size_t>(m) + 1);
    b[0] = MultiPoly(1);
    for (int n = 0; n < m; ++n) {
        PolySum acc;
        for (int k = 0; k <= n; ++k) {
            acc.add_product(b[n - k], args[k], Rational(binomial(n, k)));
        }
        b[n + 1] = acc.take();
    }
    return b;
}

MultiPoly bell_complete(int m, const std::vector<MultiPoly>& args) {
    if (m < 0 || static_cast<int>(args.size()) != m) {
        throw std::invalid_argument("bell_complete: argument-count mismatch (m=" + std::to_string(m) + ", got " +
                                    std::to_string(args.size()) + ")");
    }
    return bell_complete_all(m, args).back();
}

MultiPoly eliminate_top_d(const BellContext& ctx) {
    if (ctx.p < 2) {
        throw std::invalid_argument("eliminate_top_d: p must be at least 2");
    }
    const Var x("x");
    TruncSeries d(x, ctx.p);
    for (int i = 1; i < ctx.p; ++i) {
        d.set_coeff(i, MultiPoly(ctx.d(i)));
    }
    return -series_exp(d).coeff(ctx.p);
}

MultiPoly apply_top_d(const BellContext& ctx, const MultiPoly& poly) {
    return poly.substitute(ctx.d(ctx.p), eliminate_top_d(ctx));
}

MultiPoly bell_lhs_eq6(const BellContext& ctx) {
    const int p = ctx.p;
    const MultiPoly y(ctx.y());
    std::vector<MultiPoly> yu;
    std::vector<MultiPoly> dk;
    for (int k = 1; k <= p; ++k) {
        const Rational kf(factorial(static_cast<unsigned>(k)));
        yu.push_back(y * ctx.u(k) * kf);
        dk.push_back(MultiPoly(ctx.d(k)) * kf);
    }
    const auto by = bell_complete_all(p, yu);
    const auto bd = bell_complete_all(p, dk);
    PolySum acc;
    for (int i = 0; i <= p; ++i) {
        acc.add_product(by[p - i], bd[i], Rational(binomial(p, i)));
    }
    return acc.take();
}

MultiPoly bell_lhs_direct(const BellContext& ctx) {
    const MultiPoly y(ctx.y());
    std::vector<MultiPoly> args;
    for (int k = 1; k <= ctx.p; ++k) {
        args.push_back((y * ctx.u(k) + MultiPoly(ctx.d(k))) * Rational(factorial(static_cast<unsigned>(k))));
    }
    return bell_complete(ctx.p, args);
}

}  // namespace genius
