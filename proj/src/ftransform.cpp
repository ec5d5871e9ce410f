#include "genius/ftransform.hpp"

#include "genius/series.hpp"

namespace genius {

namespace {

const Var kX("x");

// exp(d_1 x + ... + d_{p-1} x^{p-1}) up to x^order.
TruncSeries d_exponential(const BellContext& ctx, int order) {
    TruncSeries d(kX, order);
    for (int i = 1; i < ctx.p && i <= order; ++i) {
        d.set_coeff(i, MultiPoly(ctx.d(i)));
    }
    return series_exp(d);
}

// 1 + c_2 x + c_3 x^2 + ... from a coefficient sequence indexed like F.
TruncSeries shifted_series(const std::vector<MultiPoly>& c, int order) {
    TruncSeries s(kX, order);
    s.set_coeff(0, MultiPoly(1));
    for (int a = 1; a <= order; ++a) {
        if (a + 1 < static_cast<int>(c.size())) {
            s.set_coeff(a, c[a + 1]);
        }
    }
    return s;
}

std::vector<MultiPoly> u_sequence(const BellContext& ctx) {
    std::vector<MultiPoly> u(static_cast<std::size_t>(ctx.p) + 1);
    for (int i = 1; i <= ctx.p; ++i) {
        u[i] = ctx.u(i);
    }
    return u;
}

// [x^t] of a*b.
MultiPoly product_coeff(const TruncSeries& a, const TruncSeries& b, int t) {
    PolySum acc;
    for (int i = 0; i <= t; ++i) {
        acc.add_product(a.coeff(i), b.coeff(t - i));
    }
    return acc.take();
}

// k! * [y^k][x^p] of the left side for k >= 1: [x^{p-k}] (1+U)^k exp(D).
MultiPoly scaled_lhs_slice(const BellContext& ctx, const TruncSeries& expd, int k) {
    const int t = ctx.p - k;
    const TruncSeries uk = series_pow(shifted_series(u_sequence(ctx), t), k);
    return product_coeff(uk, expd, t);
}

}  // namespace

const MultiPoly& FSolution::at(int i) const {
    if (i < 1 || i >= static_cast<int>(F.size())) {
        throw std::out_of_range("F_" + std::to_string(i) + " not solved");
    }
    return F[static_cast<std::size_t>(i)];
}

std::vector<MultiPoly> lhs_y_poly(const BellContext& ctx) {
    const int p = ctx.p;
    std::vector<MultiPoly> out(static_cast<std::size_t>(p) + 1);
    // y^0: [x^p] exp(D) with d_p restored through its eliminated value.
    out[0] = d_exponential(ctx, p).coeff(p) + eliminate_top_d(ctx);
    if (!out[0].is_zero()) {
        throw InvariantViolation("lhs_y_poly: y^0 coefficient does not vanish: " + out[0].to_string());
    }
    const TruncSeries expd = d_exponential(ctx, p - 1);
    for (int k = 1; k <= p; ++k) {
        out[k] = scaled_lhs_slice(ctx, expd, k) * Rational(factorial(static_cast<unsigned>(k))).inverse();
    }
    return out;
}

FSolution solve_F(const BellContext& ctx, int max_index) {
    const int p = ctx.p;
    if (p < 2) {
        throw std::invalid_argument("solve_F: p must be at least 2");
    }
    if (max_index < 0 || max_index > p) {
        max_index = p;
    }
    FSolution sol{ctx, {}};
    sol.F.assign(static_cast<std::size_t>(std::max(max_index, 1)) + 1, MultiPoly());
    sol.F[1] = MultiPoly(1);
    const TruncSeries expd = d_exponential(ctx, std::max(max_index - 1, 0));
    const auto u = u_sequence(ctx);
    for (int m = 2; m <= max_index; ++m) {
        // Matching y^k with k = p - m + 1 at [x^{m-1}]:
        //   [x^{m-1}] (1 + F_2 x + ... )^k = [x^{m-1}] (1 + u_2 x + ...)^k exp(D)
        // and F_m enters the left power linearly with coefficient k.
        const int k = p - m + 1;
        const int t = m - 1;
        if (k == 0) {
            throw InvariantViolation("solve_F: singular pivot at m=" + std::to_string(m));
        }
        std::vector<MultiPoly> known(sol.F.begin(), sol.F.begin() + m);
        const MultiPoly known_part = series_pow(shifted_series(known, t), k).coeff(t);
        const MultiPoly target = product_coeff(series_pow(shifted_series(u, t), k), expd, t);
        sol.F[m] = (target - known_part) * frac(1, k);
    }
    return sol;
}

MultiPoly lhs_direct(const BellContext& ctx) {
    const MultiPoly y(ctx.y());
    TruncSeries s(kX, ctx.p);
    for (int i = 1; i <= ctx.p; ++i) {
        s.set_coeff(i, y * ctx.u(i) + MultiPoly(ctx.d(i)));
    }
    return apply_top_d(ctx, series_exp(s).coeff(ctx.p));
}

MultiPoly rhs_direct(const FSolution& sol) {
    const MultiPoly y(sol.ctx.y());
    TruncSeries s(kX, sol.p());
    for (int i = 1; i <= sol.p(); ++i) {
        s.set_coeff(i, y * sol.at(i));
    }
    return series_exp(s).coeff(sol.p());
}

TransformCheck verify_transform(const FSolution& sol) {
    if (sol.solved_up_to() != sol.p()) {
        throw std::invalid_argument("verify_transform: solution is only a prefix");
    }
    const BellContext& ctx = sol.ctx;
    const MultiPoly left = lhs_direct(ctx);
    const MultiPoly right = rhs_direct(sol);
    const MultiPoly bell =
        apply_top_d(ctx, bell_lhs_eq6(ctx)) * Rational(factorial(static_cast<unsigned>(ctx.p))).inverse();

    auto mismatch = [&](const MultiPoly& a, const MultiPoly& b, const char* what) -> std::optional<TransformWitness> {
        const MultiPoly diff = a - b;
        if (diff.is_zero()) {
            return std::nullopt;
        }
        for (int k = 0; k <= diff.max_degree_in(ctx.y()); ++k) {
            const MultiPoly slice = diff.coefficient_in(ctx.y(), k);
            if (!slice.is_zero()) {
                return TransformWitness{k, slice.terms()[0].mono.to_string(), what};
            }
        }
        return TransformWitness{0, diff.terms()[0].mono.to_string(), what};
    };

    TransformCheck out;
    if (auto w = mismatch(left, right, "exp-left vs exp-right")) {
        out.witness = w;
    } else if (auto w2 = mismatch(left, bell, "exp-left vs bell-convolution")) {
        out.witness = w2;
    }
    out.ok = !out.witness.has_value();
    return out;
}

}  // namespace genius
