#ifndef GENIUS_BELL_HPP
#define GENIUS_BELL_HPP

#include <string>
#include <vector>

#include "genius/poly.hpp"

namespace genius {

/// Variable layout for one value of p: d_1..d_p, u_1..u_p (u_1 = 1) and y.
/// Prefixes are configurable so the same computation can be repeated under a
/// different monomial order.
struct BellContext {
    int p = 2;
    std::string d_prefix = "d";
    std::string u_prefix = "u";
    std::string y_name = "y";

    /// Throws std::invalid_argument for p < 2.
    static BellContext make(int p);

    Var d(int k) const { return indexed(d_prefix, k); }
    Var u_var(int k) const { return indexed(u_prefix, k); }
    /// u_k as a polynomial; u_1 is the constant 1.
    MultiPoly u(int k) const { return k == 1 ? MultiPoly(1) : MultiPoly(u_var(k)); }
    Var y() const { return Var(y_name); }
};

/// Complete Bell polynomial B_m(x_1..x_m) by the binomial recurrence
/// B_{n+1} = sum_k C(n,k) B_{n-k} x_{k+1}.
MultiPoly bell_complete(int m, const std::vector<MultiPoly>& args);

/// All of B_0..B_m for the argument prefix (args.size() >= m).
std::vector<MultiPoly> bell_complete_all(int m, const std::vector<MultiPoly>& args);

/// The value d_p must take for [x^p] exp(sum d_i x^i) to vanish, as a
/// polynomial in d_1..d_{p-1}.
MultiPoly eliminate_top_d(const BellContext& ctx);

/// Replaces d_p by its eliminated value.
MultiPoly apply_top_d(const BellContext& ctx, const MultiPoly& poly);

/// B_p[1!(y u_1 + d_1), ..., p!(y u_p + d_p)] through the binomial
/// convolution sum_i C(p,i) B_{p-i}[k! y u_k] B_i(k! d_k). d_p is left free.
MultiPoly bell_lhs_eq6(const BellContext& ctx);

/// Same quantity evaluated directly as B_p of the summed arguments.
MultiPoly bell_lhs_direct(const BellContext& ctx);

}  // namespace genius

#endif
