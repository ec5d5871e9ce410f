#ifndef GENIUS_FTRANSFORM_HPP
#define GENIUS_FTRANSFORM_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "genius/bell.hpp"

namespace genius {

/// Raised when an internal identity that must hold by construction fails.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// F_2..F_p for one p, fully expanded in d_1..d_{p-1}, u_2..u_p.
/// F_1 is the constant 1. A prefix solve may stop before p.
struct FSolution {
    BellContext ctx;
    std::vector<MultiPoly> F;  // F[0] unused, F[1] = 1

    int p() const { return ctx.p; }
    int solved_up_to() const { return static_cast<int>(F.size()) - 1; }
    const MultiPoly& at(int i) const;
};

/// y^k coefficients (k = 0..p) of [x^p] exp(sum (y u_i + d_i) x^i) with d_p
/// eliminated. Entry 0 must vanish and entry p is 1/p!.
std::vector<MultiPoly> lhs_y_poly(const BellContext& ctx);

/// Solves F_2..F_{max_index} (default: all of them) by matching y^{p-m+1}
/// coefficients for m = 2, 3, ... in turn.
FSolution solve_F(const BellContext& ctx, int max_index = -1);

struct TransformWitness {
    int k = 0;             // y-degree of the first mismatch
    std::string monomial;  // first differing monomial within that y^k slice
    std::string paths;     // which evaluations disagree
};

struct TransformCheck {
    bool ok = false;
    std::optional<TransformWitness> witness;
};

/// Recomputes both sides of the defining identity from scratch: the left side
/// by series_exp and by the Bell convolution, the right side by series_exp
/// with y F_i arguments. ok iff all three agree exactly.
TransformCheck verify_transform(const FSolution& sol);

/// [x^p] exp(sum (y u_i + d_i) x^i) with d_p eliminated, by series_exp.
MultiPoly lhs_direct(const BellContext& ctx);
/// [x^p] exp(y sum F_i x^i).
MultiPoly rhs_direct(const FSolution& sol);

}  // namespace genius

#endif
