#ifndef GENIUS_CONJLAB_HPP
#define GENIUS_CONJLAB_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genius/ftransform.hpp"
#include "genius/interp.hpp"

namespace genius {

/// Total degree of m in the u variables of ctx.
int u_degree(const Monomial& m, const BellContext& ctx);

struct Conj1Report {
    int p = 0;
    bool pass = true;
    /// First (i, monomial) with u-degree >= 2.
    std::optional<std::pair<int, std::string>> witness;
    /// Whether any F_i contains a monomial free of u variables.
    bool has_u_free_monomials = false;
    int max_u_degree = 0;
};

/// Every monomial of every F_i must have u-degree at most 1.
Conj1Report check_conj1(const FSolution& sol);
Conj1Report check_conj1(int p);

/// Solutions F_2..F_max_index for every p in [pmin, pmax], computed once and
/// then only read.
class SolutionWindow {
public:
    SolutionWindow(int pmin, int pmax, int max_index);
    int pmin() const { return pmin_; }
    int pmax() const { return pmax_; }
    const FSolution& at(int p) const;

private:
    int pmin_;
    int pmax_;
    std::vector<FSolution> sols_;
};

struct CoeffTrace {
    int i = 0;
    Monomial monomial;
    std::vector<std::pair<int, Rational>> samples;
    /// p values skipped because the monomial mentions a variable that does
    /// not exist there (d_k with k >= p, or u_k with k > p).
    std::vector<int> skipped;
};

/// True if every variable of m exists (and is free) for this p.
bool monomial_valid_at(const Monomial& m, int p, const BellContext& ctx);

CoeffTrace trace_coefficient(int i, const Monomial& monomial, const SolutionWindow& window);
CoeffTrace trace_coefficient(int i, const Monomial& monomial, int pmin, int pmax);

enum class Conj2Verdict {
    leading_term,          // the pure u_i monomial, required to be exactly 1
    fitted_vanishing,      // rational in p with deg num < deg den
    fitted_not_vanishing,  // counterexample witness
    no_fit,                // inconclusive within the degree budget
};

std::string to_string(Conj2Verdict v);

struct MonomialVerdict {
    std::string monomial;
    Conj2Verdict verdict = Conj2Verdict::no_fit;
    int deg_num = -1;
    int deg_den = -1;
    std::string fit;  // reduced rational function in p, when fitted
    std::vector<std::pair<int, Rational>> samples;
    bool support_changes = false;  // zero at some valid p, nonzero at another
};

/// Searches shapes with deg_num + deg_den <= budget (by increasing total,
/// then increasing deg_den) fitting all but the last `holdout` samples, and
/// accepts the first that also reproduces the held-out samples.
MonomialVerdict classify_trace(const CoeffTrace& trace, int budget, int holdout);

struct Conj2Report {
    int i = 0;
    int pmin = 0;
    int pmax = 0;
    int budget = 0;
    int holdout = 0;
    bool leading_ok = true;
    std::vector<MonomialVerdict> monomials;

    int count(Conj2Verdict v) const;
    /// "fail" if a counterexample or a bad leading term was found,
    /// "inconclusive" if some monomial had no fit, else "pass".
    std::string status() const;
};

/// Minimum window size for the given budget and holdout.
int conj2_min_window(int budget, int holdout);

Conj2Report check_conj2(int i, int pmin, int pmax, int budget, int holdout);

}  // namespace genius

#endif
