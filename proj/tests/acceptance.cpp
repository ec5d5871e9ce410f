// One line per acceptance criterion; exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "genius/conjlab.hpp"
#include "genius/ftransform.hpp"
#include "genius/graphlab.hpp"
#include "genius/pernici.hpp"
#include "genius/stirlconf.hpp"
#include "properties.hpp"

using namespace genius;

namespace {

using Clock = std::chrono::steady_clock;

int threads() { return static_cast<int>(std::max(1U, std::thread::hardware_concurrency())); }

// Each check returns an empty string on success, otherwise the reason.
struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<std::string(std::ostringstream&)> run;
};

MultiPoly P(const char* s) { return MultiPoly::parse(s); }

std::string theorem_pipeline(std::ostringstream& note) {
    for (int p = 2; p <= 12; ++p) {
        const FSolution sol = solve_F(BellContext::make(p));
        const TransformCheck chk = verify_transform(sol);
        if (!chk.ok) {
            return "verify_transform failed at p=" + std::to_string(p) + " y^" + std::to_string(chk.witness->k);
        }
    }
    const FSolution s2 = solve_F(BellContext::make(2));
    const FSolution s3 = solve_F(BellContext::make(3));
    if (!(s2.at(2) == P("u2 + d1"))) {
        return "p=2 F_2 = " + s2.at(2).to_string();
    }
    if (!(s3.at(2) == P("u2 + 1/2*d1")) || !(s3.at(3) == P("u3 + d2 + u2*d1 + 1/2*d1^2"))) {
        return "p=3 F_2 = " + s3.at(2).to_string() + ", F_3 = " + s3.at(3).to_string();
    }
    note << "p=2..12 verified; hand values reproduced";
    return "";
}

std::string cross_path(std::ostringstream& note) {
    for (int p = 2; p <= 10; ++p) {
        const BellContext ctx = BellContext::make(p);
        const MultiPoly conv = bell_lhs_eq6(ctx);
        if (!(conv == bell_lhs_direct(ctx))) {
            return "Bell convolution differs from direct Bell evaluation at p=" + std::to_string(p);
        }
        const MultiPoly scaled = apply_top_d(ctx, conv) * (Rational(1) / Rational(factorial(p)));
        if (!(scaled == lhs_direct(ctx))) {
            return "Bell convolution differs from the exponential at p=" + std::to_string(p);
        }
    }
    note << "p=2..10 equal";
    return "";
}

std::string conj1(std::ostringstream& note) {
    for (int p = 2; p <= 12; ++p) {
        const Conj1Report rep = check_conj1(p);
        if (!rep.pass) {
            return "p=" + std::to_string(p) + " F_" + std::to_string(rep.witness->first) + " has " +
                   rep.witness->second;
        }
    }
    FSolution sol = solve_F(BellContext::make(3));
    sol.F[2] += P("u2^2");
    const Conj1Report bad = check_conj1(sol);
    if (bad.pass || !bad.witness || bad.witness->first != 2 || bad.witness->second != "u2^2") {
        return "injected u2^2 fault not caught";
    }
    note << "p=2..12 pass; fault caught at (2, u2^2)";
    return "";
}

std::string conj2(std::ostringstream& note) {
    int vanishing = 0;
    int inconclusive = 0;
    for (int i = 2; i <= 6; ++i) {
        const int lo = std::max(i, 2);
        const Conj2Report rep = check_conj2(i, lo, lo + 9, 4, 2);
        if (!rep.leading_ok) {
            return "u_" + std::to_string(i) + " coefficient is not 1 somewhere in the window";
        }
        if (rep.count(Conj2Verdict::fitted_not_vanishing) > 0) {
            for (const MonomialVerdict& m : rep.monomials) {
                if (m.verdict == Conj2Verdict::fitted_not_vanishing) {
                    return "i=" + std::to_string(i) + " " + m.monomial + " fits " + m.fit;
                }
            }
        }
        if (rep.count(Conj2Verdict::leading_term) != 1) {
            return "i=" + std::to_string(i) + " leading term not classified";
        }
        vanishing += rep.count(Conj2Verdict::fitted_vanishing);
        inconclusive += rep.count(Conj2Verdict::no_fit);
    }
    note << vanishing << " fitted and vanishing, " << inconclusive << " inconclusive, 0 not vanishing";
    return "";
}

PerniciParams pparams(RValue r, int H) {
    PerniciParams p;
    p.r = r;
    p.H = H;
    return p;
}

std::string pernici(std::ostringstream& note) {
    const std::pair<RValue, int> runs[] = {
        {RValue::symbolic(), 3}, {RValue::rational(3), 4}, {RValue::rational(4), 4}};
    for (const auto& [r, H] : runs) {
        const IdentityReport rep = check_16_17(pparams(r, H));
        if (!rep.pass) {
            const SliceRecord f = rep.failures().front();
            return "r=" + r.to_string() + " H=" + std::to_string(H) + " slice h=" + std::to_string(f.h) +
                   " k=" + std::to_string(f.k) + " is " + f.actual;
        }
        const ATable at = a_table(pparams(r, H));
        for (int h = 1; h <= H; ++h) {
            if (!at.entries.at({h, 1}).is_zero()) {
                return "a_" + std::to_string(h) + "(r,1) != 0";
            }
        }
        const auto u = u_coeffs(r, 2);
        if (!(at.entries.at({1, 2}) == -u[2] * r.power(-2))) {
            return "a_1(r,2) = " + at.entries.at({1, 2}).to_string();
        }
    }
    note << "sym H=3, r=3 H=4, r=4 H=4";
    return "";
}

std::string free_u(std::ostringstream& note) {
    const IdentityReport rep = check_16_free_u(pparams(RValue::symbolic(), 3));
    if (!rep.pass) {
        return "slice h=" + std::to_string(rep.failures().front().h) + " k=" +
               std::to_string(rep.failures().front().k) + " does not vanish";
    }
    note << "free u_2..u_4, symbolic r, H=3";
    return "";
}

std::string awesome(std::ostringstream& note) {
    const PerniciParams p = pparams(RValue::rational(3), 3);
    const AwesomeSpec specs[] = {AwesomeSpec{{{"c1", 1}}}, AwesomeSpec{{{"c1", 1}, {"c2", 2}}}};
    for (const AwesomeSpec& s : specs) {
        const IdentityReport rep = awesome_check(s, p);
        if (!rep.pass) {
            return "spec with " + std::to_string(s.terms.size()) + " terms fails at h=" +
                   std::to_string(rep.failures().front().h);
        }
    }
    if (awesome_check(AwesomeSpec{}, p).serialize() != check_16_17(p).serialize()) {
        return "empty spec does not reproduce the plain report";
    }
    note << "both specs pass at r=3 H=3; empty spec identical";
    return "";
}

std::string small_graphs(std::ostringstream& note) {
    if (match_counts(complete_bipartite(3)) != MatchVector{1, 9, 18, 6}) {
        return "K_{3,3} match vector";
    }
    if (match_counts(cycle_graph(3)) != MatchVector{1, 6, 9, 2}) {
        return "C_6 match vector";
    }
    long total = 0;
    for (int nside = 3; nside <= 6; ++nside) {
        const CensusStats st = census_exhaustive(nside, 3, threads());
        if (st.failing != 0) {
            return "v=" + std::to_string(2 * nside) + " has " + std::to_string(st.failing) + " violating classes";
        }
        total += st.total;
    }
    note << total << " classes with v in {6,8,10,12}, all positive";
    return "";
}

std::string census14(std::ostringstream& note) {
    const CensusStats st = census_exhaustive(7, 3, threads());
    if (st.failing != 1) {
        return std::to_string(st.failing) + " violating classes out of " + std::to_string(st.total);
    }
    note << "1 of " << st.total << " classes violates: " << st.witnesses.front().graph;
    return "";
}

std::string chapman(std::ostringstream& note) {
    const auto two = list_weighted_configs(2, 0);
    const std::vector<Rational> vals = random_distinct_rationals(2, 1);
    if (two.size() != 3 || config_eval(two[0], vals) != -1 || config_eval(two[1], vals) != frac(1, 2) ||
        config_eval(two[2], vals) != frac(1, 2)) {
        return "g=2 hand case";
    }
    long checks = 0;
    for (int g = 2; g <= 7; ++g) {
        for (int w = 0; w <= g - 2; ++w) {
            const ChapmanReport rep = chapman_check(g, w, false, derive_seed(1, g * 32 + w), threads());
            if (!rep.zero) {
                return "rational g=" + std::to_string(g) + " w=" + std::to_string(w) + " sum " + rep.sum;
            }
            ++checks;
            if (g <= 5) {
                const ChapmanReport sym = chapman_check(g, w, true, 0, threads());
                if (!sym.zero) {
                    return "symbolic g=" + std::to_string(g) + " w=" + std::to_string(w);
                }
                ++checks;
            }
        }
    }
    note << checks << " sums exactly zero";
    return "";
}

std::string kernel(std::ostringstream& note) {
    const props::Outcome out = props::run_kernel_properties(2024);
    if (out.cases < 10000) {
        return "only " + std::to_string(out.cases) + " cases";
    }
    if (out.failures != 0) {
        return std::to_string(out.failures) + " failures, first: " + out.first_failure;
    }
    note << out.cases << " cases, 0 failures";
    return "";
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "F solve and transform", 120, theorem_pipeline},
        {2, "Bell convolution equals exponential", 60, cross_path},
        {3, "u-linearity", 600, conj1},
        {4, "rational coefficients vanish", 600, conj2},
        {5, "log-coefficient identities", 600, pernici},
        {6, "free-u vanishing", 600, free_u},
        {7, "awesome instances", 900, awesome},
        {8, "positivity below 14 vertices", 300, small_graphs},
        {9, "14-vertex census", 3600, census14},
        {10, "Chapman sums", 600, chapman},
        {11, "kernel properties", 120, kernel},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        std::ostringstream note;
        std::string why;
        const auto t0 = Clock::now();
        try {
            why = c.run(note);
        } catch (const std::exception& e) {
            why = std::string("threw: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (why.empty() && secs > c.budget_s) {
            why = "over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget";
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << "criterion " << c.id << ": " << (why.empty() ? "PASS" : "FAIL") << " " << c.title << " ("
             << secs << " s) " << (why.empty() ? note.str() : why);
        std::cout << line.str() << std::endl;
        failed += !why.empty();
    }
    return failed == 0 ? 0 : 1;
}
