#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "genius/graphlab.hpp"
#include "genius/rational.hpp"
#include "genius/rng.hpp"

using namespace genius;
using boost::multiprecision::cpp_dec_float_50;

namespace {

// Matching counts by trying every edge subset.
MatchVector brute_matchings(const BipartiteGraph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.nside; ++i) {
        for (int j = 0; j < g.nside; ++j) {
            if (g.has_edge(i, j)) {
                edges.emplace_back(i, j);
            }
        }
    }
    MatchVector m(g.nside + 1);
    const std::uint64_t subsets = std::uint64_t{1} << edges.size();
    for (std::uint64_t s = 0; s < subsets; ++s) {
        std::uint32_t left = 0;
        std::uint32_t right = 0;
        bool ok = true;
        for (std::size_t e = 0; e < edges.size() && ok; ++e) {
            if ((s >> e) & 1U) {
                const std::uint32_t lb = 1U << edges[e].first;
                const std::uint32_t rb = 1U << edges[e].second;
                ok = !(left & lb) && !(right & rb);
                left |= lb;
                right |= rb;
            }
        }
        if (ok) {
            m[std::popcount(s)] += 1;
        }
    }
    return m;
}

// Every regular 0/1 matrix of the given side and degree, by brute force.
std::vector<BipartiteGraph> all_regular(int nside, int r) {
    std::vector<BipartiteGraph> out;
    const std::uint64_t cells = static_cast<std::uint64_t>(nside) * nside;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
        if (std::popcount(bits) != nside * r) {
            continue;
        }
        BipartiteGraph g;
        g.nside = nside;
        g.r = r;
        for (int i = 0; i < nside; ++i) {
            g.rows.push_back(static_cast<std::uint32_t>((bits >> (i * nside)) & ((1U << nside) - 1)));
        }
        bool regular = true;
        for (int i = 0; i < nside && regular; ++i) {
            regular = std::popcount(g.rows[i]) == r;
        }
        for (int j = 0; j < nside && regular; ++j) {
            int col = 0;
            for (int i = 0; i < nside; ++i) {
                col += g.has_edge(i, j);
            }
            regular = col == r;
        }
        if (regular) {
            out.push_back(g);
        }
    }
    return out;
}

BipartiteGraph relabel(const BipartiteGraph& g, SplitMix64& rng, bool swap) {
    std::vector<int> rp(g.nside);
    std::vector<int> cp(g.nside);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    for (int k = g.nside - 1; k > 0; --k) {
        std::swap(rp[k], rp[rng.below(k + 1)]);
        std::swap(cp[k], cp[rng.below(k + 1)]);
    }
    BipartiteGraph h = g;
    for (int i = 0; i < g.nside; ++i) {
        std::uint32_t row = 0;
        for (int j = 0; j < g.nside; ++j) {
            if (g.has_edge(rp[i], cp[j])) {
                row |= 1U << j;
            }
        }
        h.rows[i] = row;
    }
    return swap ? h.transpose() : h;
}

cpp_dec_float_50 to_float(const mpz_class& z) { return cpp_dec_float_50(z.get_str()); }

// Delta^k d(i) in 50-digit floating point, straight from the definition of d.
cpp_dec_float_50 float_delta(const MatchVector& m, int v, int r, int k, int i) {
    auto d = [&](int t) {
        using boost::multiprecision::log;
        return log(to_float(m[t])) - t * log(cpp_dec_float_50(r)) - log(to_float(mbar(v, t))) +
               t * log(cpp_dec_float_50(v - 1));
    };
    cpp_dec_float_50 sum = 0;
    for (int j = 0; j <= k; ++j) {
        const cpp_dec_float_50 c(binomial(k, j).get_str());
        sum += ((k - j) % 2 == 0 ? c : -c) * d(i + j);
    }
    return sum;
}

const char* kViolator = "nside=7 r=3 rows=1110000,1001100,1000011,0101010,0100101,0011001,0010110";

}  // namespace

TEST_CASE("graph serialization") {
    const BipartiteGraph g = BipartiteGraph::parse("nside=3 r=2 rows=110,011,101");
    CHECK(g.serialize() == "nside=3 r=2 rows=110,011,101");
    CHECK(g == BipartiteGraph::from_rows({"110", "011", "101"}));
    CHECK(g.edge_count() == 6);
    CHECK(g.connected());
    CHECK_THROWS(BipartiteGraph::from_rows({"110", "110", "001"}));
    CHECK_THROWS(BipartiteGraph::parse("nside=3 r=2 rows=110,011"));
    CHECK(BipartiteGraph::parse(kViolator).serialize() == kViolator);
}

TEST_CASE("complete matchings") {
    CHECK(mbar(4, 1) == 6);
    CHECK(mbar(6, 3) == 15);
    for (int v = 2; v <= 20; v += 2) {
        CHECK(mbar(v, 0) == 1);
    }
    CHECK_THROWS(mbar(6, 4));
}

TEST_CASE("matching counts of small graphs") {
    CHECK(match_counts(complete_bipartite(3)) == MatchVector{1, 9, 18, 6});
    CHECK(match_counts(cycle_graph(3)) == MatchVector{1, 6, 9, 2});
    CHECK(brute_matchings(complete_bipartite(3)) == MatchVector{1, 9, 18, 6});
    CHECK(brute_matchings(cycle_graph(3)) == MatchVector{1, 6, 9, 2});
}

TEST_CASE("matching counts agree with edge subsets on every graph with at most 8 edges") {
    int graphs = 0;
    for (int nside = 1; nside <= 4; ++nside) {
        for (int r = 1; r <= nside && nside * r <= 8; ++r) {
            const auto all = all_regular(nside, r);
            CHECK(mpz_class(static_cast<long>(all.size())) == count_labeled(nside, r));
            for (const BipartiteGraph& g : all) {
                CHECK(match_counts(g) == brute_matchings(g));
                ++graphs;
            }
        }
    }
    CHECK(graphs == 1 + 2 + 1 + 6 + 6 + 24 + 90);
    // perfect matchings on larger sides: m_i = C(nside, i)
    for (int nside = 5; nside <= 8; ++nside) {
        const BipartiteGraph g = rand_regular(nside, 1, nside);
        const MatchVector m = match_counts(g);
        CHECK(m == brute_matchings(g));
        for (int i = 0; i <= nside; ++i) {
            CHECK(m[i] == binomial(nside, i));
        }
    }
}

TEST_CASE("matching counts on random cubic graphs") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const BipartiteGraph g = rand_regular(4, 3, s);
        const MatchVector m = match_counts(g);
        CHECK(m == brute_matchings(g));
        CHECK(m[1] == 12);
        CHECK(m[4] >= 1);
    }
}

TEST_CASE("sign ladder basics") {
    const MatchVector k33 = match_counts(complete_bipartite(3));
    CHECK(delta_sign(k33, 6, 3, 0, 0) == Sign::zero);
    CHECK_THROWS(delta_sign(k33, 6, 3, 2, 2));
    const PositivityResult res = positivity(complete_bipartite(3));
    CHECK(res.pass);
    CHECK(res.violations.empty());
    for (const auto& [key, s] : res.ladder.signs) {
        CHECK(s != Sign::negative);
    }
    CHECK(res.ladder.signs.size() == 10);
    const PositivityResult c6 = positivity(cycle_graph(3));
    CHECK(c6.m == MatchVector{1, 6, 9, 2});
    CHECK(sign_char(Sign::negative) == '-');
}

TEST_CASE("exact signs agree with 50-digit floating point") {
    int compared = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        const int nside = 4 + static_cast<int>(s % 5);
        const int r = 2 + static_cast<int>(s % 3);
        const BipartiteGraph g = rand_regular(nside, std::min(r, nside), derive_seed(77, s));
        const int v = 2 * nside;
        const MatchVector m = match_counts(g);
        for (int k = 0; k <= nside; ++k) {
            for (int i = 0; i + k <= nside; ++i) {
                const Sign exact = delta_sign(m, v, g.r, k, i);
                const cpp_dec_float_50 f = float_delta(m, v, g.r, k, i);
                if (exact == Sign::zero) {
                    CHECK(abs(f) < cpp_dec_float_50("1e-40"));
                } else {
                    CHECK(abs(f) > cpp_dec_float_50("1e-40"));
                    CHECK((f > 0) == (exact == Sign::positive));
                }
                ++compared;
            }
        }
    }
    CHECK(compared > 1000);
}

TEST_CASE("sign ladder is invariant under relabeling") {
    SplitMix64 rng(5);
    for (std::uint64_t s = 0; s < 30; ++s) {
        const BipartiteGraph g = rand_regular(6, 3, s);
        const BipartiteGraph h = relabel(g, rng, s % 2 == 1);
        CHECK(match_counts(g) == match_counts(h));
        CHECK(positivity(g).ladder.signs == positivity(h).ladder.signs);
        CHECK(canonical_form(g) == canonical_form(h));
        CHECK(side_automorphisms(g) == side_automorphisms(h));
    }
}

TEST_CASE("pairing model sampler") {
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const BipartiteGraph g = rand_regular(5, 3, s);
        CHECK_NOTHROW(g.validate());
    }
    CHECK(rand_regular(7, 3, 42) == rand_regular(7, 3, 42));
    CHECK(rand_regular(3, 3, 9) == complete_bipartite(3));
    CHECK_THROWS(rand_regular(3, 4, 1));
}

TEST_CASE("small enumerations") {
    const Enumeration c6 = enum_regular(3, 2);
    REQUIRE(c6.classes.size() == 1);
    CHECK(c6.labeled == 6);
    CHECK(match_counts(c6.classes[0]) == MatchVector{1, 6, 9, 2});
    const Enumeration k33 = enum_regular(3, 3);
    REQUIRE(k33.classes.size() == 1);
    CHECK(k33.classes[0] == canonical_form(complete_bipartite(3)));
    CHECK(side_automorphisms(complete_bipartite(3)) == 36);
}

TEST_CASE("cubic class and labeled counts") {
    // classes: 1, 1, 2, 6, 14; labeled 3-regular 0/1 matrices: 1, 24, 2040,
    // 297200, 68938800
    const int classes[] = {1, 1, 2, 6, 14};
    const long labeled[] = {1, 24, 2040, 297200, 68938800};
    for (int nside = 3; nside <= 7; ++nside) {
        CAPTURE(nside);
        const Enumeration e = enum_regular(nside, 3, 2);
        CHECK(static_cast<int>(e.classes.size()) == classes[nside - 3]);
        CHECK(e.labeled == labeled[nside - 3]);
        CHECK(e.labeled_from_classes == e.labeled);
        CHECK(count_labeled(nside, 3) == e.labeled);
    }
}

TEST_CASE("enumeration does not depend on thread count") {
    const Enumeration a = enum_regular(6, 3, 1);
    const Enumeration b = enum_regular(6, 3, 4);
    CHECK(a.classes == b.classes);
}

TEST_CASE("cubic graphs below 14 vertices are positive") {
    for (int nside = 3; nside <= 6; ++nside) {
        const CensusStats st = census_exhaustive(nside, 3);
        CHECK(st.failing == 0);
        CHECK(st.passing == st.total);
    }
}

TEST_CASE("the 14-vertex census has one violating class") {
    const CensusStats st = census_exhaustive(7, 3, 2);
    CHECK(st.total == 14);
    CHECK(st.connected_total == 13);
    CHECK(st.failing == 1);
    REQUIRE(st.witnesses.size() == 1);
    CHECK(st.witnesses[0].graph == kViolator);
    CHECK(st.witnesses[0].connected);
    CHECK(st.labeled_count == "68938800");

    const PositivityResult res = positivity(BipartiteGraph::parse(kViolator));
    CHECK_FALSE(res.pass);
    CHECK(res.violations == std::vector<std::pair<int, int>>{{4, 0}});
}

TEST_CASE("sampled census is reproducible") {
    const CensusStats a = census_sample(7, 3, 200, 11, 1);
    const CensusStats b = census_sample(7, 3, 200, 11, 3);
    CHECK(a.total == 200);
    CHECK(a.failing == b.failing);
    CHECK(a.passing + a.failing == a.total);
}
