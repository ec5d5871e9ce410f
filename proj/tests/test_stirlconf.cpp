#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "genius/stirlconf.hpp"

using namespace genius;

namespace {

// Ordered set partitions as surjections onto block positions 0..b-1,
// crossed with every weight vector summing to w.
std::set<std::string> brute_configs(int g, int w) {
    std::set<std::string> out;
    for (int b = 1; b <= g; ++b) {
        std::vector<int> f(g, 0);
        while (true) {
            std::vector<std::uint32_t> blocks(b, 0);
            for (int k = 0; k < g; ++k) {
                blocks[f[k]] |= 1U << k;
            }
            if (std::none_of(blocks.begin(), blocks.end(), [](std::uint32_t m) { return m == 0; })) {
                std::vector<int> wt(b, 0);
                while (true) {
                    int sum = 0;
                    for (int x : wt) {
                        sum += x;
                    }
                    if (sum == w) {
                        out.insert(WeightedConfiguration{blocks, wt}.to_string());
                    }
                    int pos = 0;
                    while (pos < b && ++wt[pos] > w) {
                        wt[pos++] = 0;
                    }
                    if (pos == b) {
                        break;
                    }
                }
            }
            int pos = 0;
            while (pos < g && ++f[pos] == b) {
                f[pos++] = 0;
            }
            if (pos == g) {
                break;
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("Stirling numbers of the first kind") {
    for (int n = 0; n <= 10; ++n) {
        CHECK(stirling1(n, n) == 1);
    }
    CHECK(stirling1(3, 2) == 3);
    CHECK(stirling1(3, 1) == 2);
    CHECK(stirling1(5, 0) == 0);
    CHECK(stirling1(10, 1) == factorial(9));
    CHECK_THROWS_AS(stirling1(2, 3), std::out_of_range);
}

TEST_CASE("P_w polynomials") {
    CHECK(pw_poly(0) == MultiPoly(1));
    CHECK(pw_poly(1) == MultiPoly::parse("1/2*n^2 - 1/2*n"));
    CHECK(pw_poly(1).evaluate(pw_var(), 3).constant_term() == 3);
    for (int w = 0; w <= 6; ++w) {
        const MultiPoly p = pw_poly(w);
        CHECK(p.max_degree_in(pw_var()) == 2 * w);
        for (int n = w; n <= 3 * w + 6; ++n) {
            CHECK(p.evaluate(pw_var(), n).constant_term() == Rational(stirling1(n, n - w)));
        }
    }
}

TEST_CASE("configuration listing") {
    const auto two = list_weighted_configs(2, 0);
    REQUIRE(two.size() == 3);
    CHECK(two[0].to_string() == "({c1,c2}:0)");
    CHECK(two[1].to_string() == "({c1}:0)({c2}:0)");
    CHECK(two[2].to_string() == "({c2}:0)({c1}:0)");
    CHECK(list_weighted_configs(3, 0).size() == 13);
    CHECK(config_count(3, 0) == 13);
    CHECK_THROWS(list_weighted_configs(3, 2));
    CHECK_THROWS(list_weighted_configs(1, 0));
}

TEST_CASE("enumeration matches brute force") {
    for (int g = 2; g <= 5; ++g) {
        for (int w = 0; w <= g - 2; ++w) {
            CAPTURE(g);
            CAPTURE(w);
            const auto list = list_weighted_configs(g, w);
            std::set<std::string> seen;
            for (const auto& c : list) {
                seen.insert(c.to_string());
            }
            CHECK(seen.size() == list.size());
            CHECK(seen == brute_configs(g, w));
            CHECK(mpz_class(static_cast<long>(list.size())) == config_count(g, w));
        }
    }
}

TEST_CASE("configuration evaluation") {
    const std::vector<Rational> vals{frac(1, 3), Rational(-2)};
    const auto two = list_weighted_configs(2, 0);
    CHECK(config_eval(two[0], vals) == -1);
    CHECK(config_eval(two[1], vals) == frac(1, 2));
    CHECK(config_eval(two[2], vals) == frac(1, 2));
    const MultiPoly sym = config_eval_symbolic(list_weighted_configs(3, 1)[0], 3);
    CHECK(sym == MultiPoly::parse("-1/2*c1^2 - c1*c2 - c1*c3 - 1/2*c2^2 - c2*c3 - 1/2*c3^2 + 1/2*c1 + 1/2*c2 + 1/2*c3"));
}

TEST_CASE("random distinct rationals") {
    const auto a = random_distinct_rationals(7, 3);
    CHECK(a == random_distinct_rationals(7, 3));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < i; ++k) {
            CHECK_FALSE(a[i] == a[k]);
        }
    }
}

TEST_CASE("Chapman sums") {
    const ChapmanReport hand = chapman_check(2, 0, false, 1);
    CHECK(hand.zero);
    CHECK(hand.sum == "0");
    CHECK(hand.configs == "3");
    for (int g = 2; g <= 5; ++g) {
        for (int w = 0; w <= g - 2; ++w) {
            CHECK(chapman_check(g, w, false, 7, 2).zero);
            CHECK(chapman_check(g, w, true, 0, 2).zero);
        }
    }
}

TEST_CASE("streamed sum matches config_eval") {
    const int g = 4;
    const int w = 1;
    const auto vals = random_distinct_rationals(g, 5);
    Rational total;
    for (const auto& c : list_weighted_configs(g, w)) {
        total += config_eval(c, vals);
    }
    CHECK(total == 0);
}

TEST_CASE("sums by block count are symmetric in the labels") {
    const int g = 4;
    const int w = 2;
    const auto vals = random_distinct_rationals(g, 9);
    std::vector<Rational> perm{vals[2], vals[0], vals[3], vals[1]};
    std::map<int, Rational> a;
    std::map<int, Rational> b;
    bool nonzero = false;
    for (const auto& c : list_weighted_configs(g, w)) {
        a[c.block_count()] += config_eval(c, vals);
        b[c.block_count()] += config_eval(c, perm);
    }
    for (const auto& [blocks, v] : a) {
        CHECK(v == b[blocks]);
        nonzero = nonzero || !v.is_zero();
    }
    CHECK(nonzero);
}
