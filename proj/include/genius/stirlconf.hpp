#ifndef GENIUS_STIRLCONF_HPP
#define GENIUS_STIRLCONF_HPP

#include <cstdint>
#include <functional>
#include <gmpxx.h>
#include <string>
#include <vector>

#include "genius/poly.hpp"

namespace genius {

/// Unsigned Stirling number of the first kind: [x^k] x(x+1)...(x+n-1).
/// Throws std::out_of_range unless 0 <= k <= n.
mpz_class stirling1(int n, int k);

/// The variable of pw_poly.
Var pw_var();

/// Degree-2w polynomial P_w with P_w(n) = stirling1(n, n-w) for n >= w.
/// Interpolated on n = w..3w and checked at 3w+1 and 3w+2; a mismatch
/// throws InterpolationError.
MultiPoly pw_poly(int w);

/// Ordered blocks over the ground set {c_1..c_g} with weights. Block masks
/// use bit k-1 for c_k.
struct WeightedConfiguration {
    std::vector<std::uint32_t> blocks;
    std::vector<int> weights;

    int block_count() const { return static_cast<int>(blocks.size()); }
    /// e.g. "({c1,c3}:0)({c2}:1)".
    std::string to_string() const;
};

/// Throws std::invalid_argument unless g >= 2 and 0 <= w <= g-2.
void check_gw(int g, int w);

/// Streams every weighted configuration once: set partitions in
/// restricted-growth order, each block ordering in lexicographic order of
/// block indices, then weight compositions in colex order.
void enum_weighted_configs(int g, int w, const std::function<void(const WeightedConfiguration&)>& visit);
std::vector<WeightedConfiguration> list_weighted_configs(int g, int w);

/// sum_b b! S(g,b) C(w+b-1, b-1), with S the Stirling numbers of the
/// second kind.
mpz_class config_count(int g, int w);

/// (-1)^b (1/b) prod_i P_{w_i}(t_i), t_i the sum of the values in block i.
Rational config_eval(const WeightedConfiguration& cfg, const std::vector<Rational>& values);
/// The same with the symbolic values c1..cg.
MultiPoly config_eval_symbolic(const WeightedConfiguration& cfg, int g);

/// g pairwise distinct small rationals drawn from SplitMix64(seed).
std::vector<Rational> random_distinct_rationals(int g, std::uint64_t seed);

struct ChapmanReport {
    int g = 0;
    int w = 0;
    bool symbolic = false;
    std::uint64_t seed = 0;
    std::string values;   // the sampled rationals, rational mode only
    std::string configs;  // number of configurations summed
    std::string sum;      // exact sum; "0" when the theorem holds
    bool zero = false;
};

ChapmanReport chapman_check(int g, int w, bool symbolic, std::uint64_t seed = 0, int threads = 1);

}  // namespace genius

#endif
