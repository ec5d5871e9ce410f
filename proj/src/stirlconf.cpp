#include "genius/stirlconf.hpp"

#include <algorithm>
#include <stdexcept>

#include "genius/interp.hpp"
#include "genius/parallel.hpp"
#include "genius/rng.hpp"

namespace genius {

namespace {

std::vector<mpz_class> stirling1_row(int n) {
    std::vector<mpz_class> row{1};
    for (int m = 0; m < n; ++m) {
        // x(x+1)...(x+m-1) times (x+m)
        std::vector<mpz_class> next(row.size() + 1);
        for (std::size_t k = 0; k < row.size(); ++k) {
            next[k] += row[k] * m;
            next[k + 1] += row[k];
        }
        row = std::move(next);
    }
    return row;
}

void for_each_set_partition(int g, const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
    std::vector<int> label(g, 0);
    auto rec = [&](auto&& self, int i, int blocks) -> void {
        if (i == g) {
            std::vector<std::uint32_t> masks(blocks, 0);
            for (int k = 0; k < g; ++k) {
                masks[label[k]] |= 1U << k;
            }
            visit(masks);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            label[i] = b;
            self(self, i + 1, std::max(blocks, b + 1));
        }
    };
    rec(rec, 1, 1);
}

std::vector<std::vector<std::uint32_t>> set_partitions(int g) {
    std::vector<std::vector<std::uint32_t>> out;
    for_each_set_partition(g, [&](const std::vector<std::uint32_t>& m) { out.push_back(m); });
    return out;
}

// Compositions of w into b nonnegative parts, colex order (the last part
// varies slowest).
template <class Visit>
void for_each_composition(int w, int b, Visit&& visit) {
    std::vector<int> parts(b, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == 0) {
            parts[0] = left;
            visit(parts);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            parts[pos] = x;
            self(self, pos - 1, left - x);
        }
    };
    rec(rec, b - 1, w);
}

// Every ordering and weighting of one set partition.
template <class Visit>
void expand_partition(const std::vector<std::uint32_t>& blocks, int w, Visit&& visit) {
    const int b = static_cast<int>(blocks.size());
    std::vector<int> order(b);
    for (int k = 0; k < b; ++k) {
        order[k] = k;
    }
    WeightedConfiguration cfg;
    cfg.blocks.resize(b);
    do {
        for (int k = 0; k < b; ++k) {
            cfg.blocks[k] = blocks[order[k]];
        }
        for_each_composition(w, b, [&](const std::vector<int>& parts) {
            cfg.weights = parts;
            visit(cfg);
        });
    } while (std::next_permutation(order.begin(), order.end()));
}

Rational block_sign(int b) { return Rational(b % 2 == 0 ? 1 : -1, b); }

MultiPoly block_sum_symbolic(std::uint32_t mask, int g) {
    MultiPoly t;
    for (int k = 0; k < g; ++k) {
        if ((mask >> k) & 1U) {
            t += MultiPoly(indexed("c", k + 1));
        }
    }
    return t;
}

}  // namespace

mpz_class stirling1(int n, int k) {
    if (n < 0 || k < 0 || k > n) {
        throw std::out_of_range("stirling1: need 0 <= k <= n");
    }
    return stirling1_row(n)[k];
}

Var pw_var() { return Var("n"); }

MultiPoly pw_poly(int w) {
    if (w < 0) {
        throw std::out_of_range("pw_poly: w must be nonnegative");
    }
    std::vector<InterpPoint> pts;
    for (int n = w; n <= 3 * w + 2; ++n) {
        pts.push_back({Rational(n), MultiPoly(Rational(stirling1(n, n - w)))});
    }
    return interpolate_poly(pts, 2 * w, pw_var());
}

std::string WeightedConfiguration::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        s += "({";
        bool first = true;
        for (int k = 0; k < 32; ++k) {
            if ((blocks[i] >> k) & 1U) {
                s += first ? "" : ",";
                s += "c" + std::to_string(k + 1);
                first = false;
            }
        }
        s += "}:" + std::to_string(weights[i]) + ")";
    }
    return s;
}

void check_gw(int g, int w) {
    if (g < 2 || g > 20) {
        throw std::invalid_argument("g must be in 2..20");
    }
    if (w < 0 || w > g - 2) {
        throw std::invalid_argument("w must satisfy 0 <= w <= g-2 (got g=" + std::to_string(g) +
                                    ", w=" + std::to_string(w) + ")");
    }
}

void enum_weighted_configs(int g, int w, const std::function<void(const WeightedConfiguration&)>& visit) {
    check_gw(g, w);
    for_each_set_partition(g, [&](const std::vector<std::uint32_t>& blocks) { expand_partition(blocks, w, visit); });
}

std::vector<WeightedConfiguration> list_weighted_configs(int g, int w) {
    std::vector<WeightedConfiguration> out;
    enum_weighted_configs(g, w, [&](const WeightedConfiguration& c) { out.push_back(c); });
    return out;
}

mpz_class config_count(int g, int w) {
    check_gw(g, w);
    // S(n, b) by the usual recurrence.
    std::vector<std::vector<mpz_class>> s(g + 1, std::vector<mpz_class>(g + 1));
    s[0][0] = 1;
    for (int n = 1; n <= g; ++n) {
        for (int b = 1; b <= n; ++b) {
            s[n][b] = s[n - 1][b - 1] + s[n - 1][b] * b;
        }
    }
    mpz_class total = 0;
    for (int b = 1; b <= g; ++b) {
        total += factorial(static_cast<unsigned>(b)) * s[g][b] *
                 binomial(static_cast<unsigned>(w + b - 1), static_cast<unsigned>(b - 1));
    }
    return total;
}

Rational config_eval(const WeightedConfiguration& cfg, const std::vector<Rational>& values) {
    Rational out = block_sign(cfg.block_count());
    for (int i = 0; i < cfg.block_count(); ++i) {
        Rational t;
        for (std::size_t k = 0; k < values.size(); ++k) {
            if ((cfg.blocks[i] >> k) & 1U) {
                t += values[k];
            }
        }
        out *= pw_poly(cfg.weights[i]).evaluate(pw_var(), t).constant_term();
    }
    return out;
}

MultiPoly config_eval_symbolic(const WeightedConfiguration& cfg, int g) {
    MultiPoly out(block_sign(cfg.block_count()));
    for (int i = 0; i < cfg.block_count(); ++i) {
        out = out * pw_poly(cfg.weights[i]).substitute(pw_var(), block_sum_symbolic(cfg.blocks[i], g));
    }
    return out;
}

std::vector<Rational> random_distinct_rationals(int g, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < g) {
        const long num = static_cast<long>(rng.below(201)) - 100;
        const long den = static_cast<long>(rng.below(30)) + 1;
        const Rational x(num, den);
        if (std::find(out.begin(), out.end(), x) == out.end()) {
            out.push_back(x);
        }
    }
    return out;
}

ChapmanReport chapman_check(int g, int w, bool symbolic, std::uint64_t seed, int threads) {
    check_gw(g, w);
    ChapmanReport rep;
    rep.g = g;
    rep.w = w;
    rep.symbolic = symbolic;
    rep.seed = seed;

    // P_k at every block sum, shared by all configurations.
    std::vector<MultiPoly> pw;
    for (int k = 0; k <= w; ++k) {
        pw.push_back(pw_poly(k));
    }
    const std::size_t masks = std::size_t{1} << g;
    const auto parts = set_partitions(g);
    std::vector<long> counts(parts.size(), 0);

    if (symbolic) {
        std::vector<std::vector<MultiPoly>> table(masks);
        for (std::size_t m = 1; m < masks; ++m) {
            const MultiPoly t = block_sum_symbolic(static_cast<std::uint32_t>(m), g);
            for (int k = 0; k <= w; ++k) {
                table[m].push_back(pw[k].substitute(pw_var(), t));
            }
        }
        std::vector<MultiPoly> partial(parts.size());
        parallel_for(parts.size(), threads, [&](std::size_t idx) {
            PolySum acc;
            expand_partition(parts[idx], w, [&](const WeightedConfiguration& cfg) {
                MultiPoly prod(block_sign(cfg.block_count()));
                for (int i = 0; i < cfg.block_count(); ++i) {
                    prod = prod * table[cfg.blocks[i]][cfg.weights[i]];
                }
                acc.add(prod);
                ++counts[idx];
            });
            partial[idx] = acc.take();
        });
        PolySum total;
        for (const MultiPoly& p : partial) {
            total.add(p);
        }
        const MultiPoly sum = total.take();
        rep.sum = sum.to_string();
        rep.zero = sum.is_zero();
    } else {
        const std::vector<Rational> values = random_distinct_rationals(g, seed);
        for (std::size_t k = 0; k < values.size(); ++k) {
            rep.values += (k ? "," : "") + values[k].to_string();
        }
        std::vector<std::vector<Rational>> table(masks);
        for (std::size_t m = 1; m < masks; ++m) {
            Rational t;
            for (int k = 0; k < g; ++k) {
                if ((m >> k) & 1U) {
                    t += values[k];
                }
            }
            for (int k = 0; k <= w; ++k) {
                table[m].push_back(pw[k].evaluate(pw_var(), t).constant_term());
            }
        }
        std::vector<Rational> partial(parts.size());
        parallel_for(parts.size(), threads, [&](std::size_t idx) {
            Rational acc;
            Rational prod;
            expand_partition(parts[idx], w, [&](const WeightedConfiguration& cfg) {
                prod = block_sign(cfg.block_count());
                for (int i = 0; i < cfg.block_count(); ++i) {
                    prod *= table[cfg.blocks[i]][cfg.weights[i]];
                }
                acc += prod;
                ++counts[idx];
            });
            partial[idx] = acc;
        });
        Rational sum;
        for (const Rational& p : partial) {
            sum += p;
        }
        rep.sum = sum.to_string();
        rep.zero = sum.is_zero();
    }
    mpz_class n = 0;
    for (long c : counts) {
        n += c;
    }
    if (n != config_count(g, w)) {
        throw std::logic_error("chapman_check: enumerated " + n.get_str() + " configurations, expected " +
                               config_count(g, w).get_str());
    }
    rep.configs = n.get_str();
    return rep;
}

}  // namespace genius
