#include "genius/graphlab.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "genius/parallel.hpp"
#include "genius/rational.hpp"
#include "genius/rng.hpp"

namespace genius {

namespace {

void check_side(int nside) {
    if (nside < 1 || nside > BipartiteGraph::kMaxSide) {
        throw std::invalid_argument("nside must be in 1.." + std::to_string(BipartiteGraph::kMaxSide));
    }
}

// Row i as a number whose most significant of nside bits is column 0, so
// numeric order is the lexicographic order of the printed row.
std::uint32_t row_key(std::uint32_t row, int n) {
    std::uint32_t key = 0;
    for (int c = 0; c < n; ++c) {
        if ((row >> c) & 1U) {
            key |= 1U << (n - 1 - c);
        }
    }
    return key;
}

std::uint32_t key_row(std::uint32_t key, int n) { return row_key(key, n); }

// Search over column permutations for the lexicographically largest matrix
// of row-sorted keys.
class CanonSearch {
public:
    explicit CanonSearch(const BipartiteGraph& g) : n_(g.nside), rows_(g.rows), used_(n_, false), keys_(n_, 0) {}

    void run() { descend(0); }
    const std::vector<std::uint32_t>& best() const { return best_; }
    long hits() const { return hits_; }

private:
    void descend(int depth) {
        if (depth == n_) {
            std::vector<std::uint32_t> sorted = keys_;
            std::sort(sorted.begin(), sorted.end(), std::greater<>());
            if (best_.empty() || sorted > best_) {
                best_ = std::move(sorted);
                hits_ = 1;
            } else if (sorted == best_) {
                ++hits_;
            }
            return;
        }
        for (int c = 0; c < n_; ++c) {
            if (used_[c]) {
                continue;
            }
            used_[c] = true;
            std::uint32_t top = 0;
            for (int i = 0; i < n_; ++i) {
                keys_[i] = (keys_[i] << 1) | ((rows_[i] >> c) & 1U);
                top = std::max(top, keys_[i]);
            }
            // The first row of any completion starts with the largest prefix.
            const int shift = n_ - depth - 1;
            if (best_.empty() || top >= (best_[0] >> shift)) {
                descend(depth + 1);
            }
            for (int i = 0; i < n_; ++i) {
                keys_[i] >>= 1;
            }
            used_[c] = false;
        }
    }

    int n_;
    std::vector<std::uint32_t> rows_;
    std::vector<bool> used_;
    std::vector<std::uint32_t> keys_;
    std::vector<std::uint32_t> best_;
    long hits_ = 0;
};

BipartiteGraph from_keys(const std::vector<std::uint32_t>& keys, int n, int r) {
    BipartiteGraph g;
    g.nside = n;
    g.r = r;
    for (std::uint32_t k : keys) {
        g.rows.push_back(key_row(k, n));
    }
    return g;
}

bool graph_less(const BipartiteGraph& a, const BipartiteGraph& b) {
    std::vector<std::uint32_t> ka;
    std::vector<std::uint32_t> kb;
    for (std::uint32_t x : a.rows) {
        ka.push_back(row_key(x, a.nside));
    }
    for (std::uint32_t x : b.rows) {
        kb.push_back(row_key(x, b.nside));
    }
    return ka < kb;
}

// Orderly generation: rows non-increasing and columns non-increasing
// (doubly lexical), which every matrix admits after permuting rows and
// columns.
class DoublyLexical {
public:
    DoublyLexical(int n, int r) : n_(n), r_(r) {
        for (std::uint32_t k = 0; k < (1U << n); ++k) {
            if (std::popcount(k) == r) {
                cands_.push_back(k);
            }
        }
        std::sort(cands_.begin(), cands_.end(), std::greater<>());
    }

    const std::vector<std::uint32_t>& candidates() const { return cands_; }

    // Every completion whose first two rows are cands_[0] and second.
    template <class Visit>
    void run_from(std::uint32_t second, Visit&& visit) {
        std::vector<std::uint32_t> keys(n_, 0);
        std::vector<int> colsum(n_, 0);
        const std::uint32_t all_tied = n_ > 1 ? (1U << (n_ - 1)) - 1 : 0;
        if (!place(keys, colsum, 0, cands_[0], cands_[0], all_tied)) {
            return;
        }
        const std::uint32_t tied = next_ties(all_tied, cands_[0]);
        if (n_ == 1) {
            visit(keys);
            return;
        }
        if (!place(keys, colsum, 1, second, cands_[0], tied)) {
            return;
        }
        recurse(keys, colsum, 2, next_ties(tied, second), visit);
    }

private:
    // Bit p of the tie mask: columns p and p+1 are equal so far; key bit
    // for column p is (n-1-p).
    std::uint32_t next_ties(std::uint32_t tied, std::uint32_t key) const {
        std::uint32_t out = 0;
        for (int p = 0; p + 1 < n_; ++p) {
            const bool a = (key >> (n_ - 1 - p)) & 1U;
            const bool b = (key >> (n_ - 2 - p)) & 1U;
            if (((tied >> p) & 1U) && a == b) {
                out |= 1U << p;
            }
        }
        return out;
    }

    bool place(std::vector<std::uint32_t>& keys, std::vector<int>& colsum, int row, std::uint32_t key,
               std::uint32_t prev, std::uint32_t tied) const {
        if (key > prev) {
            return false;
        }
        for (int p = 0; p + 1 < n_; ++p) {
            if (((tied >> p) & 1U) && !((key >> (n_ - 1 - p)) & 1U) && ((key >> (n_ - 2 - p)) & 1U)) {
                return false;
            }
        }
        const int left_after = n_ - 1 - row;
        for (int p = 0; p < n_; ++p) {
            const int s = colsum[p] + static_cast<int>((key >> (n_ - 1 - p)) & 1U);
            if (s > r_ || r_ - s > left_after) {
                return false;
            }
        }
        for (int p = 0; p < n_; ++p) {
            colsum[p] += static_cast<int>((key >> (n_ - 1 - p)) & 1U);
        }
        keys[row] = key;
        return true;
    }

    template <class Visit>
    void recurse(std::vector<std::uint32_t>& keys, std::vector<int>& colsum, int row, std::uint32_t tied,
                 Visit& visit) {
        if (row == n_) {
            visit(keys);
            return;
        }
        for (std::uint32_t key : cands_) {
            if (key > keys[row - 1]) {
                continue;
            }
            if (!place(keys, colsum, row, key, keys[row - 1], tied)) {
                continue;
            }
            recurse(keys, colsum, row + 1, next_ties(tied, key), visit);
            for (int p = 0; p < n_; ++p) {
                colsum[p] -= static_cast<int>((key >> (n_ - 1 - p)) & 1U);
            }
        }
    }

    int n_;
    int r_;
    std::vector<std::uint32_t> cands_;
};

CensusWitness witness_for(const BipartiteGraph& g, const PositivityResult& pr) {
    return CensusWitness{g.serialize(), g.connected(), pr.violations};
}

}  // namespace

void BipartiteGraph::validate() const {
    check_side(nside);
    if (static_cast<int>(rows.size()) != nside) {
        throw std::invalid_argument("graph has " + std::to_string(rows.size()) + " rows, expected " +
                                    std::to_string(nside));
    }
    if (r < 0 || r > nside) {
        throw std::invalid_argument("r out of range");
    }
    std::vector<int> colsum(nside, 0);
    for (int i = 0; i < nside; ++i) {
        if (rows[i] >> nside) {
            throw std::invalid_argument("row " + std::to_string(i) + " has bits beyond nside");
        }
        if (std::popcount(rows[i]) != r) {
            throw std::invalid_argument("row " + std::to_string(i) + " does not sum to r");
        }
        for (int j = 0; j < nside; ++j) {
            colsum[j] += has_edge(i, j);
        }
    }
    for (int j = 0; j < nside; ++j) {
        if (colsum[j] != r) {
            throw std::invalid_argument("column " + std::to_string(j) + " does not sum to r");
        }
    }
}

int BipartiteGraph::edge_count() const {
    int e = 0;
    for (std::uint32_t row : rows) {
        e += std::popcount(row);
    }
    return e;
}

BipartiteGraph BipartiteGraph::transpose() const {
    BipartiteGraph t{nside, r, std::vector<std::uint32_t>(nside, 0)};
    for (int i = 0; i < nside; ++i) {
        for (int j = 0; j < nside; ++j) {
            if (has_edge(i, j)) {
                t.rows[j] |= 1U << i;
            }
        }
    }
    return t;
}

bool BipartiteGraph::connected() const {
    if (nside == 0) {
        return true;
    }
    std::uint32_t left = 1;
    std::uint32_t right = 0;
    for (bool grew = true; grew;) {
        grew = false;
        for (int i = 0; i < nside; ++i) {
            const bool reached = (left >> i) & 1U;
            if (reached && (rows[i] & ~right)) {
                right |= rows[i];
                grew = true;
            }
            if (!reached && (rows[i] & right)) {
                left |= 1U << i;
                grew = true;
            }
        }
    }
    const std::uint32_t full = nside == 32 ? ~0U : (1U << nside) - 1;
    return left == full && right == full;
}

std::string BipartiteGraph::serialize() const {
    std::string s = "nside=" + std::to_string(nside) + " r=" + std::to_string(r) + " rows=";
    for (int i = 0; i < nside; ++i) {
        if (i) {
            s += ',';
        }
        for (int j = 0; j < nside; ++j) {
            s += has_edge(i, j) ? '1' : '0';
        }
    }
    return s;
}

BipartiteGraph BipartiteGraph::from_rows(const std::vector<std::string>& text_rows) {
    BipartiteGraph g;
    g.nside = static_cast<int>(text_rows.size());
    check_side(g.nside);
    for (const std::string& t : text_rows) {
        if (static_cast<int>(t.size()) != g.nside) {
            throw std::invalid_argument("row '" + t + "' has the wrong length");
        }
        std::uint32_t row = 0;
        for (int j = 0; j < g.nside; ++j) {
            if (t[j] == '1') {
                row |= 1U << j;
            } else if (t[j] != '0') {
                throw std::invalid_argument("row '" + t + "' is not a 0/1 string");
            }
        }
        g.rows.push_back(row);
    }
    g.r = std::popcount(g.rows[0]);
    g.validate();
    return g;
}

BipartiteGraph BipartiteGraph::parse(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    int nside = -1;
    int r = -1;
    std::vector<std::string> rows;
    while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("bad graph token '" + tok + "'");
        }
        const std::string key = tok.substr(0, eq);
        const std::string val = tok.substr(eq + 1);
        if (key == "nside") {
            nside = std::stoi(val);
        } else if (key == "r") {
            r = std::stoi(val);
        } else if (key == "rows") {
            std::istringstream rs(val);
            for (std::string row; std::getline(rs, row, ',');) {
                rows.push_back(row);
            }
        } else {
            throw std::invalid_argument("unknown graph field '" + key + "'");
        }
    }
    BipartiteGraph g = from_rows(rows);
    if (g.nside != nside || g.r != r) {
        throw std::invalid_argument("graph header disagrees with its rows");
    }
    return g;
}

BipartiteGraph complete_bipartite(int nside) {
    check_side(nside);
    return BipartiteGraph{nside, nside, std::vector<std::uint32_t>(nside, (1U << nside) - 1)};
}

BipartiteGraph cycle_graph(int nside) {
    if (nside < 2) {
        throw std::invalid_argument("cycle_graph: nside must be at least 2");
    }
    check_side(nside);
    BipartiteGraph g{nside, 2, std::vector<std::uint32_t>(nside, 0)};
    for (int i = 0; i < nside; ++i) {
        g.rows[i] = (1U << i) | (1U << ((i + 1) % nside));
    }
    g.validate();
    return g;
}

mpz_class mbar(int v, int i) {
    if (v < 0 || i < 0 || 2 * i > v) {
        throw std::out_of_range("mbar: need 0 <= 2i <= v");
    }
    const mpz_class num = factorial(static_cast<unsigned>(v));
    mpz_class den = factorial(static_cast<unsigned>(v - 2 * i)) * factorial(static_cast<unsigned>(i));
    den <<= i;
    return num / den;
}

MatchVector match_counts(const BipartiteGraph& g) {
    check_side(g.nside);
    const int n = g.nside;
    // ways[mask]: matchings of the left vertices seen so far that use
    // exactly the right vertices in mask.
    std::vector<mpz_class> ways(std::size_t{1} << n);
    ways[0] = 1;
    for (int i = 0; i < n; ++i) {
        for (std::size_t mask = ways.size(); mask-- > 0;) {
            if (ways[mask] == 0) {
                continue;
            }
            std::uint32_t free = g.rows[i] & ~static_cast<std::uint32_t>(mask);
            while (free) {
                const std::uint32_t bit = free & (~free + 1);
                ways[mask | bit] += ways[mask];
                free ^= bit;
            }
        }
    }
    MatchVector m(n + 1);
    for (std::size_t mask = 0; mask < ways.size(); ++mask) {
        m[std::popcount(mask)] += ways[mask];
    }
    return m;
}

char sign_char(Sign s) {
    switch (s) {
        case Sign::negative:
            return '-';
        case Sign::zero:
            return '0';
        case Sign::positive:
            return '+';
    }
    return '?';
}

Sign delta_sign(const MatchVector& mv, int v, int r, int k, int i) {
    if (k < 0 || i < 0 || i + k >= static_cast<int>(mv.size())) {
        throw std::out_of_range("delta_sign: need i, k >= 0 and i + k <= nside");
    }
    if (r < 1) {
        throw std::invalid_argument("delta_sign: r must be positive");
    }
    mpz_class up = 1;
    mpz_class down = 1;
    for (int j = 0; j <= k; ++j) {
        const int t = i + j;
        if (mv[t] <= 0) {
            throw std::logic_error("delta_sign: m_" + std::to_string(t) + " = 0");
        }
        mpz_class num;
        mpz_class den;
        mpz_class tmp;
        mpz_ui_pow_ui(tmp.get_mpz_t(), static_cast<unsigned long>(v - 1), static_cast<unsigned long>(t));
        num = mv[t] * tmp;
        mpz_ui_pow_ui(tmp.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(t));
        den = tmp * mbar(v, t);
        const mpz_class c = binomial(static_cast<unsigned>(k), static_cast<unsigned>(j));
        const unsigned long e = c.get_ui();
        mpz_pow_ui(num.get_mpz_t(), num.get_mpz_t(), e);
        mpz_pow_ui(den.get_mpz_t(), den.get_mpz_t(), e);
        if ((k - j) % 2 == 0) {
            up *= num;
            down *= den;
        } else {
            up *= den;
            down *= num;
        }
    }
    const int c = cmp(up, down);
    return c < 0 ? Sign::negative : (c == 0 ? Sign::zero : Sign::positive);
}

SignLadder sign_ladder(const MatchVector& mv, int v, int r) {
    SignLadder out;
    out.nside = static_cast<int>(mv.size()) - 1;
    for (int k = 0; k <= out.nside; ++k) {
        for (int i = 0; i + k <= out.nside; ++i) {
            out.signs[{k, i}] = delta_sign(mv, v, r, k, i);
        }
    }
    return out;
}

PositivityResult positivity(const BipartiteGraph& g) {
    g.validate();
    PositivityResult res;
    res.m = match_counts(g);
    res.ladder = sign_ladder(res.m, 2 * g.nside, g.r);
    for (const auto& [ki, s] : res.ladder.signs) {
        if (s == Sign::negative) {
            res.violations.push_back(ki);
        }
    }
    res.pass = res.violations.empty();
    return res;
}

BipartiteGraph rand_regular(int nside, int r, std::uint64_t seed, int max_attempts) {
    check_side(nside);
    if (r < 1 || r > nside) {
        throw std::invalid_argument("rand_regular: need 1 <= r <= nside");
    }
    SplitMix64 rng(seed);
    const int stubs = nside * r;
    std::vector<int> right(stubs);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        for (int s = 0; s < stubs; ++s) {
            right[s] = s / r;
        }
        for (int s = stubs - 1; s > 0; --s) {
            std::swap(right[s], right[rng.below(static_cast<std::uint64_t>(s) + 1)]);
        }
        BipartiteGraph g{nside, r, std::vector<std::uint32_t>(nside, 0)};
        bool simple = true;
        for (int s = 0; s < stubs && simple; ++s) {
            const std::uint32_t bit = 1U << right[s];
            std::uint32_t& row = g.rows[s / r];
            simple = !(row & bit);
            row |= bit;
        }
        if (simple) {
            return g;
        }
    }
    throw std::runtime_error("rand_regular: no simple graph after " + std::to_string(max_attempts) + " attempts");
}

BipartiteGraph canonical_form(const BipartiteGraph& g, bool allow_swap) {
    check_side(g.nside);
    CanonSearch s(g);
    s.run();
    BipartiteGraph best = from_keys(s.best(), g.nside, g.r);
    if (allow_swap) {
        CanonSearch t(g.transpose());
        t.run();
        BipartiteGraph other = from_keys(t.best(), g.nside, g.r);
        if (graph_less(best, other)) {
            best = std::move(other);
        }
    }
    return best;
}

mpz_class side_automorphisms(const BipartiteGraph& g) {
    CanonSearch s(g);
    s.run();
    mpz_class aut = s.hits();
    const auto& keys = s.best();
    for (std::size_t a = 0; a < keys.size();) {
        std::size_t b = a;
        while (b < keys.size() && keys[b] == keys[a]) {
            ++b;
        }
        aut *= factorial(static_cast<unsigned>(b - a));
        a = b;
    }
    return aut;
}

mpz_class count_labeled(int nside, int r) {
    check_side(nside);
    if (r < 0 || r > nside) {
        return 0;
    }
    // State: how many columns still need 0, 1, ..., r more ones.
    std::map<std::vector<int>, mpz_class> states;
    std::vector<int> start(r + 1, 0);
    start[r] = nside;
    states[start] = 1;
    for (int row = 0; row < nside; ++row) {
        std::map<std::vector<int>, mpz_class> next;
        for (const auto& [st, ways] : states) {
            std::vector<int> take(r + 1, 0);
            // Choose take[c] columns of residual capacity c (c >= 1), sum r.
            auto rec = [&](auto&& self, int c, int left, mpz_class mult) -> void {
                if (c == 0) {
                    if (left != 0) {
                        return;
                    }
                    std::vector<int> ns = st;
                    for (int cc = 1; cc <= r; ++cc) {
                        ns[cc] -= take[cc];
                        ns[cc - 1] += take[cc];
                    }
                    next[ns] += ways * mult;
                    return;
                }
                for (int x = 0; x <= std::min(left, st[c]); ++x) {
                    take[c] = x;
                    self(self, c - 1, left - x, mult * binomial(static_cast<unsigned>(st[c]), static_cast<unsigned>(x)));
                }
                take[c] = 0;
            };
            rec(rec, r, r, mpz_class(1));
        }
        states = std::move(next);
    }
    std::vector<int> done(r + 1, 0);
    done[0] = nside;
    const auto it = states.find(done);
    return it == states.end() ? mpz_class(0) : it->second;
}

Enumeration enum_regular(int nside, int r, int threads) {
    check_side(nside);
    if (r < 1 || r > nside) {
        throw std::invalid_argument("enum_regular: need 1 <= r <= nside");
    }
    DoublyLexical gen(nside, r);
    auto key_less = [](const BipartiteGraph& a, const BipartiteGraph& b) { return graph_less(a, b); };
    std::set<BipartiteGraph, decltype(key_less)> found(key_less);
    std::mutex mu;

    const auto& seconds = gen.candidates();
    const std::size_t branches = nside == 1 ? 1 : seconds.size();
    parallel_for(branches, threads, [&](std::size_t b) {
        std::set<BipartiteGraph, decltype(key_less)> local(key_less);
        const std::uint32_t second = nside == 1 ? 0 : seconds[b];
        gen.run_from(second, [&](const std::vector<std::uint32_t>& keys) {
            local.insert(canonical_form(from_keys(keys, nside, r)));
        });
        std::lock_guard lock(mu);
        found.merge(local);
    });

    Enumeration out;
    out.classes.assign(found.begin(), found.end());
    out.labeled = count_labeled(nside, r);
    const mpz_class sq = factorial(static_cast<unsigned>(nside)) * factorial(static_cast<unsigned>(nside));
    for (const BipartiteGraph& g : out.classes) {
        const bool self_dual = canonical_form(g.transpose(), false) == canonical_form(g, false);
        out.labeled_from_classes += sq / side_automorphisms(g) * (self_dual ? 1 : 2);
    }
    return out;
}

CensusStats census_exhaustive(int nside, int r, int threads) {
    const Enumeration en = enum_regular(nside, r, threads);
    std::vector<PositivityResult> results(en.classes.size());
    parallel_for(en.classes.size(), threads, [&](std::size_t k) { results[k] = positivity(en.classes[k]); });

    CensusStats st;
    st.mode = "exhaustive";
    st.nside = nside;
    st.r = r;
    st.labeled_count = en.labeled.get_str();
    for (std::size_t k = 0; k < results.size(); ++k) {
        const bool conn = en.classes[k].connected();
        ++st.total;
        st.connected_total += conn;
        if (results[k].pass) {
            ++st.passing;
        } else {
            ++st.failing;
            st.connected_failing += conn;
            st.witnesses.push_back(witness_for(en.classes[k], results[k]));
        }
    }
    return st;
}

CensusStats census_sample(int nside, int r, long count, std::uint64_t seed, int threads) {
    if (count < 0) {
        throw std::invalid_argument("census_sample: negative count");
    }
    std::vector<BipartiteGraph> graphs(static_cast<std::size_t>(count));
    std::vector<PositivityResult> results(graphs.size());
    parallel_for(graphs.size(), threads, [&](std::size_t k) {
        graphs[k] = rand_regular(nside, r, derive_seed(seed, k));
        results[k] = positivity(graphs[k]);
        results[k].ladder.signs.clear();
    });
    CensusStats st;
    st.mode = "sample";
    st.nside = nside;
    st.r = r;
    for (std::size_t k = 0; k < graphs.size(); ++k) {
        const bool conn = graphs[k].connected();
        ++st.total;
        st.connected_total += conn;
        if (results[k].pass) {
            ++st.passing;
        } else {
            ++st.failing;
            st.connected_failing += conn;
            st.witnesses.push_back(witness_for(graphs[k], results[k]));
        }
    }
    return st;
}

}  // namespace genius
