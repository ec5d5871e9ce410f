#ifndef GENIUS_GRAPHLAB_HPP
#define GENIUS_GRAPHLAB_HPP

#include <cstdint>
#include <gmpxx.h>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace genius {

/// Simple bipartite graph with nside vertices on each side. Row i is the
/// neighbourhood of left vertex i as a bitmask over right vertices.
struct BipartiteGraph {
    static constexpr int kMaxSide = 16;

    int nside = 0;
    int r = 0;
    std::vector<std::uint32_t> rows;

    /// Throws std::invalid_argument unless every row and column sums to r.
    void validate() const;
    bool has_edge(int i, int j) const { return (rows[i] >> j) & 1U; }
    int edge_count() const;
    BipartiteGraph transpose() const;
    bool connected() const;

    /// "nside=3 r=2 rows=110,011,101"; row strings list columns 0..nside-1.
    std::string serialize() const;
    static BipartiteGraph parse(const std::string& text);
    /// Builds and validates from 0/1 row strings; r is taken from row 0.
    static BipartiteGraph from_rows(const std::vector<std::string>& rows);

    friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;
};

BipartiteGraph complete_bipartite(int nside);
/// The 2n-cycle as a 2-regular bipartite graph.
BipartiteGraph cycle_graph(int nside);

/// m_0..m_nside.
using MatchVector = std::vector<mpz_class>;

/// Number of i-matchings of the complete graph on v vertices.
mpz_class mbar(int v, int i);

/// Exact matching counts by DP over left vertices with a mask of used right
/// vertices.
MatchVector match_counts(const BipartiteGraph& g);

enum class Sign { negative = -1, zero = 0, positive = 1 };
char sign_char(Sign s);

/// Sign of the k-th forward difference of d at i, computed as the sign of
/// prod_j q_{i+j}^{(-1)^{k-j} C(k,j)} - 1 with q_t = m_t (v-1)^t / (r^t mbar_t).
/// Requires i + k < mv.size(); throws std::logic_error on m_t = 0.
Sign delta_sign(const MatchVector& mv, int v, int r, int k, int i);

struct SignLadder {
    int nside = 0;
    std::map<std::pair<int, int>, Sign> signs;  // (k, i) with i + k <= nside
};

SignLadder sign_ladder(const MatchVector& mv, int v, int r);

struct PositivityResult {
    bool pass = true;
    std::vector<std::pair<int, int>> violations;  // (k, i)
    MatchVector m;
    SignLadder ladder;
};

PositivityResult positivity(const BipartiteGraph& g);

/// Pairing-model sample: r stubs per vertex, a random perfect matching of
/// stubs, rejected and redrawn while it has a repeated edge. Throws
/// std::runtime_error when max_attempts draws all fail.
BipartiteGraph rand_regular(int nside, int r, std::uint64_t seed, int max_attempts = 1000000);

/// Lexicographically largest row-major form under independent row and
/// column permutations and, when requested, the side swap.
BipartiteGraph canonical_form(const BipartiteGraph& g, bool allow_swap = true);

/// Order of the group of (row perm, column perm) pairs fixing g.
mpz_class side_automorphisms(const BipartiteGraph& g);

struct Enumeration {
    std::vector<BipartiteGraph> classes;  // canonical forms, sorted
    /// Labeled r-regular bipartite graphs with fixed, labeled sides, counted
    /// directly.
    mpz_class labeled;
    /// The same count rebuilt from the classes via orbit sizes.
    mpz_class labeled_from_classes;
};

/// All r-regular bipartite graphs on nside + nside vertices up to
/// isomorphism (side swap included).
Enumeration enum_regular(int nside, int r, int threads = 1);

/// Number of nside x nside 0/1 matrices with all row and column sums r.
mpz_class count_labeled(int nside, int r);

struct CensusWitness {
    std::string graph;
    bool connected = true;
    std::vector<std::pair<int, int>> violations;
};

struct CensusStats {
    std::string mode;  // "exhaustive" or "sample"
    int nside = 0;
    int r = 0;
    long total = 0;
    long passing = 0;
    long failing = 0;
    long connected_total = 0;
    long connected_failing = 0;
    std::string labeled_count;  // exhaustive only
    std::vector<CensusWitness> witnesses;
    double failing_fraction() const { return total ? static_cast<double>(failing) / total : 0.0; }
};

CensusStats census_exhaustive(int nside, int r, int threads = 1);
/// Graph k of the sample is drawn with derive_seed(seed, k).
CensusStats census_sample(int nside, int r, long count, std::uint64_t seed, int threads = 1);

}  // namespace genius

#endif
