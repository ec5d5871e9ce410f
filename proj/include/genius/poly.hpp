#ifndef GENIUS_POLY_HPP
#define GENIUS_POLY_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "genius/rational.hpp"

namespace genius {

/// A polynomial variable. Names are an alphabetic prefix of at most five
/// characters followed by an optional decimal index (y, u12, n_inv, c3).
/// Variables order by prefix, then numerically by index, so d2 < d10.
/// Only laurent variables may carry negative exponents.
class Var {
public:
    explicit Var(std::string_view name, bool laurent = false);

    std::string name() const;
    bool laurent() const { return (bits_ & 1U) != 0; }
    std::string prefix() const;
    /// -1 when the name has no numeric suffix.
    int index() const;

    friend bool operator==(Var a, Var b) { return (a.bits_ >> 1) == (b.bits_ >> 1); }
    friend std::strong_ordering operator<=>(Var a, Var b) { return (a.bits_ >> 1) <=> (b.bits_ >> 1); }
    std::uint64_t bits() const { return bits_; }

private:
    std::uint64_t bits_ = 0;
};

/// Convenience: Var indexed("u", 3) == Var("u3").
Var indexed(std::string_view prefix, int index, bool laurent = false);

struct Factor {
    Var var;
    int exp;
};

/// Power product of variables, factors sorted by variable, no zero exponents.
class Monomial {
public:
    using Factors = boost::container::small_vector<Factor, 4>;

    Monomial() = default;
    Monomial(Var v, int exp);
    /// Throws std::domain_error on a negative exponent of a non-laurent variable.
    explicit Monomial(std::initializer_list<Factor> factors);
    static Monomial from_factors(Factors factors);

    const Factors& factors() const { return f_; }
    bool is_one() const { return f_.empty(); }
    int degree() const { return degree_; }
    int exponent(Var v) const;
    /// The monomial with v removed.
    Monomial without(Var v) const;
    Monomial inverse() const;
    /// True if every exponent in d is at most the matching exponent here,
    /// ignoring laurent variables.
    bool divisible_by(const Monomial& d) const;

    std::string to_string() const;
    std::size_t hash() const { return hash_; }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b);

private:
    void finish();

    static constexpr std::size_t kEmptyHash = 0x84222325cbf29ce4ULL;

    Factors f_;
    int degree_ = 0;
    std::size_t hash_ = kEmptyHash;
};

/// Graded lexicographic order: higher total degree first, ties broken by the
/// exponent of the smallest differing variable. less means "printed later".
std::strong_ordering grlex(const Monomial& a, const Monomial& b);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
    Monomial mono;
    Rational coef;
};

/// Sparse multivariate (Laurent where allowed) polynomial over Rational.
/// Terms are kept sorted in descending grlex order with no zero coefficients,
/// so equal polynomials have identical term lists and serializations.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    MultiPoly(int c) : MultiPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)
    MultiPoly(Var v);  // NOLINT(google-explicit-constructor)
    MultiPoly(const Monomial& m, const Rational& c = Rational(1));
    /// Builds from arbitrary (possibly repeated, possibly zero) terms.
    static MultiPoly from_terms(std::vector<Term> terms);

    /// Parses the canonical text form, e.g. "1/2*d1^2 + d2 - r^-1".
    /// Variables listed in laurent_vars are created laurent-flagged.
    static MultiPoly parse(std::string_view text, std::span<const std::string> laurent_vars = {});

    std::span<const Term> terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (coefficient of the empty monomial).
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;

    /// Sum of coefficient*monomial/v^e over terms containing v^e exactly.
    MultiPoly coefficient_in(Var v, int e) const;
    int max_degree_in(Var v) const;
    int min_degree_in(Var v) const;
    int total_degree() const;
    std::set<Var> variables() const;

    MultiPoly substitute(Var v, const MultiPoly& value) const;
    MultiPoly substitute(const std::map<Var, MultiPoly>& values) const;
    MultiPoly evaluate(Var v, const Rational& value) const { return substitute(v, MultiPoly(value)); }
    /// Renames variables; the map must be injective on the variables present.
    MultiPoly rename(const std::map<Var, Var>& names) const;
    /// Exact division by a monomial; throws if a term is not divisible.
    MultiPoly divide(const Monomial& m) const;
    MultiPoly pow(unsigned e) const;

    std::string to_string() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    /// this += a * b.
    void add_product(const MultiPoly& a, const MultiPoly& b);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator-(MultiPoly a);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

private:
    friend class PolySum;
    std::vector<Term> terms_;
};

/// Accumulates a sum of (scaled) polynomials and products in one hash table,
/// avoiding a sorted merge per addend.
class PolySum {
public:
    void add(const MultiPoly& a);
    void add(const MultiPoly& a, const Rational& scale);
    void add_product(const MultiPoly& a, const MultiPoly& b);
    void add_product(const MultiPoly& a, const MultiPoly& b, const Rational& scale);
    MultiPoly take();

private:
    std::unordered_map<Monomial, Rational, MonomialHash> acc_;
};

}  // namespace genius

#endif
