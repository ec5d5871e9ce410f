#include "genius/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_map>

namespace genius {

namespace {

constexpr int kPrefixChars = 5;
constexpr int kMaxIndex = 65534;

void check_exponent(const Factor& f) {
    if (f.exp < 0 && !f.var.laurent()) {
        throw std::domain_error("exponent-range violation: negative exponent on non-laurent variable " +
                                f.var.name());
    }
}

std::size_t mix(std::size_t h, std::uint64_t v) {
    v *= 0xff51afd7ed558ccdULL;
    v ^= v >> 33;
    return (h ^ v) * 0x100000001b3ULL + 0x9E3779B97F4A7C15ULL;
}

}  // namespace

Var::Var(std::string_view name, bool laurent) {
    std::size_t split = name.size();
    while (split > 0 && std::isdigit(static_cast<unsigned char>(name[split - 1]))) {
        --split;
    }
    const std::string_view prefix = name.substr(0, split);
    const std::string_view digits = name.substr(split);
    if (prefix.empty() || prefix.size() > kPrefixChars) {
        throw std::invalid_argument("bad variable name '" + std::string(name) + "'");
    }
    for (char c : prefix) {
        if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) {
            throw std::invalid_argument("bad variable name '" + std::string(name) + "'");
        }
    }
    int index = -1;
    if (!digits.empty()) {
        if (digits.size() > 5 || (digits.size() > 1 && digits[0] == '0')) {
            throw std::invalid_argument("bad variable index in '" + std::string(name) + "'");
        }
        index = std::stoi(std::string(digits));
        if (index > kMaxIndex) {
            throw std::invalid_argument("variable index too large in '" + std::string(name) + "'");
        }
    }
    std::uint64_t bits = 0;
    for (int i = 0; i < kPrefixChars; ++i) {
        const std::uint64_t c = i < static_cast<int>(prefix.size()) ? static_cast<unsigned char>(prefix[i]) : 0;
        bits |= c << (56 - 8 * i);
    }
    bits |= static_cast<std::uint64_t>(index + 1) << 8;
    bits |= laurent ? 1U : 0U;
    bits_ = bits;
}

Var indexed(std::string_view prefix, int index, bool laurent) {
    return Var(std::string(prefix) + std::to_string(index), laurent);
}

std::string Var::prefix() const {
    std::string scratch;
    for (int i = 0; i < kPrefixChars; ++i) {
        const char c = static_cast<char>((bits_ >> (56 - 8 * i)) & 0xFF);
        if (c == 0) {
            break;
        }
        scratch.push_back(c);
    }
    return scratch;
}

int Var::index() const { return static_cast<int>((bits_ >> 8) & 0xFFFF) - 1; }

std::string Var::name() const {
    std::string s(prefix());
    if (index() >= 0) {
        s += std::to_string(index());
    }
    return s;
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Var v, int exp) {
    if (exp != 0) {
        f_.push_back({v, exp});
        check_exponent(f_.back());
    }
    finish();
}

Monomial::Monomial(std::initializer_list<Factor> factors) {
    Factors f(factors.begin(), factors.end());
    *this = from_factors(std::move(f));
}

Monomial Monomial::from_factors(Factors factors) {
    std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.var < b.var; });
    Monomial m;
    for (const Factor& f : factors) {
        if (!m.f_.empty() && m.f_.back().var == f.var) {
            if (m.f_.back().var.laurent() != f.var.laurent()) {
                throw std::invalid_argument("variable " + f.var.name() + " used with conflicting laurent flags");
            }
            m.f_.back().exp += f.exp;
            if (m.f_.back().exp == 0) {
                m.f_.pop_back();
            }
        } else if (f.exp != 0) {
            m.f_.push_back(f);
        }
    }
    for (const Factor& f : m.f_) {
        check_exponent(f);
    }
    m.finish();
    return m;
}

void Monomial::finish() {
    degree_ = 0;
    hash_ = kEmptyHash;
    for (const Factor& f : f_) {
        degree_ += f.exp;
        hash_ = mix(hash_, (f.var.bits() >> 1) * 131 + static_cast<std::uint64_t>(static_cast<std::int64_t>(f.exp)));
    }
}

int Monomial::exponent(Var v) const {
    for (const Factor& f : f_) {
        if (f.var == v) {
            return f.exp;
        }
    }
    return 0;
}

Monomial Monomial::without(Var v) const {
    Monomial m;
    for (const Factor& f : f_) {
        if (!(f.var == v)) {
            m.f_.push_back(f);
        }
    }
    m.finish();
    return m;
}

Monomial Monomial::inverse() const {
    Monomial m;
    for (const Factor& f : f_) {
        m.f_.push_back({f.var, -f.exp});
        check_exponent(m.f_.back());
    }
    m.finish();
    return m;
}

bool Monomial::divisible_by(const Monomial& d) const {
    for (const Factor& f : d.f_) {
        if (!f.var.laurent() && exponent(f.var) < f.exp) {
            return false;
        }
    }
    return true;
}

std::string Monomial::to_string() const {
    if (f_.empty()) {
        return "1";
    }
    std::string s;
    for (const Factor& f : f_) {
        if (!s.empty()) {
            s += '*';
        }
        s += f.var.name();
        if (f.exp != 1) {
            s += '^';
            s += std::to_string(f.exp);
        }
    }
    return s;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    auto ia = a.f_.begin();
    auto ib = b.f_.begin();
    while (ia != a.f_.end() || ib != b.f_.end()) {
        if (ib == b.f_.end() || (ia != a.f_.end() && ia->var < ib->var)) {
            m.f_.push_back(*ia++);
        } else if (ia == a.f_.end() || ib->var < ia->var) {
            m.f_.push_back(*ib++);
        } else {
            if (ia->var.laurent() != ib->var.laurent()) {
                throw std::invalid_argument("variable " + ia->var.name() + " used with conflicting laurent flags");
            }
            const int e = ia->exp + ib->exp;
            if (e != 0) {
                m.f_.push_back({ia->var, e});
                check_exponent(m.f_.back());
            }
            ++ia;
            ++ib;
        }
    }
    m.finish();
    return m;
}

bool operator==(const Monomial& a, const Monomial& b) {
    if (a.hash_ != b.hash_ || a.f_.size() != b.f_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.f_.size(); ++i) {
        if (!(a.f_[i].var == b.f_[i].var) || a.f_[i].exp != b.f_[i].exp) {
            return false;
        }
    }
    return true;
}

std::strong_ordering grlex(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) {
        return a.degree() <=> b.degree();
    }
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < fa.size() || j < fb.size()) {
        if (j == fb.size() || (i < fa.size() && fa[i].var < fb[j].var)) {
            return fa[i].exp <=> 0;
        }
        if (i == fa.size() || fb[j].var < fa[i].var) {
            return 0 <=> fb[j].exp;
        }
        if (fa[i].exp != fb[j].exp) {
            return fa[i].exp <=> fb[j].exp;
        }
        ++i;
        ++j;
    }
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- MultiPoly

namespace {

bool term_before(const Term& a, const Term& b) { return grlex(a.mono, b.mono) > 0; }

using Accumulator = std::unordered_map<Monomial, Rational, MonomialHash>;

std::vector<Term> drain(Accumulator& acc) {
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc) {
        if (!c.is_zero()) {
            out.push_back({m, std::move(c)});
        }
    }
    std::sort(out.begin(), out.end(), term_before);
    return out;
}

}  // namespace

MultiPoly::MultiPoly(const Rational& c) {
    if (!c.is_zero()) {
        terms_.push_back({Monomial(), c});
    }
}

MultiPoly::MultiPoly(Var v) { terms_.push_back({Monomial(v, 1), Rational(1)}); }

MultiPoly::MultiPoly(const Monomial& m, const Rational& c) {
    if (!c.is_zero()) {
        terms_.push_back({m, c});
    }
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
    Accumulator acc;
    acc.reserve(terms.size());
    for (Term& t : terms) {
        acc[t.mono] += t.coef;
    }
    MultiPoly p;
    p.terms_ = drain(acc);
    return p;
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

Rational MultiPoly::constant_term() const { return coefficient(Monomial()); }

Rational MultiPoly::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return grlex(t.mono, key) > 0; });
    if (it != terms_.end() && it->mono == m) {
        return it->coef;
    }
    return Rational(0);
}

MultiPoly MultiPoly::coefficient_in(Var v, int e) const {
    std::vector<Term> out;
    for (const Term& t : terms_) {
        if (t.mono.exponent(v) == e) {
            out.push_back({t.mono.without(v), t.coef});
        }
    }
    return from_terms(std::move(out));
}

int MultiPoly::max_degree_in(Var v) const {
    int d = 0;
    bool first = true;
    for (const Term& t : terms_) {
        const int e = t.mono.exponent(v);
        d = first ? e : std::max(d, e);
        first = false;
    }
    return d;
}

int MultiPoly::min_degree_in(Var v) const {
    int d = 0;
    bool first = true;
    for (const Term& t : terms_) {
        const int e = t.mono.exponent(v);
        d = first ? e : std::min(d, e);
        first = false;
    }
    return d;
}

int MultiPoly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

std::set<Var> MultiPoly::variables() const {
    std::set<Var> vars;
    for (const Term& t : terms_) {
        for (const Factor& f : t.mono.factors()) {
            vars.insert(f.var);
        }
    }
    return vars;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
    return substitute(std::map<Var, MultiPoly>{{v, value}});
}

MultiPoly MultiPoly::substitute(const std::map<Var, MultiPoly>& values) const {
    // Powers are cached per (variable, exponent).
    std::map<std::pair<std::uint64_t, int>, MultiPoly> powers;
    auto power_of = [&](Var v, const MultiPoly& base, int e) -> const MultiPoly& {
        auto key = std::make_pair(v.bits() >> 1, e);
        auto it = powers.find(key);
        if (it != powers.end()) {
            return it->second;
        }
        MultiPoly r;
        if (e < 0) {
            if (base.size() != 1) {
                throw std::domain_error("cannot substitute a non-monomial for a negative power of " + v.name());
            }
            const Term& t = base.terms_[0];
            r = MultiPoly(t.mono.inverse(), t.coef.inverse()).pow(static_cast<unsigned>(-e));
        } else {
            r = base.pow(static_cast<unsigned>(e));
        }
        return powers.emplace(key, std::move(r)).first->second;
    };

    MultiPoly result;
    Accumulator plain;
    for (const Term& t : terms_) {
        Monomial rest;
        MultiPoly factor(Rational(1));
        bool touched = false;
        Monomial::Factors kept;
        for (const Factor& f : t.mono.factors()) {
            auto it = values.find(f.var);
            if (it == values.end()) {
                kept.push_back(f);
            } else {
                factor = factor * power_of(f.var, it->second, f.exp);
                touched = true;
            }
        }
        rest = Monomial::from_factors(std::move(kept));
        if (!touched) {
            plain[rest] += t.coef;
        } else {
            result += factor * MultiPoly(rest, t.coef);
        }
    }
    MultiPoly p;
    p.terms_ = drain(plain);
    result += p;
    return result;
}

MultiPoly MultiPoly::rename(const std::map<Var, Var>& names) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        Monomial::Factors f;
        for (const Factor& x : t.mono.factors()) {
            auto it = names.find(x.var);
            f.push_back({it == names.end() ? x.var : it->second, x.exp});
        }
        out.push_back({Monomial::from_factors(std::move(f)), t.coef});
    }
    return from_terms(std::move(out));
}

MultiPoly MultiPoly::divide(const Monomial& m) const {
    MultiPoly r;
    for (const Term& t : terms_) {
        if (!t.mono.divisible_by(m)) {
            throw std::domain_error("term " + t.mono.to_string() + " not divisible by " + m.to_string());
        }
        Monomial::Factors f;
        for (const Factor& x : t.mono.factors()) {
            f.push_back(x);
        }
        for (const Factor& x : m.factors()) {
            f.push_back({x.var, -x.exp});
        }
        r.terms_.push_back({Monomial::from_factors(std::move(f)), t.coef});
    }
    std::sort(r.terms_.begin(), r.terms_.end(), term_before);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result(Rational(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1U) {
            result = result * base;
        }
        e >>= 1U;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        Rational c = t.coef;
        if (i == 0) {
            if (c.sign() < 0) {
                s += "-";
                c = -c;
            }
        } else {
            s += c.sign() < 0 ? " - " : " + ";
            if (c.sign() < 0) {
                c = -c;
            }
        }
        if (t.mono.is_one()) {
            s += c.to_string();
        } else if (c.is_one()) {
            s += t.mono.to_string();
        } else {
            s += c.to_string() + "*" + t.mono.to_string();
        }
    }
    return s;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.terms_.empty()) {
        return *this;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end()) {
            out.push_back(std::move(*a++));
            continue;
        }
        if (a == terms_.end()) {
            out.push_back(*b++);
            continue;
        }
        const auto c = grlex(a->mono, b->mono);
        if (c > 0) {
            out.push_back(std::move(*a++));
        } else if (c < 0) {
            out.push_back(*b++);
        } else {
            Rational s = a->coef + b->coef;
            if (!s.is_zero()) {
                out.push_back({std::move(a->mono), std::move(s)});
            }
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (Term& t : terms_) {
        t.coef *= c;
    }
    return *this;
}

void MultiPoly::add_product(const MultiPoly& a, const MultiPoly& b) { *this += a * b; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    if (a.terms_.empty() || b.terms_.empty()) {
        return r;
    }
    if (a.is_constant()) {
        r = b;
        return r *= a.terms_[0].coef;
    }
    if (b.is_constant()) {
        r = a;
        return r *= b.terms_[0].coef;
    }
    Accumulator acc;
    acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1U << 20));
    for (const Term& x : a.terms_) {
        for (const Term& y : b.terms_) {
            acc[x.mono * y.mono].add_product(x.coef, y.coef);
        }
    }
    r.terms_ = drain(acc);
    return r;
}

MultiPoly operator-(MultiPoly a) {
    for (Term& t : a.terms_) {
        t.coef = -t.coef;
    }
    return a;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coef == b.terms_[i].coef)) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- PolySum

void PolySum::add(const MultiPoly& a) {
    for (const Term& t : a.terms_) {
        acc_[t.mono] += t.coef;
    }
}

void PolySum::add(const MultiPoly& a, const Rational& scale) {
    for (const Term& t : a.terms_) {
        acc_[t.mono].add_product(t.coef, scale);
    }
}

void PolySum::add_product(const MultiPoly& a, const MultiPoly& b) {
    for (const Term& x : a.terms_) {
        for (const Term& y : b.terms_) {
            acc_[x.mono * y.mono].add_product(x.coef, y.coef);
        }
    }
}

void PolySum::add_product(const MultiPoly& a, const MultiPoly& b, const Rational& scale) {
    if (scale.is_zero()) {
        return;
    }
    if (a.size() <= b.size()) {
        add_product(a * scale, b);
    } else {
        add_product(a, b * scale);
    }
}

MultiPoly PolySum::take() {
    MultiPoly p;
    p.terms_ = drain(acc_);
    acc_.clear();
    return p;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
public:
    Parser(std::string_view text, std::span<const std::string> laurent) : s_(text), laurent_(laurent) {}

    MultiPoly parse() {
        MultiPoly result;
        skip();
        if (pos_ >= s_.size()) {
            fail("empty polynomial");
        }
        bool first = true;
        while (true) {
            skip();
            if (pos_ >= s_.size()) {
                break;
            }
            int sign = 1;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected + or -");
            }
            first = false;
            result += term() * Rational(sign);
        }
        return result;
    }

private:
    MultiPoly term() {
        Rational coef(1);
        Monomial::Factors factors;
        bool any = false;
        while (true) {
            skip();
            if (pos_ >= s_.size()) {
                break;
            }
            const char c = s_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coef *= number();
                any = true;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                const std::string name = identifier();
                bool lau = std::find(laurent_.begin(), laurent_.end(), name) != laurent_.end();
                int e = 1;
                skip();
                if (pos_ < s_.size() && s_[pos_] == '^') {
                    ++pos_;
                    skip();
                    int es = 1;
                    if (pos_ < s_.size() && s_[pos_] == '-') {
                        es = -1;
                        ++pos_;
                    }
                    const std::size_t start = pos_;
                    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                        ++pos_;
                    }
                    if (start == pos_) {
                        fail("expected exponent");
                    }
                    e = es * std::stoi(std::string(s_.substr(start, pos_ - start)));
                }
                factors.push_back({Var(name, lau), e});
                any = true;
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
            skip();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (!any) {
            fail("empty term");
        }
        return MultiPoly(Monomial::from_factors(std::move(factors)), coef);
    }

    Rational number() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) {
            ++pos_;
        }
        return Rational::parse(s_.substr(start, pos_ - start));
    }

    std::string identifier() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
            ++pos_;
        }
        return std::string(s_.substr(start, pos_ - start));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at column " + std::to_string(pos_) + ": " + what);
    }

    std::string_view s_;
    std::span<const std::string> laurent_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, std::span<const std::string> laurent_vars) {
    return Parser(text, laurent_vars).parse();
}

}  // namespace genius
