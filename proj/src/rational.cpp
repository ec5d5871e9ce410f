#include "genius/rational.hpp"

#include <stdexcept>

namespace genius {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    const auto first = s.find_first_not_of(" \t");
    const auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos) {
        throw std::invalid_argument("empty rational literal");
    }
    s = s.substr(first, last - first + 1);
    mpq_class q;
    if (q.set_str(s, 10) != 0) {
        throw std::invalid_argument("malformed rational literal '" + s + "'");
    }
    if (q.get_den() == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw std::domain_error("inverse of zero");
    }
    Rational r;
    mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
}

Rational Rational::pow(int e) const {
    if (e < 0) {
        return inverse().pow(-e);
    }
    Rational r;
    mpz_pow_ui(r.v_.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.v_.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

std::size_t Rational::hash() const {
    const std::size_t h1 = mpz_get_ui(v_.get_num_mpz_t()) * 0x9E3779B97F4A7C15ULL;
    const std::size_t h2 = mpz_get_ui(v_.get_den_mpz_t());
    return h1 ^ (h2 + 0x7F4A7C15ULL + (h1 << 6) + (h1 >> 2)) ^ static_cast<std::size_t>(sign() + 1);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("division by zero");
    }
    v_ /= o.v_;
    return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), tmp.get_mpq_t());
}

mpz_class factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace genius
