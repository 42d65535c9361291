#include "circa/rational.hpp"

#include <cctype>

namespace circa {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        mpz_class num, den;
        if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0)
            throw std::invalid_argument("Rational: bad fraction '" + s + "'");
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument("Rational: bad decimal '" + s + "'");
        mpz_class num;
        if (num.set_str(digits, 10) != 0)
            throw std::invalid_argument("Rational: bad decimal '" + s + "'");
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        return Rational(num, den);
    }
    mpz_class num;
    if (num.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational: bad integer '" + s + "'");
    return Rational(num);
}

Rational Rational::pow2(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e >= 0 ? e : -e));
    return e >= 0 ? Rational(p) : Rational(mpz_class(1), p);
}

Rational Rational::abs() const {
    return sign() >= 0 ? *this : -*this;
}

long Rational::mag_bits() const {
    if (is_zero()) throw std::domain_error("Rational::mag_bits of zero");
    // |x| = |num|/den; sizeinbase gives a with 2^(a-1) <= |num| < 2^a.
    long a = static_cast<long>(mpz_sizeinbase(v_.get_num().get_mpz_t(), 2));
    long b = static_cast<long>(mpz_sizeinbase(v_.get_den().get_mpz_t(), 2));
    // |x| < 2^a / 2^(b-1) = 2^(a-b+1)
    return a - b + 1;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

std::string Rational::to_string() const {
    return v_.get_str();
}

std::optional<std::string> Rational::to_decimal() const {
    mpz_class den = denominator();
    unsigned long twos = 0, fives = 0;
    while (mpz_even_p(den.get_mpz_t())) { den /= 2; ++twos; }
    while (den % 5 == 0) { den /= 5; ++fives; }
    if (den != 1) return std::nullopt;
    // scale numerator so that value = scaled / 10^k with k = max(twos, fives)
    unsigned long k = std::max(twos, fives);
    mpz_class scaled = numerator();
    mpz_class mul;
    mpz_ui_pow_ui(mul.get_mpz_t(), 2, k - twos);
    scaled *= mul;
    mpz_ui_pow_ui(mul.get_mpz_t(), 5, k - fives);
    scaled *= mul;
    bool neg = scaled < 0;
    std::string digits = mpz_class(::abs(scaled)).get_str();
    std::string out = neg ? "-" : "";
    if (k == 0) return out + digits;
    if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
    digits.insert(digits.size() - k, ".");
    // strip trailing fractional zeros but keep at least one digit after the point
    size_t last = digits.find_last_not_of('0');
    if (digits[last] == '.') ++last;
    digits.erase(last + 1);
    return out + digits;
}

}  // namespace circa
