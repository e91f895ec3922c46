#include "dunklpoly/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace dunklpoly {

namespace {

mpq_class make_canonical(mpq_class v) {
    if (v.get_den() == 0)
        throw std::invalid_argument("Rational: zero denominator");
    v.canonicalize();
    return v;
}

}  // namespace

Rational::Rational(long num, long den)
    : value_(make_canonical(mpq_class(mpz_class(num), mpz_class(den)))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den)
    : value_(make_canonical(mpq_class(num, den))) {}

Rational::Rational(mpq_class value) : value_(make_canonical(std::move(value))) {}

Rational Rational::parse(std::string_view text) {
    const auto bad = [&] {
        return std::invalid_argument("Rational: cannot parse \"" + std::string(text) + "\"");
    };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            mpz_class num(std::string(text), 10);
            return Rational(num, mpz_class(1));
        }
        const auto num_part = text.substr(0, slash);
        const auto den_part = text.substr(slash + 1);
        if (num_part.empty() || den_part.empty() ||
            den_part.find('/') != std::string_view::npos)
            throw bad();
        mpz_class num(std::string(num_part), 10);
        mpz_class den(std::string(den_part), 10);
        if (den == 0) throw bad();
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw bad();
    }
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw std::invalid_argument("Rational: division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.value_;
}

Rational abs(const Rational& r) {
    return r.sign() < 0 ? -r : r;
}

Rational inverse(const Rational& r) {
    if (r.is_zero())
        throw std::invalid_argument("Rational: inverse of zero");
    return Rational(1) / r;
}

Rational pow(const Rational& r, int e) {
    if (e == 0) return Rational(1);
    if (r.is_zero() && e < 0)
        throw std::invalid_argument("Rational: negative power of zero");
    const unsigned long k = static_cast<unsigned long>(e < 0 ? -long(e) : long(e));
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), r.numerator().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), r.denominator().get_mpz_t(), k);
    return e > 0 ? Rational(num, den) : Rational(den, num);
}

}  // namespace dunklpoly
