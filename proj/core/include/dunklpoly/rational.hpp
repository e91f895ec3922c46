#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace dunklpoly {

/// Exact rational scalar. Every value is kept canonical: the denominator is
/// positive and coprime to the numerator. All arithmetic is exact; there is
/// no floating point anywhere in this library.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(int n) : value_(n) {}
    Rational(long n) : value_(static_cast<signed long>(n)) {}
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class value);

    /// Parses "p" or "p/q" with optional sign; rejects anything else.
    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Canonical serialization: "p/q", or just "p" when q = 1.
    std::string str() const { return value_.get_str(); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class value_;
};

Rational abs(const Rational& r);
Rational inverse(const Rational& r);

/// r^e for integer e; e < 0 requires r != 0.
Rational pow(const Rational& r, int e);

}  // namespace dunklpoly
