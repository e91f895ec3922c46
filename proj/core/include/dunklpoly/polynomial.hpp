#pragma once

#include <string>
#include <vector>

#include "dunklpoly/rational.hpp"

namespace dunklpoly {

/// Dense univariate polynomial over Rational. coeffs()[k] holds the x^k
/// coefficient, trailing zeros are trimmed, and the zero polynomial stores
/// no coefficients (degree() == -1).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(Rational c);
    static Polynomial monomial(int degree, Rational coeff = Rational(1));
    static Polynomial variable() { return monomial(1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const;

    /// x^k coefficient; zero outside the stored range.
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const;

    Rational operator()(const Rational& x) const;

    Polynomial reflected() const;  // p(-x)
    bool is_even() const;
    bool is_odd() const;

    /// p(x) * x^k
    Polynomial times_x(int k = 1) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
    friend Polynomial operator-(const Polynomial& a);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { a *= c; return a; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { a *= c; return a; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Human readable form, e.g. "x^3 - 2x".
    std::string str(std::string_view var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

Polynomial derivative(const Polynomial& f);

/// f(g(x)) by Horner's scheme.
Polynomial compose(const Polynomial& f, const Polynomial& g);

/// f(a x + b)
Polynomial compose_affine(const Polynomial& f, const Rational& a, const Rational& b);

/// Exact quotient f / g; throws std::logic_error if the remainder is nonzero
/// and std::invalid_argument if g is zero.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

}  // namespace dunklpoly
