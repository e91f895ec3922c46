#include "dunklpoly/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace dunklpoly {

namespace {
const Rational kZero(0);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Polynomial Polynomial::constant(Rational c) {
    if (c.is_zero()) return Polynomial();
    return Polynomial(std::vector<Rational>{std::move(c)});
}

Polynomial Polynomial::monomial(int degree, Rational coeff) {
    if (degree < 0)
        throw std::invalid_argument("Polynomial::monomial: negative degree");
    if (coeff.is_zero()) return Polynomial();
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, kZero);
    c.back() = std::move(coeff);
    return Polynomial(std::move(c));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool Polynomial::is_monic() const {
    return !coeffs_.empty() && coeffs_.back() == Rational(1);
}

const Rational& Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Polynomial::leading() const {
    if (coeffs_.empty())
        throw std::invalid_argument("Polynomial::leading: zero polynomial");
    return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::reflected() const {
    std::vector<Rational> c = coeffs_;
    for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
    return Polynomial(std::move(c));
}

bool Polynomial::is_even() const {
    for (std::size_t k = 1; k < coeffs_.size(); k += 2)
        if (!coeffs_[k].is_zero()) return false;
    return true;
}

bool Polynomial::is_odd() const {
    for (std::size_t k = 0; k < coeffs_.size(); k += 2)
        if (!coeffs_[k].is_zero()) return false;
    return true;
}

Polynomial Polynomial::times_x(int k) const {
    if (k < 0) throw std::invalid_argument("Polynomial::times_x: negative shift");
    if (is_zero() || k == 0) return *this;
    std::vector<Rational> c(static_cast<std::size_t>(k), kZero);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

Polynomial operator-(const Polynomial& a) {
    std::vector<Rational> c = a.coeffs_;
    for (auto& v : c) v = -v;
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(c));
}

std::string Polynomial::str(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeff(k);
        if (c.is_zero()) continue;
        const Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) out << "-";
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        const bool unit = (mag == Rational(1));
        if (k == 0) {
            out << mag.str();
        } else {
            if (!unit) out << mag.str() << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

Polynomial derivative(const Polynomial& f) {
    if (f.degree() < 1) return Polynomial();
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(f.degree()));
    for (int k = 1; k <= f.degree(); ++k) c.push_back(Rational(k) * f.coeff(k));
    return Polynomial(std::move(c));
}

Polynomial compose(const Polynomial& f, const Polynomial& g) {
    Polynomial acc;
    for (int k = f.degree(); k >= 0; --k) {
        acc = acc * g;
        acc += Polynomial::constant(f.coeff(k));
    }
    return acc;
}

Polynomial compose_affine(const Polynomial& f, const Rational& a, const Rational& b) {
    return compose(f, Polynomial(std::vector<Rational>{b, a}));
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero())
        throw std::invalid_argument("divide_exact: division by the zero polynomial");
    if (f.is_zero()) return Polynomial();
    if (f.degree() < g.degree())
        throw std::logic_error("divide_exact: nonzero remainder (degree too small)");

    std::vector<Rational> rem(f.coeffs());
    const int dq = f.degree() - g.degree();
    std::vector<Rational> quot(static_cast<std::size_t>(dq) + 1, Rational(0));
    const Rational& lead = g.leading();
    for (int k = dq; k >= 0; --k) {
        Rational q = rem[static_cast<std::size_t>(k + g.degree())] / lead;
        quot[static_cast<std::size_t>(k)] = q;
        if (q.is_zero()) continue;
        for (int j = 0; j <= g.degree(); ++j)
            rem[static_cast<std::size_t>(k + j)] -= q * g.coeff(j);
    }
    for (const auto& r : rem)
        if (!r.is_zero())
            throw std::logic_error("divide_exact: nonzero remainder");
    return Polynomial(std::move(quot));
}

}  // namespace dunklpoly
