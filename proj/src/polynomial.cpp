#include "lefzeta/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace lefzeta {

Polynomial::Polynomial(Rational constant) {
    if (constant != 0)
        coeffs_.push_back(std::move(constant));
}

Polynomial Polynomial::from_coeffs(std::vector<Rational> coeffs) {
    Polynomial p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

Polynomial Polynomial::monomial(int degree, Rational coeff) {
    if (degree < 0)
        throw std::invalid_argument("negative monomial degree");
    Polynomial p;
    if (coeff != 0) {
        p.coeffs_.assign(degree + 1, Rational(0));
        p.coeffs_[degree] = std::move(coeff);
    }
    return p;
}

bool Polynomial::is_one() const {
    return coeffs_.size() == 1 && coeffs_[0] == 1;
}

Rational Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
        return Rational(0);
    return coeffs_[i];
}

Rational Polynomial::leading() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    Polynomial d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d.coeffs_.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
    d.trim();
    return d;
}

Polynomial Polynomial::monic() const {
    if (is_zero())
        return *this;
    Polynomial p = *this;
    const Rational lead = p.coeffs_.back();
    for (auto& c : p.coeffs_)
        c /= lead;
    return p;
}

Polynomial Polynomial::reversed(int n) const {
    if (n < degree())
        throw std::invalid_argument("reversal degree below polynomial degree");
    std::vector<Rational> rev(n + 1, Rational(0));
    for (int i = 0; i <= degree(); ++i)
        rev[n - i] = coeffs_[i];
    return from_coeffs(std::move(rev));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> prod(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            prod[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(prod);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& c : p.coeffs_)
        c = -c;
    return p;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero())
        throw std::invalid_argument("polynomial division by zero");
    Polynomial rem = a;
    Polynomial quot;
    const int db = b.degree();
    const Rational lead = b.coeffs_.back();
    while (!rem.is_zero() && rem.degree() >= db) {
        const int shift = rem.degree() - db;
        const Rational factor = rem.coeffs_.back() / lead;
        quot += monomial(shift, factor);
        rem -= monomial(shift, factor) * b;
    }
    return {std::move(quot), std::move(rem)};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string Polynomial::to_string(std::string_view var) const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0)
            continue;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative)
                out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const bool fractional = mag.get_den() != 1;
        if (i == 0) {
            out << mag.get_str();
        } else {
            if (mag != 1)
                out << (fractional ? "(" + mag.get_str() + ")" : mag.get_str());
            out << var;
            if (i > 1)
                out << "^" << i;
        }
    }
    return out.str();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Polynomial series_truncate(const Polynomial& p, int n) {
    std::vector<Rational> c;
    for (int i = 0; i < n; ++i)
        c.push_back(p.coeff(i));
    return Polynomial::from_coeffs(std::move(c));
}

Polynomial series_mul(const Polynomial& a, const Polynomial& b, int n) {
    std::vector<Rational> c(n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; i + j < n; ++j)
            c[i + j] += a.coeff(i) * b.coeff(j);
    return Polynomial::from_coeffs(std::move(c));
}

Polynomial series_inverse(const Polynomial& p, int n) {
    const Rational c0 = p.constant_term();
    if (c0 == 0)
        throw std::invalid_argument("series inverse needs a unit constant term");
    std::vector<Rational> inv(n, Rational(0));
    if (n > 0)
        inv[0] = 1 / c0;
    for (int k = 1; k < n; ++k) {
        Rational acc(0);
        for (int i = 1; i <= k; ++i)
            acc += p.coeff(i) * inv[k - i];
        inv[k] = -acc / c0;
    }
    return Polynomial::from_coeffs(std::move(inv));
}

} // namespace lefzeta
