#pragma once

#include "lefzeta/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lefzeta {

// Univariate polynomial over the rationals. Coefficients are stored lowest
// degree first with no trailing zeros, so equal polynomials compare equal.
class Polynomial {
public:
    Polynomial() = default; // zero
    explicit Polynomial(Rational constant);

    static Polynomial from_coeffs(std::vector<Rational> coeffs);
    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial(Rational(1)); }
    static Polynomial monomial(int degree, Rational coeff = Rational(1));

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;

    Rational coeff(int i) const; // 0 outside the stored range
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational constant_term() const { return coeff(0); }
    Rational leading() const;

    Rational operator()(const Rational& x) const;
    Polynomial derivative() const;
    Polynomial monic() const;
    // Coefficient reversal within degree n: c_i -> c_{n-i}. With n = degree()
    // this turns det(tI - A) into det(I - tA).
    Polynomial reversed(int n) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

    // Euclidean division; throws std::invalid_argument on a zero divisor.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
    // Monic gcd; gcd(0, 0) = 0.
    static Polynomial gcd(Polynomial a, Polynomial b);

    std::string to_string(std::string_view var = "t") const;

private:
    std::vector<Rational> coeffs_;
    void trim();
};

// Truncated power series helpers; all results keep coefficients 0..n-1.
Polynomial series_truncate(const Polynomial& p, int n);
Polynomial series_mul(const Polynomial& a, const Polynomial& b, int n);
// Requires p(0) != 0.
Polynomial series_inverse(const Polynomial& p, int n);

} // namespace lefzeta
