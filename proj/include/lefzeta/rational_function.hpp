#pragma once

#include "lefzeta/polynomial.hpp"

#include <string>
#include <string_view>

namespace lefzeta {

// Quotient of polynomials kept in a canonical reduced form: numerator and
// denominator coprime, denominator normalized so its constant term is 1
// (falling back to a monic denominator when the constant term vanishes).
// Equal functions therefore have equal coefficient lists.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::one()) {}
    RationalFunction(Polynomial numerator, Polynomial denominator);

    static RationalFunction one() { return RationalFunction(Polynomial::one(), Polynomial::one()); }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    std::string to_string(std::string_view var = "t") const;

private:
    Polynomial num_;
    Polynomial den_;
};

} // namespace lefzeta
