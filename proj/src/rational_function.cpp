#include "lefzeta/rational_function.hpp"

#include <stdexcept>

namespace lefzeta {

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator) {
    if (denominator.is_zero())
        throw std::invalid_argument("rational function with zero denominator");
    if (numerator.is_zero()) {
        num_ = Polynomial::zero();
        den_ = Polynomial::one();
        return;
    }
    const Polynomial g = Polynomial::gcd(numerator, denominator);
    num_ = Polynomial::divmod(numerator, g).first;
    den_ = Polynomial::divmod(denominator, g).first;
    const Rational c0 = den_.constant_term();
    const Rational scale = (c0 != 0) ? c0 : den_.leading();
    num_ *= 1 / scale;
    den_ *= 1 / scale;
}

std::string RationalFunction::to_string(std::string_view var) const {
    if (den_.is_one())
        return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

} // namespace lefzeta
